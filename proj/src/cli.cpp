#include "cuttree/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cuttree/cutring.hpp"
#include "cuttree/flow.hpp"
#include "cuttree/oracle.hpp"
#include "cuttree/strips.hpp"
#include "cuttree/structure.hpp"
#include "json.hpp"

namespace cuttree {

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

std::string render_tree(const StructureTree& t, const std::string& format) {
  return format == "dot" ? tree_to_dot(t) : tree_to_json(t);
}

}  // namespace

bool verify_network(const Network& net, std::vector<std::string>& failures) {
  const auto before = failures.size();
  auto fail = [&](std::string msg) { failures.push_back(std::move(msg)); };
  const int n = net.vertex_count();
  auto pair_name = [&](VertexIndex u, VertexIndex v) {
    return "(" + net.name(u) + "," + net.name(v) + ")";
  };

  const auto truth = oracle::connectivity(net);
  const auto lambda = all_pairs_connectivity(net);
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = u + 1; v < n; ++v)
      if (truth.at(u, v) != lambda.at(u, v))
        fail("max-flow differs from the cut minimum at " + pair_name(u, v));
  if (failures.size() > before) return false;

  const auto caps = oracle::capacity_table(net.graph());
  const oracle::Mask full = (oracle::Mask(1) << n) - 1;
  for (VertexIndex s = 0; s < n; ++s)
    for (VertexIndex t = 0; t < n; ++t) {
      if (s == t) continue;
      const auto smallest = oracle::to_mask(min_cut_smallest(net, s, t).side());
      for (oracle::Mask m = 1; m < full; ++m)
        if (((m >> s) & 1) && !((m >> t) & 1) && caps[m] == lambda.at(s, t) &&
            (smallest & ~m))
          fail("smallest min-cut for " + pair_name(s, t) +
               " is not inside every minimum cut");
    }

  NestedSystem system(n);
  for (const auto& level : oracle::canonical_levels(net)) {
    system = level_up(net, lambda, system, level.n);
    std::vector<oracle::Mask> got;
    for (const auto& side : system.members()) got.push_back(oracle::to_mask(side));
    std::sort(got.begin(), got.end());
    if (got != level.cuts)
      fail("level " + std::to_string(level.n) + " differs from the exhaustive construction");
  }
  try {
    system.validate();
  } catch (const Error& e) {
    fail(std::string("canonical system invalid: ") + e.what());
  }
  for (const auto& side : system.members()) {
    const Cut cut(side);
    if (!is_thin(net, lambda, cut) || !is_tight(net, cut))
      fail("member {" + [&] {
        std::string s;
        for (const auto& x : net.set_to_names(side)) s += (s.empty() ? "" : ",") + x;
        return s;
      }() + "} is not thin and tight");
  }

  const auto tree = tree_from_nested(net, system);
  if (nu_map(net, tree) != tree.nu) fail("vertex map disagrees with edge sides");
  const auto gh = gomory_hu_extract(tree);
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex v = u + 1; v < n; ++v) {
      if (tree.nu[u] == tree.nu[v]) fail("tree does not separate " + pair_name(u, v));
      else if (tree.path_min(u, v) != lambda.at(u, v))
        fail("tree path minimum differs from connectivity at " + pair_name(u, v));
      if (gh.path_min(u, v) != lambda.at(u, v))
        fail("Gomory-Hu path minimum differs at " + pair_name(u, v));
    }
  }
  if (gh.node_count() != n) fail("Gomory-Hu tree does not have one node per vertex");

  std::istringstream again(tree_to_json(tree));
  if (tree_to_json(tree_from_json(again)) != tree_to_json(tree))
    fail("tree JSON does not round-trip");
  return failures.size() == before;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Max-flows, canonical min-cuts and structure trees"};
  app.require_subcommand(1);
  std::string format = "json", input, output;
  app.add_option("--format", format, "Output format for trees")
      ->check(CLI::IsMember({"json", "dot"}));

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "Network file (JSON or DIMACS)")->required();
    sub->add_option("-o,--output", output, "Write the artifact here");
  };
  std::string s_id, t_id;

  auto* maxflow = app.add_subcommand("maxflow", "Maximum flow value and flow JSON");
  add_io(maxflow);
  maxflow->add_option("-s", s_id, "Source vertex")->required();
  maxflow->add_option("-t", t_id, "Sink vertex")->required();

  auto* mincut = app.add_subcommand("mincut", "Smallest minimum cut containing s");
  add_io(mincut);
  mincut->add_option("-s", s_id, "Source vertex")->required();
  mincut->add_option("-t", t_id, "Sink vertex")->required();

  auto* tree = app.add_subcommand("tree", "Canonical structure tree");
  add_io(tree);
  auto* ghtree = app.add_subcommand("ghtree", "Gomory-Hu tree from the structure tree");
  add_io(ghtree);
  auto* verify = app.add_subcommand("verify", "Cross-check everything against the exhaustive oracle");
  add_io(verify);

  auto* strip = app.add_subcommand("strip", "Periodic strip graphs");
  strip->require_subcommand(1);
  std::string x_id, y_id;
  long level = 0;
  int width = 0;
  auto* sep = strip->add_subcommand("sep", "Separation level of two vertices or ends");
  sep->add_option("-i,--input", input, "Strip JSON")->required();
  sep->add_option("-x", x_id, "end:left, end:right or col:<n>/<id>")->required();
  sep->add_option("-y", y_id, "end:left, end:right or col:<n>/<id>")->required();
  auto* stree = strip->add_subcommand("tree", "Windowed structure tree up to a level");
  stree->add_option("-i,--input", input, "Strip JSON")->required();
  stree->add_option("-o,--output", output, "Write the tree here");
  stree->add_option("-n", level, "Level")->required();
  stree->add_option("-w", width, "Window half-width")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*maxflow) {
      const auto net = load_network_file(input);
      const auto f = max_flow(net, net.index(s_id), net.index(t_id));
      out << f.value << '\n';
      if (!output.empty()) emit(flow_to_json(net, f), output, out);
      return kOk;
    }
    if (*mincut) {
      const auto net = load_network_file(input);
      const auto cut = min_cut_smallest(net, net.index(s_id), net.index(t_id));
      nlohmann::ordered_json j;
      j["side"] = net.set_to_names(cut.side());
      j["capacity"] = capacity(net, cut);
      emit(j.dump(2), output, out);
      return kOk;
    }
    if (*tree || *ghtree) {
      const auto net = load_network_file(input);
      auto t = build_canonical_tree(net);
      if (*ghtree) t = gomory_hu_extract(t);
      emit(render_tree(t, format), output, out);
      return kOk;
    }
    if (*verify) {
      const auto net = load_network_file(input);
      oracle::require_small(net);
      std::vector<std::string> failures;
      if (verify_network(net, failures)) {
        out << "ok: " << net.vertex_count() << " vertices, " << net.edge_count()
            << " edges\n";
        return kOk;
      }
      for (const auto& f : failures) err << "FAIL " << f << '\n';
      return kVerifyFailed;
    }
    if (*sep) {
      const auto s = load_strip_file(input);
      out << separation_level(s, StripPoint::parse(x_id), StripPoint::parse(y_id))
          << '\n';
      return kOk;
    }
    if (*stree) {
      const auto s = load_strip_file(input);
      const auto wt = windowed_tree(s, level, width);
      if (format == "dot") {
        emit(tree_to_dot(wt.tree), output, out);
      } else {
        nlohmann::ordered_json j;
        j["level"] = level;
        j["width"] = width;
        j["left_end"] = {{"node", wt.left_node}, {"shared", wt.left_shared}};
        j["right_end"] = {{"node", wt.right_node}, {"shared", wt.right_shared}};
        j["tree"] = nlohmann::ordered_json::parse(tree_to_json(wt.tree));
        emit(j.dump(2), output, out);
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cuttree
