#include "cuttree/strips.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>

#include "json.hpp"

namespace cuttree {

namespace {

constexpr int kMaxWidth = 256;

struct WindowSpec {
  bool apexes = true;
  Capacity apex_cap = 0;  // when positive, replaces every apex capacity
};

Network build_window(const StripNetwork& s, int w, WindowSpec spec) {
  std::vector<std::string> names;
  std::vector<Network::EdgeSpec> edges;
  for (long c = -w; c <= w; ++c)
    for (const auto& p : s.pattern) names.push_back(strip_vertex_id(c, p));
  for (long c = -w; c <= w; ++c)
    for (const auto& l : s.internal)
      edges.push_back({strip_vertex_id(c, l.u), strip_vertex_id(c, l.v), l.cap});
  for (long c = -w; c < w; ++c)
    for (const auto& l : s.forward)
      edges.push_back({strip_vertex_id(c, l.u), strip_vertex_id(c + 1, l.v), l.cap});
  if (spec.apexes) {
    names.push_back("end:left");
    names.push_back("end:right");
    std::map<std::string, Capacity> left, right;
    for (const auto& l : s.forward) {
      left[strip_vertex_id(-w, l.v)] += l.cap;
      right[strip_vertex_id(w, l.u)] += l.cap;
    }
    for (const auto& [v, c] : left)
      edges.push_back({"end:left", v, spec.apex_cap > 0 ? spec.apex_cap : c});
    for (const auto& [v, c] : right)
      edges.push_back({v, "end:right", spec.apex_cap > 0 ? spec.apex_cap : c});
  }
  return Network::build(std::move(names), edges);
}

Capacity total_capacity(const StripNetwork& s) {
  Capacity t = 1;
  for (const auto& l : s.internal) t += l.cap;
  for (const auto& l : s.forward) t += l.cap;
  return t;
}

std::vector<StripNetwork::Link> read_links(const nlohmann::json& arr) {
  std::vector<StripNetwork::Link> out;
  for (const auto& e : arr) {
    const auto& c = e.at("c");
    if (!c.is_number_integer()) throw Error("link capacity must be an integer");
    out.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                   c.get<Capacity>()});
  }
  return out;
}

}  // namespace

std::string strip_vertex_id(long column, const std::string& pattern_id) {
  return "col:" + std::to_string(column) + "/" + pattern_id;
}

void StripNetwork::validate() const {
  if (pattern.empty()) throw Error("strip pattern is empty");
  std::set<std::string> ids(pattern.begin(), pattern.end());
  if (ids.size() != pattern.size()) throw Error("duplicate pattern id");
  for (const auto& p : pattern)
    if (p.empty() || p.find('/') != std::string::npos)
      throw Error("pattern id '" + p + "' is empty or contains '/'");
  auto check = [&](const std::vector<Link>& links, bool same_column) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& l : links) {
      if (!ids.count(l.u) || !ids.count(l.v))
        throw Error("link " + l.u + "-" + l.v + " names an unknown pattern id");
      if (l.cap < 1) throw Error("link " + l.u + "-" + l.v + " has capacity < 1");
      auto key = std::pair{l.u, l.v};
      if (same_column) {
        if (l.u == l.v) throw Error("loop at pattern id '" + l.u + "'");
        if (key.first > key.second) std::swap(key.first, key.second);
      }
      if (!seen.insert(key).second)
        throw Error("repeated link " + l.u + "-" + l.v);
    }
  };
  check(internal, true);
  check(forward, false);
  if (forward.empty())
    throw Error("strip has no forward links, so it is not two-ended");

  // By periodicity the strip is connected once one column is, and a path
  // between two column-0 vertices never needs to leave a window of this
  // width in practice.
  const int w = static_cast<int>(2 * pattern.size() + 2);
  const auto window = [&] {
    std::vector<std::string> names;
    for (long c = -w; c <= w; ++c)
      for (const auto& p : pattern) names.push_back(strip_vertex_id(c, p));
    return names;
  }();
  std::map<std::string, std::string> parent;
  for (const auto& n : window) parent[n] = n;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](const std::string& a, const std::string& b) {
    parent[find(a)] = find(b);
  };
  for (long c = -w; c <= w; ++c) {
    for (const auto& l : internal) unite(strip_vertex_id(c, l.u), strip_vertex_id(c, l.v));
    if (c < w)
      for (const auto& l : forward)
        unite(strip_vertex_id(c, l.u), strip_vertex_id(c + 1, l.v));
  }
  const auto root = find(strip_vertex_id(0, pattern[0]));
  for (const auto& p : pattern)
    if (find(strip_vertex_id(0, p)) != root)
      throw Error("strip is not connected (pattern id '" + p + "')");
}

StripNetwork load_strip_json(std::istream& in) {
  try {
    nlohmann::json j;
    in >> j;
    StripNetwork s;
    s.pattern = j.at("pattern").get<std::vector<std::string>>();
    s.internal = read_links(j.value("internal", nlohmann::json::array()));
    s.forward = read_links(j.at("forward"));
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed strip JSON: ") + e.what());
  }
}

StripNetwork load_strip_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_strip_json(in);
}

StripPoint StripPoint::parse(const std::string& text) {
  if (text == "end:left") return {LeftEnd, 0, {}};
  if (text == "end:right") return {RightEnd, 0, {}};
  if (text.rfind("col:", 0) == 0) {
    const auto slash = text.find('/');
    if (slash != std::string::npos && slash + 1 < text.size()) {
      const auto num = text.substr(4, slash - 4);
      std::size_t used = 0;
      long col = 0;
      try {
        col = std::stol(num, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (!num.empty() && used == num.size())
        return {Vertex, col, text.substr(slash + 1)};
    }
  }
  throw Error("bad strip endpoint '" + text +
              "' (expected end:left, end:right or col:<n>/<id>)");
}

std::string StripPoint::id() const {
  switch (kind) {
    case LeftEnd: return "end:left";
    case RightEnd: return "end:right";
    default: return strip_vertex_id(column, vertex);
  }
}

VertexIndex Truncation::locate(const StripPoint& p) const {
  if (p.kind == StripPoint::LeftEnd) return left;
  if (p.kind == StripPoint::RightEnd) return right;
  if (p.column < -width || p.column > width)
    throw Error("column " + std::to_string(p.column) + " lies outside the window");
  return net.index(p.id());
}

Truncation truncate(const StripNetwork& s, int w) {
  if (w < 0) throw Error("window width must be nonnegative");
  Truncation t;
  t.width = w;
  t.net = build_window(s, w, {});
  t.left = t.net.index("end:left");
  t.right = t.net.index("end:right");
  return t;
}

Separation separation(const StripNetwork& s, const StripPoint& x,
                      const StripPoint& y) {
  if (x == y) throw Error("identical endpoints");
  auto check_id = [&](const StripPoint& p) {
    if (p.kind == StripPoint::Vertex &&
        std::find(s.pattern.begin(), s.pattern.end(), p.vertex) == s.pattern.end())
      throw Error("unknown vertex '" + p.id() + "'");
  };
  check_id(x);
  check_id(y);

  const long reach = std::max(x.kind == StripPoint::Vertex ? std::abs(x.column) : 0,
                              y.kind == StripPoint::Vertex ? std::abs(y.column) : 0);
  if (reach >= kMaxWidth) throw Error("endpoint column too far out");
  auto value = [&](const Network& net) {
    FlowSolver solver(net.graph());
    auto locate = [&](const StripPoint& p) {
      if (p.kind == StripPoint::LeftEnd) return net.index("end:left");
      if (p.kind == StripPoint::RightEnd) return net.index("end:right");
      return net.index(p.id());
    };
    return solver.run(locate(x), locate(y));
  };

  const Capacity unbreakable = total_capacity(s);
  Capacity current = value(build_window(s, static_cast<int>(std::max(1L, reach + 1)), {}));
  for (int w = static_cast<int>(std::max(1L, reach + 1)); w < kMaxWidth; ++w) {
    const Capacity wider = value(build_window(s, w + 1, {}));
    if (wider == current &&
        value(build_window(s, w + 1, {true, unbreakable})) == wider)
      return {wider, w};
    current = wider;
  }
  throw Error("separation did not stabilize below width " + std::to_string(kMaxWidth));
}

Capacity separation_level(const StripNetwork& s, const StripPoint& x,
                          const StripPoint& y) {
  return separation(s, x, y).level;
}

WindowedTree windowed_tree(const StripNetwork& s, Capacity n, int w) {
  if (n < 1) throw Error("level must be at least 1");
  if (w < n) throw Error("window width must be at least the level");
  WindowedTree out;
  out.window = truncate(s, w);
  out.tree = build_canonical_tree(out.window.net, n);
  out.left_node = out.tree.nu[out.window.left];
  out.right_node = out.tree.nu[out.window.right];
  out.left_shared = out.tree.images[out.left_node].size() > 1;
  out.right_shared = out.tree.images[out.right_node].size() > 1;
  return out;
}

namespace {

// Net flow from columns <= c (with the left apex) to the rest.
Capacity flow_over_boundary(const Truncation& t, const FlowAssignment& f, long c) {
  VertexSet side(t.net.vertex_count());
  side.set(t.left);
  for (long col = -t.width; col <= c; ++col)
    for (VertexIndex v = 0; v < t.net.vertex_count(); ++v)
      if (t.net.name(v).rfind("col:" + std::to_string(col) + "/", 0) == 0) side.set(v);
  Capacity out = 0;
  const auto& edges = t.net.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool u_in = side.test(edges[i].u);
    if (u_in != side.test(edges[i].v)) out += u_in ? f.flow[i] : -f.flow[i];
  }
  return out;
}

}  // namespace

EndFlowCertificate end_flow_certificate(const StripNetwork& s,
                                        const StripPoint& x,
                                        const StripPoint& y, int w) {
  EndFlowCertificate cert;
  cert.window = truncate(s, w);
  cert.flow = max_flow(cert.window.net, cert.window.locate(x), cert.window.locate(y));
  cert.verified = verify_flow(cert.window.net, cert.flow);

  const auto wider = truncate(s, w + 1);
  const auto wider_flow = max_flow(wider.net, wider.locate(x), wider.locate(y));
  cert.pieced = verify_flow(wider.net, wider_flow);
  for (long c = -w; c < w && cert.pieced; ++c)
    cert.pieced = flow_over_boundary(cert.window, cert.flow, c) ==
                  flow_over_boundary(wider, wider_flow, c);
  return cert;
}

}  // namespace cuttree
