#include "cuttree/network.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace cuttree {

Network Network::build(std::vector<std::string> vertices,
                       const std::vector<EdgeSpec>& edges) {
  if (vertices.empty()) throw Error("network has no vertices");
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end());
      dup != vertices.end())
    throw Error("duplicate vertex id '" + *dup + "'");

  Network net;
  net.names_ = std::move(vertices);
  for (std::size_t i = 0; i < net.names_.size(); ++i)
    net.index_.emplace(net.names_[i], static_cast<VertexIndex>(i));

  std::map<std::pair<VertexIndex, VertexIndex>, Capacity> seen;
  for (const auto& spec : edges) {
    auto u = net.index(spec.u);
    auto v = net.index(spec.v);
    if (u == v) throw Error("loop at vertex '" + spec.u + "'");
    if (spec.cap < 1)
      throw Error("edge " + spec.u + "-" + spec.v +
                  " has non-positive capacity " + std::to_string(spec.cap));
    if (u > v) std::swap(u, v);
    if (!seen.emplace(std::pair{u, v}, spec.cap).second)
      throw Error("parallel edge " + spec.u + "-" + spec.v);
  }
  net.graph_.vertex_count = static_cast<int>(net.names_.size());
  for (const auto& [uv, cap] : seen)
    net.graph_.edges.push_back({uv.first, uv.second, cap});

  net.adjacency_.assign(net.names_.size(), {});
  for (std::size_t i = 0; i < net.graph_.edges.size(); ++i) {
    const auto& e = net.graph_.edges[i];
    net.adjacency_[e.u].push_back({e.v, i});
    net.adjacency_[e.v].push_back({e.u, i});
  }
  if (!induces_connected(net, VertexSet::full(net.names_.size())))
    throw Error("network is not connected");
  return net;
}

std::optional<VertexIndex> Network::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Network::index(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error("unknown vertex '" + std::string(id) + "'");
}

std::optional<std::size_t> Network::edge_between(VertexIndex u,
                                                 VertexIndex v) const {
  for (const auto& inc : adjacency_[u])
    if (inc.neighbor == v) return inc.edge;
  return std::nullopt;
}

VertexSet Network::names_to_set(const std::vector<std::string>& ids) const {
  VertexSet s(names_.size());
  for (const auto& id : ids) s.set(index(id));
  return s;
}

std::vector<std::string> Network::set_to_names(const VertexSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](VertexIndex v) { out.push_back(names_[v]); });
  return out;
}

Cut::Cut(VertexSet side) : side_(std::move(side)) {
  if (side_.empty()) throw Error("a cut must be nonempty");
  if (side_.is_full()) throw Error("a cut must not contain every vertex");
}

std::vector<std::size_t> coboundary(const Network& net, const Cut& cut) {
  std::vector<std::size_t> out;
  const auto& edges = net.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (cut.separates(edges[i].u, edges[i].v)) out.push_back(i);
  return out;
}

Capacity capacity_of(const WeightedGraph& g, const VertexSet& side) {
  Capacity total = 0;
  for (const auto& e : g.edges)
    if (side.test(e.u) != side.test(e.v)) total += e.cap;
  return total;
}

Capacity capacity(const Network& net, const Cut& cut) {
  return capacity_of(net.graph(), cut.side());
}

CornerData corners(const Network& net, const Cut& a, const Cut& b) {
  const auto& A = a.side();
  const auto& B = b.side();
  CornerData d;
  d.a_and_b = A & B;
  d.a_and_not_b = A - B;
  d.not_a_and_b = B - A;
  d.not_a_and_not_b = (A | B).complement();

  // Corner index: bit 1 = outside A, bit 0 = outside B.
  auto corner = [&](VertexIndex v) {
    return (A.test(v) ? 0 : 2) | (B.test(v) ? 0 : 1);
  };
  enum { AB = 0, ABs = 1, AsB = 2, AsBs = 3 };
  for (const auto& e : net.edges()) {
    int p = corner(e.u), q = corner(e.v);
    if (p == q) continue;
    if (p > q) std::swap(p, q);
    if (p == AB && q == AsB) d.a += e.cap;
    else if (p == ABs && q == AsBs) d.b += e.cap;
    else if (p == AB && q == ABs) d.c += e.cap;
    else if (p == AsB && q == AsBs) d.d += e.cap;
    else if (p == ABs && q == AsB) d.e += e.cap;
    else d.f += e.cap;  // AB – AsBs
  }
  return d;
}

bool is_nested(const VertexSet& a, const VertexSet& b) {
  if (!a.intersects(b)) return true;
  if (a.is_subset_of(b) || b.is_subset_of(a)) return true;
  // A* ∩ B* empty  <=>  A ∪ B is everything.
  return (a | b).is_full();
}

bool induces_connected(const Network& net, const VertexSet& side) {
  const auto start = side.first();
  if (start < 0) return false;
  VertexSet seen(side.universe());
  std::vector<VertexIndex> stack{start};
  seen.set(start);
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (const auto& inc : net.incident(x)) {
      if (side.test(inc.neighbor) && !seen.test(inc.neighbor)) {
        seen.set(inc.neighbor);
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == side.count();
}

bool is_tight(const Network& net, const Cut& cut) {
  return induces_connected(net, cut.side()) &&
         induces_connected(net, cut.side().complement());
}

Network load_network_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed network JSON: ") + e.what());
  }
  try {
    std::vector<std::string> vertices = j.at("vertices");
    std::vector<Network::EdgeSpec> edges;
    for (const auto& e : j.at("edges")) {
      const auto& c = e.at("c");
      if (!c.is_number_integer())
        throw Error("edge capacity must be an integer");
      edges.push_back({e.at("u").get<std::string>(),
                       e.at("v").get<std::string>(), c.get<Capacity>()});
    }
    return Network::build(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed network JSON: ") + e.what());
  }
}

Network load_network_dimacs(std::istream& in) {
  std::string line;
  long declared_n = -1, declared_m = -1;
  std::vector<Network::EdgeSpec> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    auto bad = [&](const std::string& why) {
      return Error("DIMACS line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "p") {
      std::string kind;
      if (!(ls >> kind >> declared_n >> declared_m) || kind != "max")
        throw bad("expected 'p max <n> <m>'");
    } else if (tag == "n") {
      continue;  // source/sink designators; endpoints come from the caller
    } else if (tag == "a") {
      if (declared_n < 0) throw bad("arc before problem line");
      std::string u, v, cap;
      if (!(ls >> u >> v >> cap)) throw bad("expected 'a <u> <v> <cap>'");
      std::size_t used = 0;
      Capacity c = 0;
      try {
        c = std::stoll(cap, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cap.size()) throw bad("capacity '" + cap + "' is not integral");
      edges.push_back({u, v, c});
    } else {
      throw bad("unknown line tag '" + tag + "'");
    }
  }
  if (declared_n < 1) throw Error("DIMACS input has no problem line");
  if (declared_m >= 0 && static_cast<long>(edges.size()) != declared_m)
    throw Error("DIMACS arc count does not match problem line");
  std::vector<std::string> vertices;
  for (long i = 1; i <= declared_n; ++i) vertices.push_back(std::to_string(i));
  return Network::build(std::move(vertices), edges);
}

Network load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  char first = 0;
  while (in.get(first) && std::isspace(static_cast<unsigned char>(first))) {
  }
  in.unget();
  if (first == '{') return load_network_json(in);
  return load_network_dimacs(in);
}

std::string network_to_json(const Network& net) {
  nlohmann::ordered_json j;
  j["vertices"] = net.names();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : net.edges())
    j["edges"].push_back(
        {{"u", net.name(e.u)}, {"v", net.name(e.v)}, {"c", e.cap}});
  return j.dump(2);
}

}  // namespace cuttree
