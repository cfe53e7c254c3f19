#include "cuttree/structure.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cuttree {

void NestedSystem::add_pair(const VertexSet& a, Capacity level) {
  cuts_.try_emplace(a, level);
  cuts_.try_emplace(a.complement(), level);
}

std::vector<VertexSet> NestedSystem::members() const {
  std::vector<VertexSet> out;
  out.reserve(cuts_.size());
  for (const auto& [side, _] : cuts_) out.push_back(side);
  return out;
}

NestedSystem NestedSystem::up_to(Capacity n) const {
  NestedSystem out(universe_);
  for (const auto& [side, level] : cuts_)
    if (level <= n) out.cuts_.emplace(side, level);
  return out;
}

void NestedSystem::validate() const {
  for (const auto& [side, level] : cuts_) {
    if (side.empty() || side.is_full()) throw Error("system holds a non-cut");
    auto it = cuts_.find(side.complement());
    if (it == cuts_.end()) throw Error("system is not closed under complement");
    if (it->second != level) throw Error("complementary cuts carry different levels");
  }
  const auto m = members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!is_nested(m[i], m[j])) throw Error("system holds crossing cuts");
}

int StructureTree::degree(int node) const {
  return static_cast<int>(incident(node).size());
}

std::vector<int> StructureTree::incident(int node) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].a == node || edges[i].b == node) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> StructureTree::geodesic(int from, int to) const {
  std::vector<int> via(node_count(), -1);
  std::vector<int> queue{from};
  via[from] = -2;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (int e : incident(x)) {
      const int y = edges[e].a == x ? edges[e].b : edges[e].a;
      if (via[y] == -1) {
        via[y] = e;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> path;
  for (int x = to; x != from;) {
    const int e = via[x];
    path.push_back(e);
    x = edges[e].a == x ? edges[e].b : edges[e].a;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Capacity StructureTree::path_min(VertexIndex s, VertexIndex t) const {
  const auto path = geodesic(nu[s], nu[t]);
  if (path.empty()) return 0;
  Capacity best = std::numeric_limits<Capacity>::max();
  for (int e : path) best = std::min(best, edges[e].capacity);
  return best;
}

namespace {

// Tree before node numbering is fixed. side is the vertex set on x's side.
struct RawEdge {
  int x, y;
  Capacity capacity;
  VertexSet side;
};

StructureTree canonicalize(std::vector<std::string> names,
                           const std::vector<std::vector<VertexIndex>>& images,
                           const std::vector<RawEdge>& edges) {
  const int k = static_cast<int>(images.size());
  std::vector<std::vector<int>> adj(k);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].x].push_back(static_cast<int>(i));
    adj[edges[i].y].push_back(static_cast<int>(i));
  }
  auto far_side = [&](int e, int from) {
    return edges[e].x == from ? edges[e].side.complement() : edges[e].side;
  };

  int root = -1;
  for (int x = 0; x < k && root < 0; ++x)
    if (std::find(images[x].begin(), images[x].end(), 0) != images[x].end())
      root = x;
  if (root < 0) throw std::logic_error("no node holds vertex 0");

  std::vector<int> id(k, -1);
  std::vector<int> order{root};
  id[root] = 0;
  for (std::size_t h = 0; h < order.size(); ++h) {
    const int x = order[h];
    std::vector<std::pair<VertexSet, int>> children;
    for (int e : adj[x]) {
      const int y = edges[e].x == x ? edges[e].y : edges[e].x;
      if (id[y] < 0) children.push_back({far_side(e, x), y});
    }
    std::sort(children.begin(), children.end());
    for (const auto& [_, y] : children) {
      id[y] = static_cast<int>(order.size());
      order.push_back(y);
    }
  }
  if (static_cast<int>(order.size()) != k ||
      edges.size() + 1 != static_cast<std::size_t>(k))
    throw std::logic_error("nested family did not produce a tree");

  StructureTree t;
  t.vertex_names = std::move(names);
  t.images.resize(k);
  t.nu.assign(t.vertex_names.size(), -1);
  for (int x = 0; x < k; ++x) {
    t.images[id[x]] = images[x];
    std::sort(t.images[id[x]].begin(), t.images[id[x]].end());
    for (auto v : images[x]) t.nu[v] = id[x];
  }
  for (const auto& e : edges) {
    int a = id[e.x], b = id[e.y];
    VertexSet side = e.side;
    if (a > b) {
      std::swap(a, b);
      side = side.complement();
    }
    t.edges.push_back({a, b, e.capacity, side});
  }
  std::sort(t.edges.begin(), t.edges.end(),
            [](const TreeEdge& p, const TreeEdge& q) {
              return std::pair{p.a, p.b} < std::pair{q.a, q.b};
            });
  return t;
}

}  // namespace

StructureTree tree_from_nested(const Network& net, const NestedSystem& e) {
  const int n = net.vertex_count();
  const auto m = e.members();
  if (m.empty()) {
    std::vector<VertexIndex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return canonicalize(net.names(), {all}, {});
  }

  std::map<std::vector<bool>, int> node_of;
  std::vector<int> iota(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto star = m[i].complement();
    std::vector<bool> alpha(m.size());
    for (std::size_t j = 0; j < m.size(); ++j)
      alpha[j] = m[i].is_subset_of(m[j]) || (star.is_subset_of(m[j]) && star != m[j]);
    iota[i] = node_of.try_emplace(alpha, static_cast<int>(node_of.size())).first->second;
  }
  std::map<VertexSet, std::size_t> index;
  for (std::size_t i = 0; i < m.size(); ++i) index.emplace(m[i], i);

  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].test(0)) continue;  // one edge per complementary pair
    const auto j = index.at(m[i].complement());
    edges.push_back({iota[i], iota[j], e.level(m[i]), m[i]});
  }

  std::vector<std::vector<VertexIndex>> images(node_of.size());
  for (VertexIndex v = 0; v < n; ++v) {
    std::size_t best = m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i].test(v) && (best == m.size() || m[i].count() < m[best].count()))
        best = i;
    images[iota[best]].push_back(v);
  }
  return canonicalize(net.names(), images, edges);
}

std::vector<int> nu_map(const Network& net, const StructureTree& tree) {
  std::vector<int> out(net.vertex_count());
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    int x = 0;
    for (bool moved = true; moved;) {
      moved = false;
      for (int e : tree.incident(x)) {
        const auto& te = tree.edges[e];
        const bool on_a = te.cut_side.test(v);
        if (te.a == x && !on_a) x = te.b, moved = true;
        else if (te.b == x && on_a) x = te.a, moved = true;
        if (moved) break;
      }
    }
    out[v] = x;
  }
  return out;
}

namespace {

constexpr std::size_t kMinCutLimit = 1u << 16;

// The thin cuts of capacity n nested with `prev`, grouped by the pairs at
// connectivity n they separate. Each pair lies in one block of vertices
// that `prev` does not split; members of `prev` away from the block are
// contracted, after which the candidates are exactly the minimum cuts.
struct Candidates {
  std::vector<VertexSet> cuts;                // normalized: without vertex 0
  std::vector<std::vector<int>> per_pair;     // indices into cuts
};

Candidates collect_candidates(const Network& net, const ConnectivityTable& lambda,
                              const std::vector<VertexSet>& prev, Capacity n) {
  const int nv = net.vertex_count();
  std::map<std::vector<bool>, VertexSet> blocks;
  for (VertexIndex v = 0; v < nv; ++v) {
    std::vector<bool> sig(prev.size());
    for (std::size_t i = 0; i < prev.size(); ++i) sig[i] = prev[i].test(v);
    blocks.try_emplace(sig, VertexSet(nv)).first->second.set(v);
  }

  Candidates out;
  std::map<VertexSet, int> seen;
  for (const auto& [_, block] : blocks) {
    const auto zs = block.members();
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j) {
        const auto l = lambda.at(zs[i], zs[j]);
        if (l < n)
          throw Error("previous system leaves " + net.name(zs[i]) + " and " +
                      net.name(zs[j]) + " unseparated below level " +
                      std::to_string(n));
        if (l == n) pairs.push_back({zs[i], zs[j]});
      }
    if (pairs.empty()) continue;

    std::vector<VertexSet> away;
    for (const auto& c : prev)
      if (!c.intersects(block)) away.push_back(c);
    std::vector<VertexSet> branches;
    for (const auto& c : away) {
      bool maximal = true;
      for (const auto& d : away)
        if (c != d && c.is_subset_of(d)) maximal = false;
      if (maximal) branches.push_back(c);
    }

    std::vector<int> node(nv, -1);
    int k = 0;
    for (auto z : zs) node[z] = k++;
    for (const auto& br : branches) {
      br.for_each([&](VertexIndex v) { node[v] = k; });
      ++k;
    }
    std::map<std::pair<int, int>, Capacity> merged;
    for (const auto& e : net.edges()) {
      int p = node[e.u], q = node[e.v];
      if (p < 0 || q < 0) throw std::logic_error("contraction misses a vertex");
      if (p == q) continue;
      if (p > q) std::swap(p, q);
      merged[{p, q}] += e.cap;
    }
    WeightedGraph quotient{k, {}};
    for (const auto& [pq, c] : merged) quotient.edges.push_back({pq.first, pq.second, c});

    FlowSolver solver(quotient);
    for (const auto& [x, y] : pairs) {
      if (solver.run(node[x], node[y]) != n)
        throw std::logic_error("contracted flow differs from connectivity");
      std::vector<int> ids;
      for (const auto& s : solver.all_min_cuts(kMinCutLimit)) {
        VertexSet side(nv);
        for (VertexIndex v = 0; v < nv; ++v)
          if (s.test(node[v])) side.set(v);
        if (side.test(0)) side = side.complement();
        ids.push_back(seen.try_emplace(side, static_cast<int>(out.cuts.size()))
                          .first->second);
        if (ids.back() == static_cast<int>(out.cuts.size())) out.cuts.push_back(side);
      }
      out.per_pair.push_back(std::move(ids));
    }
  }
  return out;
}

}  // namespace

NestedSystem level_up(const Network& net, const ConnectivityTable& lambda,
                      const NestedSystem& prev, Capacity n) {
  if (n < 1) throw Error("level must be at least 1, got " + std::to_string(n));
  const auto cand = collect_candidates(net, lambda, prev.members(), n);

  std::vector<std::size_t> mu(cand.cuts.size(), 0);
  for (std::size_t i = 0; i < cand.cuts.size(); ++i)
    for (std::size_t j = i + 1; j < cand.cuts.size(); ++j)
      if (!is_nested(cand.cuts[i], cand.cuts[j])) ++mu[i], ++mu[j];

  NestedSystem next = prev;
  for (const auto& ids : cand.per_pair) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (int i : ids) best = std::min(best, mu[i]);
    for (int i : ids)
      if (mu[i] == best) next.add_pair(cand.cuts[i], n);
  }
  return next;
}

NestedSystem level_up(const Network& net, const NestedSystem& prev, Capacity n) {
  return level_up(net, all_pairs_connectivity(net), prev, n);
}

NestedSystem build_canonical_system(const Network& net,
                                    const ConnectivityTable& lambda,
                                    Capacity max_level) {
  NestedSystem e(net.vertex_count());
  for (Capacity n : lambda.levels()) {
    if (max_level >= 0 && n > max_level) break;
    e = level_up(net, lambda, e, n);
  }
  e.validate();
  return e;
}

NestedSystem build_canonical_system(const Network& net) {
  return build_canonical_system(net, all_pairs_connectivity(net));
}

StructureTree build_canonical_tree(const Network& net, Capacity max_level) {
  return tree_from_nested(
      net, build_canonical_system(net, all_pairs_connectivity(net), max_level));
}

StructureTree gomory_hu_extract(const StructureTree& tree) {
  auto images = tree.images;
  std::vector<RawEdge> edges;
  for (const auto& e : tree.edges) edges.push_back({e.a, e.b, e.capacity, e.cut_side});
  std::vector<bool> alive(images.size(), true);

  for (;;) {
    int z = -1;
    for (int x = 0; x < static_cast<int>(images.size()) && z < 0; ++x)
      if (alive[x] && images[x].empty()) z = x;
    if (z < 0) break;

    int pick = -1;
    VertexIndex pick_min = 0;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const auto& e = edges[i];
      if (e.x != z && e.y != z) continue;
      const auto far = e.x == z ? e.side.complement() : e.side;
      const auto lowest = far.first();
      if (pick < 0 || e.capacity > edges[pick].capacity ||
          (e.capacity == edges[pick].capacity && lowest < pick_min)) {
        pick = i;
        pick_min = lowest;
      }
    }
    if (pick < 0) throw std::logic_error("isolated node outside the image");
    const int w = edges[pick].x == z ? edges[pick].y : edges[pick].x;
    edges.erase(edges.begin() + pick);
    for (auto& e : edges) {
      if (e.x == z) e.x = w;
      if (e.y == z) e.y = w;
    }
    alive[z] = false;
  }

  std::vector<int> renum(images.size(), -1);
  std::vector<std::vector<VertexIndex>> kept;
  for (std::size_t x = 0; x < images.size(); ++x)
    if (alive[x]) {
      renum[x] = static_cast<int>(kept.size());
      kept.push_back(images[x]);
    }
  for (auto& e : edges) {
    e.x = renum[e.x];
    e.y = renum[e.y];
  }
  return canonicalize(tree.vertex_names, kept, edges);
}

bool check_automorphism_invariance(const Network& net,
                                   const std::vector<VertexIndex>& perm,
                                   const NestedSystem& e) {
  const int n = net.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw Error("not an automorphism: permutation has the wrong length");
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p < 0 || p >= n || hit[p])
      throw Error("not an automorphism: not a permutation");
    hit[p] = true;
  }
  for (const auto& edge : net.edges()) {
    auto image = net.edge_between(perm[edge.u], perm[edge.v]);
    if (!image || net.edges()[*image].cap != edge.cap)
      throw Error("not an automorphism: edge " + net.name(edge.u) + "-" +
                  net.name(edge.v) + " is not preserved");
  }
  for (const auto& [side, level] : e.cuts()) {
    VertexSet moved(n);
    side.for_each([&](VertexIndex v) { moved.set(perm[v]); });
    if (!e.contains(moved)) return false;
  }
  return true;
}

std::string tree_to_json(const StructureTree& tree) {
  auto names_of = [&](const VertexSet& s) {
    std::vector<std::string> out;
    s.for_each([&](VertexIndex v) { out.push_back(tree.vertex_names[v]); });
    return out;
  };
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (int x = 0; x < tree.node_count(); ++x) {
    std::vector<std::string> image;
    for (auto v : tree.images[x]) image.push_back(tree.vertex_names[v]);
    j["nodes"].push_back({{"id", x}, {"image_of", image}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : tree.edges)
    j["edges"].push_back({{"a", e.a},
                          {"b", e.b},
                          {"capacity", e.capacity},
                          {"cut_side", names_of(e.cut_side)}});
  return j.dump(2) + "\n";
}

StructureTree tree_from_json(std::istream& in) {
  try {
    nlohmann::json j;
    in >> j;
    std::vector<std::string> names;
    for (const auto& node : j.at("nodes"))
      for (const auto& v : node.at("image_of")) names.push_back(v.get<std::string>());
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      throw Error("tree lists a vertex on two nodes");
    std::map<std::string, VertexIndex> index;
    for (std::size_t i = 0; i < names.size(); ++i)
      index.emplace(names[i], static_cast<VertexIndex>(i));

    StructureTree t;
    t.vertex_names = names;
    t.nu.assign(names.size(), -1);
    const auto& nodes = j.at("nodes");
    t.images.resize(nodes.size());
    for (const auto& node : nodes) {
      const int id = node.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(nodes.size()))
        throw Error("node id out of range");
      for (const auto& v : node.at("image_of")) {
        const auto idx = index.at(v.get<std::string>());
        t.images[id].push_back(idx);
        t.nu[idx] = id;
      }
      std::sort(t.images[id].begin(), t.images[id].end());
    }
    for (const auto& e : j.at("edges")) {
      TreeEdge te{e.at("a").get<int>(), e.at("b").get<int>(),
                  e.at("capacity").get<Capacity>(), VertexSet(names.size())};
      for (const auto& v : e.at("cut_side")) {
        auto it = index.find(v.get<std::string>());
        if (it == index.end()) throw Error("cut side names an unknown vertex");
        te.cut_side.set(it->second);
      }
      t.edges.push_back(std::move(te));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed tree JSON: ") + e.what());
  }
}

std::string tree_to_dot(const StructureTree& tree) {
  std::ostringstream out;
  out << "graph structure_tree {\n  node [shape=ellipse];\n";
  for (int x = 0; x < tree.node_count(); ++x) {
    out << "  n" << x;
    if (tree.is_image(x)) {
      out << " [label=\"";
      for (std::size_t i = 0; i < tree.images[x].size(); ++i)
        out << (i ? "," : "") << tree.vertex_names[tree.images[x][i]];
      out << "\"];\n";
    } else {
      out << " [label=\"" << x << "\", shape=box, style=dashed];\n";
    }
  }
  for (const auto& e : tree.edges)
    out << "  n" << e.a << " -- n" << e.b << " [label=\"" << e.capacity << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cuttree
