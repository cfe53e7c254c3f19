#include "cuttree/cutring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cuttree/oracle.hpp"
#include "json.hpp"

namespace cuttree {

CutFamily enumerate_all_cuts(const Network& net, int max_vertices) {
  oracle::require_small(net, max_vertices);
  const auto caps = oracle::capacity_table(net.graph());
  const int n = net.vertex_count();
  CutFamily out;
  for (oracle::Mask m = 1; m + 1 < (oracle::Mask(1) << n); ++m)
    out.add(oracle::to_set(m, n), caps[m]);
  return out;
}

CutFamily enumerate_all_cuts(const Network& net) {
  return enumerate_all_cuts(net, oracle::limit());
}

bool in_ring(const ConnectivityTable& lambda, const Cut& a, Capacity m) {
  const auto inside = a.side().members();
  const auto outside = a.side().complement().members();
  for (auto u : inside)
    for (auto v : outside)
      if (lambda.at(u, v) > m) return false;
  return true;
}

bool in_ring(const Network& net, const Cut& a, Capacity m) {
  return in_ring(all_pairs_connectivity(net), a, m);
}

bool is_thin(const Network& net, const ConnectivityTable& lambda, const Cut& a) {
  const auto c = capacity(net, a);
  const auto outside = a.side().complement().members();
  for (auto u : a.side().members())
    for (auto v : outside)
      if (lambda.at(u, v) == c) return true;
  return false;
}

bool is_thin(const Network& net, const Cut& a) {
  return is_thin(net, all_pairs_connectivity(net), a);
}

std::size_t crossing_count(const VertexSet& a,
                           const std::vector<VertexSet>& family) {
  return static_cast<std::size_t>(
      std::count_if(family.begin(), family.end(),
                    [&](const VertexSet& b) { return !is_nested(a, b); }));
}

std::size_t crossing_count(const Cut& a, const CutFamily& family) {
  std::size_t count = 0;
  for (const auto& [side, _] : family)
    if (!is_nested(a.side(), side)) ++count;
  return count;
}

namespace {

// Components of the graph with the edges in `removed` deleted.
std::vector<int> components(const Network& net, const std::vector<bool>& removed,
                            int& count) {
  std::vector<int> comp(net.vertex_count(), -1);
  count = 0;
  for (VertexIndex s = 0; s < net.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<VertexIndex> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto& inc : net.incident(x))
        if (!removed[inc.edge] && comp[inc.neighbor] < 0) {
          comp[inc.neighbor] = count;
          stack.push_back(inc.neighbor);
        }
    }
    ++count;
  }
  return comp;
}

// Edges of a shortest x-y path avoiding `removed`; empty if none.
std::vector<std::size_t> path_edges(const Network& net, VertexIndex x,
                                    VertexIndex y,
                                    const std::vector<bool>& removed) {
  std::vector<long> via(net.vertex_count(), -1);
  std::vector<VertexIndex> queue{x};
  via[x] = -2;
  for (std::size_t head = 0; head < queue.size() && via[y] == -1; ++head) {
    auto v = queue[head];
    for (const auto& inc : net.incident(v))
      if (!removed[inc.edge] && via[inc.neighbor] == -1) {
        via[inc.neighbor] = static_cast<long>(inc.edge);
        queue.push_back(inc.neighbor);
      }
  }
  std::vector<std::size_t> out;
  if (via[y] == -1) return out;
  for (auto v = y; v != x;) {
    const auto& e = net.edges()[via[v]];
    out.push_back(static_cast<std::size_t>(via[v]));
    v = e.u == v ? e.v : e.u;
  }
  return out;
}

}  // namespace

const CutFamily& TightCutEnumerator::through_edge(std::size_t edge, Capacity k) {
  auto key = std::pair{edge, k};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  CutFamily found;
  const auto& e = net_.edges().at(edge);
  std::set<std::vector<bool>> visited;
  std::vector<bool> removed(net_.edge_count(), false);

  // Every tight cut whose coboundary contains the removed edges also uses
  // an edge of any remaining x-y path, so branching over one path is
  // exhaustive.
  auto search = [&](auto&& self, Capacity used) -> void {
    if (used > k || !visited.insert(removed).second) return;
    const auto path = path_edges(net_, e.u, e.v, removed);
    if (path.empty()) {
      if (used != k) return;
      int count = 0;
      const auto comp = components(net_, removed, count);
      if (count != 2) return;
      for (std::size_t i = 0; i < removed.size(); ++i) {
        const auto& g = net_.edges()[i];
        if (removed[i] && comp[g.u] == comp[g.v]) return;
      }
      VertexSet side(net_.vertex_count());
      for (VertexIndex v = 0; v < net_.vertex_count(); ++v)
        if (comp[v] == comp[e.u]) side.set(v);
      found.add(side, k);
      found.add(side.complement(), k);
      return;
    }
    for (auto g : path) {
      removed[g] = true;
      self(self, used + net_.edges()[g].cap);
      removed[g] = false;
    }
  };
  removed[edge] = true;
  search(search, e.cap);
  return memo_.emplace(key, std::move(found)).first->second;
}

CutFamily tight_cuts_through_edge(const Network& net, std::size_t edge,
                                  Capacity k) {
  TightCutEnumerator en(net);
  return en.through_edge(edge, k);
}

std::pair<Cut, Cut> uncross(const Network& net, const ConnectivityTable& lambda,
                            const Cut& a_in, const Cut& b_in) {
  if (is_nested(a_in, b_in)) throw Error("already nested");
  if (!is_thin(net, lambda, a_in) || !is_thin(net, lambda, b_in))
    throw Error("requires thin cuts");
  const auto m = capacity(net, a_in), n = capacity(net, b_in);
  if (m > n) {
    auto [from_b, from_a] = uncross(net, lambda, b_in, a_in);
    return {from_a, from_b};
  }

  Cut a = a_in, b = b_in;
  auto d = corners(net, a, b);
  if (d.a > d.b) {
    b = b.complement();
    d = corners(net, a, b);
  }
  if (d.c > d.d) {
    a = a.complement();
    d = corners(net, a, b);
  }

  auto thin_pair = [&](const VertexSet& x, const VertexSet& y) {
    return !x.empty() && !y.empty() && capacity_of(net.graph(), x) == m &&
           capacity_of(net.graph(), y) == n && is_thin(net, lambda, Cut(x)) &&
           is_thin(net, lambda, Cut(y));
  };

  std::pair<VertexSet, VertexSet> out;
  if (d.a < d.b || d.e != 0) {
    out = {d.a_and_not_b, d.not_a_and_b};
  } else if (d.f != 0) {
    // e = 0: complementing B turns f into e.
    b = b.complement();
    d = corners(net, a, b);
    out = {d.a_and_not_b, d.not_a_and_b};
  } else if (thin_pair(d.a_and_not_b, d.not_a_and_b)) {
    out = {d.a_and_not_b, d.not_a_and_b};
  } else {
    out = {d.a_and_b, d.not_a_and_not_b};
  }
  if (!thin_pair(out.first, out.second))
    throw std::logic_error("uncrossing produced corners that are not thin");
  return {Cut(out.first), Cut(out.second)};
}

std::pair<Cut, Cut> uncross(const Network& net, const Cut& a, const Cut& b) {
  return uncross(net, all_pairs_connectivity(net), a, b);
}

std::string oracle_dump_json(const Network& net, const CutFamily& family) {
  const auto lambda = all_pairs_connectivity(net);
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [side, level] : family) {
    const Cut cut(side);
    j.push_back({{"side", net.set_to_names(side)},
                 {"capacity", capacity(net, cut)},
                 {"thin", is_thin(net, lambda, cut)},
                 {"tight", is_tight(net, cut)}});
  }
  return j.dump(2);
}

}  // namespace cuttree
