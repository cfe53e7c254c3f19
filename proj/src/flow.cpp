#include "cuttree/flow.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>

#include "json.hpp"

namespace cuttree {

FlowSolver::FlowSolver(const WeightedGraph& g)
    : n_(g.vertex_count), out_(static_cast<std::size_t>(g.vertex_count)) {
  arcs_.reserve(g.edges.size() * 2);
  for (const auto& e : g.edges) {
    out_[e.u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({e.v, e.cap});
    out_[e.v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({e.u, e.cap});
    cap_.push_back(e.cap);
  }
}

Capacity FlowSolver::run(VertexIndex s, VertexIndex t) {
  if (s == t) throw Error("identical endpoints");
  s_ = s;
  t_ = t;
  for (std::size_t i = 0; i < cap_.size(); ++i)
    arcs_[2 * i].residual = arcs_[2 * i + 1].residual = cap_[i];

  Capacity total = 0;
  std::vector<int> parent(n_);
  std::deque<VertexIndex> queue;
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = -2;
    queue.assign(1, s);
    while (!queue.empty() && parent[t] == -1) {
      auto x = queue.front();
      queue.pop_front();
      for (int a : out_[x]) {
        auto y = arcs_[a].to;
        if (parent[y] == -1 && arcs_[a].residual > 0) {
          parent[y] = a;
          queue.push_back(y);
        }
      }
    }
    if (parent[t] == -1) break;
    Capacity push = std::numeric_limits<Capacity>::max();
    for (auto y = t; y != s; y = arcs_[parent[y] ^ 1].to)
      push = std::min(push, arcs_[parent[y]].residual);
    for (auto y = t; y != s; y = arcs_[parent[y] ^ 1].to) {
      arcs_[parent[y]].residual -= push;
      arcs_[parent[y] ^ 1].residual += push;
    }
    total += push;
  }
  return total;
}

VertexSet FlowSolver::reach(VertexIndex from, bool forward) const {
  VertexSet seen(n_);
  seen.set(from);
  std::vector<VertexIndex> stack{from};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (int a : out_[x]) {
      // Backwards we follow arcs y -> x, i.e. the partner of x's out-arc.
      const auto r = forward ? arcs_[a].residual : arcs_[a ^ 1].residual;
      auto y = arcs_[a].to;
      if (r > 0 && !seen.test(y)) {
        seen.set(y);
        stack.push_back(y);
      }
    }
  }
  return seen;
}

VertexSet FlowSolver::source_side() const { return reach(s_, true); }

VertexSet FlowSolver::largest_source_side() const {
  return reach(t_, false).complement();
}

std::vector<Capacity> FlowSolver::edge_flows() const {
  std::vector<Capacity> f(cap_.size());
  for (std::size_t i = 0; i < cap_.size(); ++i)
    f[i] = (arcs_[2 * i + 1].residual - arcs_[2 * i].residual) / 2;
  return f;
}

std::vector<VertexSet> FlowSolver::all_min_cuts(std::size_t limit) const {
  const auto base = source_side();
  const auto sink_part = reach(t_, false);

  // Tarjan over the residual graph restricted to the undecided vertices.
  // Components come out successors-first.
  std::vector<int> comp(n_, -1), low(n_), order(n_, -1);
  std::vector<VertexIndex> stack;
  std::vector<bool> on_stack(n_, false);
  int counter = 0, comps = 0;
  std::function<void(VertexIndex)> strong = [&](VertexIndex x) {
    order[x] = low[x] = counter++;
    stack.push_back(x);
    on_stack[x] = true;
    for (int a : out_[x]) {
      auto y = arcs_[a].to;
      if (arcs_[a].residual <= 0 || base.test(y) || sink_part.test(y)) continue;
      if (order[y] < 0) {
        strong(y);
        low[x] = std::min(low[x], low[y]);
      } else if (on_stack[y]) {
        low[x] = std::min(low[x], order[y]);
      }
    }
    if (low[x] == order[x]) {
      VertexIndex y;
      do {
        y = stack.back();
        stack.pop_back();
        on_stack[y] = false;
        comp[y] = comps;
      } while (y != x);
      ++comps;
    }
  };
  for (VertexIndex x = 0; x < n_; ++x)
    if (!base.test(x) && !sink_part.test(x) && order[x] < 0) strong(x);

  std::vector<VertexSet> members(comps, VertexSet(n_));
  std::vector<std::set<int>> succ(comps);
  for (VertexIndex x = 0; x < n_; ++x) {
    if (comp[x] < 0) continue;
    members[comp[x]].set(x);
    for (int a : out_[x]) {
      auto y = arcs_[a].to;
      if (arcs_[a].residual > 0 && comp[y] >= 0 && comp[y] != comp[x])
        succ[comp[x]].insert(comp[y]);
    }
  }

  std::vector<VertexSet> out;
  std::vector<bool> chosen(comps, false);
  VertexSet current = base;
  std::function<void(int)> walk = [&](int c) {
    if (c == comps) {
      if (out.size() >= limit)
        throw Error("more than " + std::to_string(limit) + " minimum cuts");
      out.push_back(current);
      return;
    }
    walk(c + 1);
    if (std::all_of(succ[c].begin(), succ[c].end(),
                    [&](int d) { return chosen[d]; })) {
      chosen[c] = true;
      auto saved = current;
      current |= members[c];
      walk(c + 1);
      current = std::move(saved);
      chosen[c] = false;
    }
  };
  walk(0);
  std::sort(out.begin(), out.end());
  return out;
}

FlowAssignment max_flow(const Network& net, VertexIndex s, VertexIndex t) {
  FlowSolver solver(net.graph());
  FlowAssignment f;
  f.source = s;
  f.sink = t;
  f.value = solver.run(s, t);
  f.flow = solver.edge_flows();
  return f;
}

Cut min_cut_smallest(const Network& net, VertexIndex s, VertexIndex t) {
  FlowSolver solver(net.graph());
  solver.run(s, t);
  return Cut(solver.source_side());
}

Cut min_cut_largest(const Network& net, VertexIndex s, VertexIndex t) {
  FlowSolver solver(net.graph());
  solver.run(s, t);
  return Cut(solver.largest_source_side());
}

Capacity flow_value_across_cut(const Network& net, const FlowAssignment& f,
                               const Cut& a) {
  if (!a.separates(f.source, f.sink)) throw Error("non-separating cut");
  Capacity out = 0;
  const auto& edges = net.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool u_in = a.contains(edges[i].u);
    if (u_in == a.contains(edges[i].v)) continue;
    out += u_in ? f.flow[i] : -f.flow[i];
  }
  return out;
}

bool verify_flow(const Network& net, const FlowAssignment& f,
                 std::vector<std::string>* violations) {
  bool ok = true;
  auto report = [&](std::string msg) {
    ok = false;
    if (violations) violations->push_back(std::move(msg));
  };
  const auto& edges = net.edges();
  if (f.flow.size() != edges.size()) {
    report("flow has " + std::to_string(f.flow.size()) + " entries for " +
           std::to_string(edges.size()) + " edges");
    return false;
  }
  std::vector<Capacity> excess(net.vertex_count(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (f.flow[i] > e.cap || -f.flow[i] > e.cap)
      report("edge " + net.name(e.u) + "-" + net.name(e.v) + " carries " +
             std::to_string(f.flow[i] < 0 ? -f.flow[i] : f.flow[i]) +
             " over capacity " + std::to_string(e.cap));
    excess[e.u] -= f.flow[i];
    excess[e.v] += f.flow[i];
  }
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    if (v == f.source || v == f.sink) continue;
    if (excess[v] != 0)
      report("conservation fails at " + net.name(v) + " (net inflow " +
             std::to_string(excess[v]) + ")");
  }
  if (f.source != f.sink && -excess[f.source] != f.value)
    report("declared value " + std::to_string(f.value) +
           " differs from net outflow " + std::to_string(-excess[f.source]));
  return ok;
}

std::string flow_to_json(const Network& net, const FlowAssignment& f) {
  nlohmann::ordered_json j;
  j["value"] = f.value;
  j["edges"] = nlohmann::ordered_json::array();
  const auto& edges = net.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (f.flow[i] == 0) continue;
    auto from = edges[i].u, to = edges[i].v;
    if (f.flow[i] < 0) std::swap(from, to);
    j["edges"].push_back({{"u", net.name(from)},
                          {"v", net.name(to)},
                          {"flow", f.flow[i] < 0 ? -f.flow[i] : f.flow[i]}});
  }
  return j.dump(2);
}

std::vector<Capacity> ConnectivityTable::levels() const {
  std::set<Capacity> seen;
  for (VertexIndex u = 0; u < n_; ++u)
    for (VertexIndex v = u + 1; v < n_; ++v) seen.insert(at(u, v));
  return {seen.begin(), seen.end()};
}

Capacity ConnectivityTable::max_value() const {
  auto lv = levels();
  return lv.empty() ? 0 : lv.back();
}

ConnectivityTable all_pairs_connectivity(const Network& net) {
  return all_pairs_connectivity(net.graph());
}

ConnectivityTable all_pairs_connectivity(const WeightedGraph& g) {
  const int n = g.vertex_count;
  ConnectivityTable table(n);
  const long pairs = long(n) * (n - 1) / 2;
#pragma omp parallel
  {
    FlowSolver solver(g);
#pragma omp for schedule(dynamic, 4)
    for (long k = 0; k < pairs; ++k) {
      // Unrank k into (u, v) with u < v, row by row.
      VertexIndex u = 0;
      long rest = k;
      while (rest >= n - 1 - u) rest -= n - 1 - u++;
      const VertexIndex v = u + 1 + static_cast<VertexIndex>(rest);
      table.set(u, v, solver.run(u, v));
    }
  }
  return table;
}

ConnectivityTable all_pairs_connectivity_serial(const WeightedGraph& g) {
  ConnectivityTable table(g.vertex_count);
  FlowSolver solver(g);
  for (VertexIndex u = 0; u < g.vertex_count; ++u)
    for (VertexIndex v = u + 1; v < g.vertex_count; ++v)
      table.set(u, v, solver.run(u, v));
  return table;
}

}  // namespace cuttree
