#pragma once

#include <string>
#include <vector>

#include "cuttree/network.hpp"

namespace cuttree {

// Flow on a Network. `flow[i]` is signed relative to edges()[i]: positive
// means the flow runs from edges()[i].u to edges()[i].v.
struct FlowAssignment {
  VertexIndex source = 0;
  VertexIndex sink = 0;
  std::vector<Capacity> flow;
  Capacity value = 0;

  static FlowAssignment zero(const Network& net, VertexIndex s, VertexIndex t) {
    return {s, t, std::vector<Capacity>(net.edge_count(), 0), 0};
  }
};

// Edmonds–Karp on an undirected WeightedGraph. Each undirected edge becomes
// a pair of opposite arcs sharing the same capacity.
class FlowSolver {
 public:
  explicit FlowSolver(const WeightedGraph& g);

  Capacity run(VertexIndex s, VertexIndex t);

  // Valid after run(). Smallest s-side: residual reachability from s.
  VertexSet source_side() const;
  // Largest s-side: complement of the vertices that reach t in the residual.
  VertexSet largest_source_side() const;
  // Signed flow per input edge, oriented like flow in FlowAssignment.
  std::vector<Capacity> edge_flows() const;

  // Every minimum (s,t)-cut, as its s-side, in canonical order. Throws
  // Error when there are more than `limit`.
  std::vector<VertexSet> all_min_cuts(std::size_t limit) const;

 private:
  struct Arc {
    VertexIndex to;
    Capacity residual;
  };
  VertexSet reach(VertexIndex from, bool forward) const;

  int n_;
  std::vector<Capacity> cap_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  VertexIndex s_ = -1, t_ = -1;
};

// Throws Error("identical endpoints") when s == t.
FlowAssignment max_flow(const Network& net, VertexIndex s, VertexIndex t);
Cut min_cut_smallest(const Network& net, VertexIndex s, VertexIndex t);
Cut min_cut_largest(const Network& net, VertexIndex s, VertexIndex t);

// f+(A) - f-(A). Throws Error("non-separating cut") unless A separates the
// source and sink.
Capacity flow_value_across_cut(const Network& net, const FlowAssignment& f,
                               const Cut& a);

// Capacity and conservation checks; reasons for failure go to `violations`.
bool verify_flow(const Network& net, const FlowAssignment& f,
                 std::vector<std::string>* violations = nullptr);

std::string flow_to_json(const Network& net, const FlowAssignment& f);

class ConnectivityTable {
 public:
  ConnectivityTable() = default;
  explicit ConnectivityTable(int n) : n_(n), lambda_(std::size_t(n) * n, 0) {}

  int size() const { return n_; }
  Capacity at(VertexIndex u, VertexIndex v) const { return lambda_[idx(u, v)]; }
  void set(VertexIndex u, VertexIndex v, Capacity c) {
    lambda_[idx(u, v)] = c;
    lambda_[idx(v, u)] = c;
  }
  // Distinct values over all pairs, ascending.
  std::vector<Capacity> levels() const;
  Capacity max_value() const;

  friend bool operator==(const ConnectivityTable&,
                         const ConnectivityTable&) = default;

 private:
  std::size_t idx(VertexIndex u, VertexIndex v) const {
    return std::size_t(u) * n_ + v;
  }
  int n_ = 0;
  std::vector<Capacity> lambda_;
};

ConnectivityTable all_pairs_connectivity(const Network& net);
ConnectivityTable all_pairs_connectivity(const WeightedGraph& g);
// Single-threaded reference for the parallel kernel above.
ConnectivityTable all_pairs_connectivity_serial(const WeightedGraph& g);

}  // namespace cuttree
