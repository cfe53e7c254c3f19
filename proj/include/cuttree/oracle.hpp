#pragma once

// Exhaustive ground truth over all vertex subsets. Everything here is
// exponential in the vertex count and meant for small graphs and tests.

#include <cstdint>
#include <vector>

#include "cuttree/flow.hpp"
#include "cuttree/network.hpp"

namespace cuttree::oracle {

using Mask = std::uint32_t;

// Vertex cap, default 16; CUTTREE_ORACLE_LIMIT overrides it.
int limit();
// Throws Error("oracle limit exceeded ...") past the cap.
void require_small(const Network& net, int max_vertices = limit());

Mask to_mask(const VertexSet& s);
VertexSet to_set(Mask m, int n);

// capacity[m] for every mask m (0 for the empty and full masks).
std::vector<Capacity> capacity_table(const WeightedGraph& g);
// Gray-code walk, one vertex flip per step; reference for the above.
std::vector<Capacity> capacity_table_serial(const WeightedGraph& g);

ConnectivityTable connectivity(const Network& net);
ConnectivityTable connectivity(const Network& net,
                               const std::vector<Capacity>& caps);

// Number of minimum (s,t)-cuts, counting each partition once.
std::size_t count_min_cuts(const Network& net, VertexIndex s, VertexIndex t);

struct Level {
  Capacity n = 0;
  std::vector<Mask> cuts;  // cumulative E_n, both orientations, ascending
};

// Canonical nested systems: per level, the thin cuts of capacity n nested
// with the previous system, and for each pair at connectivity n the members
// separating it that cross the fewest of those cuts.
std::vector<Level> canonical_levels(const Network& net);

// Alternative: at each vertex u with a partner at connectivity n, take the
// inclusion-smallest thin cut containing u when it is unique. Used only for
// comparison; it does not always reproduce connectivity.
std::vector<Level> smallest_cut_levels(const Network& net);

}  // namespace cuttree::oracle
