#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuttree/flow.hpp"
#include "cuttree/network.hpp"

namespace cuttree {

// Ordered set of cut sides, each optionally tagged with a capacity level.
class CutFamily {
 public:
  void add(const VertexSet& side, std::optional<Capacity> level = {}) {
    members_.try_emplace(side, level);
  }
  bool contains(const VertexSet& side) const { return members_.count(side); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::optional<Capacity> level(const VertexSet& side) const {
    auto it = members_.find(side);
    return it == members_.end() ? std::nullopt : it->second;
  }
  std::vector<VertexSet> members() const {
    std::vector<VertexSet> out;
    for (const auto& [side, _] : members_) out.push_back(side);
    return out;
  }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::map<VertexSet, std::optional<Capacity>> members_;
};

// All 2^n - 2 cuts tagged with their capacity. Throws Error("oracle limit
// exceeded ...") for more than `max_vertices` vertices.
CutFamily enumerate_all_cuts(const Network& net, int max_vertices);
CutFamily enumerate_all_cuts(const Network& net);

// Membership in the ring generated by cuts of capacity <= m: no pair split
// by A has connectivity above m.
bool in_ring(const ConnectivityTable& lambda, const Cut& a, Capacity m);
bool in_ring(const Network& net, const Cut& a, Capacity m);

bool is_thin(const Network& net, const ConnectivityTable& lambda, const Cut& a);
bool is_thin(const Network& net, const Cut& a);

std::size_t crossing_count(const VertexSet& a, const std::vector<VertexSet>& family);
std::size_t crossing_count(const Cut& a, const CutFamily& family);

// Tight cuts A with capacity exactly k and the given edge in their
// coboundary. Results are memoized per (edge, k).
class TightCutEnumerator {
 public:
  explicit TightCutEnumerator(const Network& net) : net_(net) {}
  const CutFamily& through_edge(std::size_t edge, Capacity k);

 private:
  const Network& net_;
  std::map<std::pair<std::size_t, Capacity>, CutFamily> memo_;
};

CutFamily tight_cuts_through_edge(const Network& net, std::size_t edge,
                                  Capacity k);

// For crossing thin cuts A and B, a pair of opposite corners that are thin
// with capacities c(A) and c(B), returned in the order (from A, from B).
// Throws Error("already nested") or Error("requires thin cuts").
std::pair<Cut, Cut> uncross(const Network& net, const ConnectivityTable& lambda,
                            const Cut& a, const Cut& b);
std::pair<Cut, Cut> uncross(const Network& net, const Cut& a, const Cut& b);

// JSON list of {"side","capacity","thin","tight"} for each member.
std::string oracle_dump_json(const Network& net, const CutFamily& family);

}  // namespace cuttree
