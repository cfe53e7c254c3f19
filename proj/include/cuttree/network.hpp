#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cuttree/error.hpp"
#include "cuttree/vertex_set.hpp"

namespace cuttree {

using Capacity = std::int64_t;

/// Undirected capacitated edge between vertex indices, u < v.
struct Edge {
  VertexIndex u = 0;
  VertexIndex v = 0;
  Capacity cap = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Index-based weighted graph used by the flow kernels. Need not be
/// connected; parallel edges are allowed here (they are merged by callers
/// that care).
struct WeightedGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
};

/// Finite simple connected graph with positive integer capacities.
///
/// Vertices are addressed by index; indices follow the sorted order of the
/// string ids, so every iteration over vertices or edges is canonical.
class Network {
 public:
  struct EdgeSpec {
    std::string u;
    std::string v;
    Capacity cap = 1;
  };

  /// Validates and builds. Throws Error on loops, parallel edges,
  /// non-positive capacities, duplicate or unknown ids, or disconnection.
  static Network build(std::vector<std::string> vertices,
                       const std::vector<EdgeSpec>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  std::size_t edge_count() const { return graph_.edges.size(); }
  const std::vector<Edge>& edges() const { return graph_.edges; }
  const WeightedGraph& graph() const { return graph_; }

  const std::string& name(VertexIndex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexIndex> find(std::string_view id) const;
  /// Throws Error("unknown vertex ...") when absent.
  VertexIndex index(std::string_view id) const;

  struct Incidence {
    VertexIndex neighbor;
    std::size_t edge;
  };
  const std::vector<Incidence>& incident(VertexIndex v) const {
    return adjacency_[v];
  }
  /// Edge index joining u and v, if any.
  std::optional<std::size_t> edge_between(VertexIndex u, VertexIndex v) const;

  VertexSet empty_set() const { return VertexSet(names_.size()); }
  VertexSet names_to_set(const std::vector<std::string>& ids) const;
  std::vector<std::string> set_to_names(const VertexSet& s) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexIndex> index_;
  WeightedGraph graph_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// A nonempty proper vertex subset A. A and its complement are distinct
/// values; `same_partition` compares at the partition level.
class Cut {
 public:
  /// Throws Error if `side` is empty or the whole vertex set.
  explicit Cut(VertexSet side);
  static Cut of(const Network& net, const std::vector<std::string>& ids) {
    return Cut(net.names_to_set(ids));
  }

  const VertexSet& side() const { return side_; }
  bool contains(VertexIndex v) const { return side_.test(v); }
  Cut complement() const { return Cut(side_.complement()); }
  bool separates(VertexIndex a, VertexIndex b) const {
    return side_.test(a) != side_.test(b);
  }
  bool same_partition(const Cut& o) const {
    return side_ == o.side_ || side_ == o.side_.complement();
  }
  /// The orientation not containing vertex 0; used as a partition key.
  Cut normalized() const { return side_.test(0) ? complement() : *this; }

  friend bool operator==(const Cut&, const Cut&) = default;
  friend auto operator<=>(const Cut& a, const Cut& b) {
    return a.side_ <=> b.side_;
  }

 private:
  VertexSet side_;
};

struct CutHash {
  std::size_t operator()(const Cut& c) const { return c.side().hash(); }
};

/// Edge counts between the four corners of two cuts A and B.
///
/// a: A∩B – A*∩B    b: A∩B* – A*∩B*   c: A∩B – A∩B*
/// d: A*∩B – A*∩B*  e: A∩B* – A*∩B    f: A∩B – A*∩B*
/// (capacity-weighted). Hence c(A)=a+b+e+f, c(B)=c+d+e+f,
/// c(A∩B)=a+c+f and c(A*∩B)=a+d+e.
struct CornerData {
  VertexSet a_and_b, a_and_not_b, not_a_and_b, not_a_and_not_b;
  Capacity a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  /// Corner sets in the order A∩B, A∩B*, A*∩B, A*∩B*.
  std::vector<VertexSet> sets() const {
    return {a_and_b, a_and_not_b, not_a_and_b, not_a_and_not_b};
  }
  /// A corner set is a cut when it is nonempty (it is never the full set).
  static bool is_cut(const VertexSet& s) { return !s.empty(); }
};

/// Indices into net.edges() of the edges with exactly one end in the cut.
std::vector<std::size_t> coboundary(const Network& net, const Cut& cut);
Capacity capacity(const Network& net, const Cut& cut);
/// Capacity of an arbitrary vertex subset (0 for empty or full sets).
Capacity capacity_of(const WeightedGraph& g, const VertexSet& side);

CornerData corners(const Network& net, const Cut& a, const Cut& b);
bool is_nested(const VertexSet& a, const VertexSet& b);
inline bool is_nested(const Cut& a, const Cut& b) {
  return is_nested(a.side(), b.side());
}
/// Both sides induce connected subgraphs.
bool is_tight(const Network& net, const Cut& cut);
/// Whether `side` induces a connected subgraph (false for the empty set).
bool induces_connected(const Network& net, const VertexSet& side);

// Serialization.
Network load_network_json(std::istream& in);
Network load_network_dimacs(std::istream& in);
/// Chooses JSON or DIMACS by content (JSON starts with '{').
Network load_network_file(const std::string& path);
std::string network_to_json(const Network& net);

}  // namespace cuttree
