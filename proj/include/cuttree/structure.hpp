#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cuttree/flow.hpp"
#include "cuttree/network.hpp"

namespace cuttree {

// Complement-closed family of pairwise nested cuts, each tagged with its
// capacity.
class NestedSystem {
 public:
  NestedSystem() = default;
  explicit NestedSystem(int universe) : universe_(universe) {}

  int universe() const { return universe_; }
  // Adds A and its complement.
  void add_pair(const VertexSet& a, Capacity level);
  bool contains(const VertexSet& a) const { return cuts_.count(a); }
  Capacity level(const VertexSet& a) const { return cuts_.at(a); }
  std::size_t size() const { return cuts_.size(); }
  bool empty() const { return cuts_.empty(); }
  std::vector<VertexSet> members() const;
  const std::map<VertexSet, Capacity>& cuts() const { return cuts_; }
  // Members with level <= n.
  NestedSystem up_to(Capacity n) const;

  // Throws Error unless complement-closed and pairwise nested.
  void validate() const;

  friend bool operator==(const NestedSystem&, const NestedSystem&) = default;

 private:
  int universe_ = 0;
  std::map<VertexSet, Capacity> cuts_;
};

struct TreeEdge {
  int a = 0;
  int b = 0;
  Capacity capacity = 0;
  VertexSet cut_side;  // network vertices on a's side
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// Tree with node ids assigned by breadth-first search from the node holding
// vertex 0, children visited in the canonical order of the vertex set on
// their side. Edges are stored with a < b, sorted.
struct StructureTree {
  std::vector<std::string> vertex_names;
  std::vector<std::vector<VertexIndex>> images;  // per node, ascending
  std::vector<TreeEdge> edges;
  std::vector<int> nu;  // vertex -> node

  int node_count() const { return static_cast<int>(images.size()); }
  bool is_image(int node) const { return !images[node].empty(); }
  int degree(int node) const;
  std::vector<int> incident(int node) const;  // edge indices
  // Edge indices along the path between two nodes.
  std::vector<int> geodesic(int from, int to) const;
  // Smallest edge capacity on the path between nu(s) and nu(t); 0 if equal.
  Capacity path_min(VertexIndex s, VertexIndex t) const;

  friend bool operator==(const StructureTree&, const StructureTree&) = default;
};

StructureTree tree_from_nested(const Network& net, const NestedSystem& e);
// Recomputes the vertex-to-node map from the edge sides alone.
std::vector<int> nu_map(const Network& net, const StructureTree& tree);

// One level of the canonical induction. Throws Error for n < 1 or when
// `prev` leaves a pair below connectivity n unseparated.
NestedSystem level_up(const Network& net, const ConnectivityTable& lambda,
                      const NestedSystem& prev, Capacity n);
NestedSystem level_up(const Network& net, const NestedSystem& prev, Capacity n);

// Runs level_up over every connectivity value (up to max_level if given).
NestedSystem build_canonical_system(const Network& net,
                                    const ConnectivityTable& lambda,
                                    Capacity max_level = -1);
NestedSystem build_canonical_system(const Network& net);
StructureTree build_canonical_tree(const Network& net, Capacity max_level = -1);

// Contracts edges at nodes outside the image of nu until every node holds a
// vertex. At each such node the heaviest incident edge goes first; ties go
// to the edge whose far side holds the smallest vertex index.
StructureTree gomory_hu_extract(const StructureTree& tree);

// perm[v] is the image of v. Throws Error("not an automorphism ...").
bool check_automorphism_invariance(const Network& net,
                                   const std::vector<VertexIndex>& perm,
                                   const NestedSystem& e);

std::string tree_to_json(const StructureTree& tree);
StructureTree tree_from_json(std::istream& in);
std::string tree_to_dot(const StructureTree& tree);

}  // namespace cuttree
