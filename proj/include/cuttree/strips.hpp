#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cuttree/flow.hpp"
#include "cuttree/network.hpp"
#include "cuttree/structure.hpp"

namespace cuttree {

// Two-ended periodic graph Z x pattern. Internal links join pattern
// vertices inside one column; forward links join u in column i to v in
// column i+1.
struct StripNetwork {
  struct Link {
    std::string u;
    std::string v;
    Capacity cap = 1;
  };
  std::vector<std::string> pattern;
  std::vector<Link> internal;
  std::vector<Link> forward;

  // Throws Error for unknown or duplicate ids, loops, repeated links,
  // non-positive capacities, no forward links, or a disconnected strip.
  void validate() const;
};

StripNetwork load_strip_json(std::istream& in);
StripNetwork load_strip_file(const std::string& path);

// A strip vertex (column, pattern id) or one of the two ends.
struct StripPoint {
  enum Kind { Vertex, LeftEnd, RightEnd };
  Kind kind = Vertex;
  long column = 0;
  std::string vertex;

  // "end:left", "end:right" or "col:<int>/<pattern id>".
  static StripPoint parse(const std::string& text);
  std::string id() const;
  friend bool operator==(const StripPoint&, const StripPoint&) = default;
};

// Columns -w..w plus one apex per side standing in for everything beyond.
// Parallel apex links are merged by adding capacities.
struct Truncation {
  int width = 0;
  Network net;
  VertexIndex left = 0;
  VertexIndex right = 0;

  VertexIndex locate(const StripPoint& p) const;
};

Truncation truncate(const StripNetwork& s, int w);

std::string strip_vertex_id(long column, const std::string& pattern_id);

struct Separation {
  Capacity level = 0;
  int width = 0;  // window at which the value was accepted
};

// Minimum capacity of a cut of the infinite strip separating x and y.
// Widens the window until widths w and w+1 agree and the value survives
// making the apex links unbreakable. Throws Error past the width cap.
Separation separation(const StripNetwork& s, const StripPoint& x,
                      const StripPoint& y);
Capacity separation_level(const StripNetwork& s, const StripPoint& x,
                          const StripPoint& y);

struct WindowedTree {
  Truncation window;
  StructureTree tree;
  int left_node = 0;
  int right_node = 0;
  // Whether an apex shares its node with strip vertices. A shared node
  // stands for a tree vertex; an exclusive one may stand for an end of the
  // tree, which the window cannot decide.
  bool left_shared = false;
  bool right_shared = false;
};

// Canonical tree of the width-w window, cut off at level n. Requires
// n >= 1 and w >= n.
WindowedTree windowed_tree(const StripNetwork& s, Capacity n, int w);

struct EndFlowCertificate {
  Truncation window;
  FlowAssignment flow;
  bool verified = false;
  // Net flow over every vertical boundary shared with the width w+1
  // window is the same in both.
  bool pieced = false;
};

EndFlowCertificate end_flow_certificate(const StripNetwork& s,
                                        const StripPoint& x,
                                        const StripPoint& y, int w);

}  // namespace cuttree
