#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cuttree/cutring.hpp"
#include "cuttree/strips.hpp"
#include "support/helpers.hpp"

using namespace cuttree;
using testing_support::strip_fixture;

namespace {

StripPoint at(long col, const std::string& id) { return {StripPoint::Vertex, col, id}; }
const StripPoint kLeft{StripPoint::LeftEnd, 0, {}};
const StripPoint kRight{StripPoint::RightEnd, 0, {}};

long column_of(const std::string& name) {
  if (name == "end:left") return -1000000;
  if (name == "end:right") return 1000000;
  return std::stol(name.substr(4, name.find('/') - 4));
}

std::string shift_name(const std::string& name, long by) {
  if (name.rfind("end:", 0) == 0) return name;
  return strip_vertex_id(column_of(name) + by, name.substr(name.find('/') + 1));
}

// Tight cuts of capacity <= n whose coboundary stays within columns
// -r..r, each keyed by its coboundary edges (by name) and the side holding
// the left end.
std::set<std::vector<std::string>> local_cuts(const StripNetwork& s, int w,
                                              Capacity n, long r) {
  const auto t = truncate(s, w);
  const auto& net = t.net;
  auto inside = [&](const Edge& e) {
    const long a = column_of(net.name(e.u)), b = column_of(net.name(e.v));
    return std::abs(a) <= r && std::abs(b) <= r;
  };
  TightCutEnumerator en(net);
  std::set<std::vector<std::string>> out;
  for (std::size_t i = 0; i < net.edge_count(); ++i) {
    if (!inside(net.edges()[i])) continue;
    for (Capacity k = 1; k <= n; ++k) {
      for (const auto& [side, _] : en.through_edge(i, k)) {
        if (side.test(t.left)) continue;
        std::vector<std::string> key;
        bool local = true;
        for (auto j : coboundary(net, Cut(side))) {
          local &= inside(net.edges()[j]);
          key.push_back(net.name(net.edges()[j].u) + "|" + net.name(net.edges()[j].v));
        }
        if (local) out.insert(key);
      }
    }
  }
  return out;
}

}  // namespace

TEST(StripPointSyntax, ParsesAndRejects) {
  EXPECT_EQ(StripPoint::parse("end:left").kind, StripPoint::LeftEnd);
  EXPECT_EQ(StripPoint::parse("end:right").kind, StripPoint::RightEnd);
  auto p = StripPoint::parse("col:-3/top");
  EXPECT_EQ(p.column, -3);
  EXPECT_EQ(p.vertex, "top");
  EXPECT_EQ(p.id(), "col:-3/top");
  EXPECT_THROW(StripPoint::parse("col:x/top"), Error);
  EXPECT_THROW(StripPoint::parse("end:middle"), Error);
  EXPECT_THROW(StripPoint::parse("col:1/"), Error);
}

TEST(StripValidation, Rejections) {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return load_strip_json(in);
  };
  EXPECT_THROW(load(R"({"pattern":["a"],"internal":[],"forward":[]})"), Error);
  EXPECT_THROW(load(R"({"pattern":["a"],"forward":[{"u":"a","v":"z","c":1}]})"), Error);
  // Two interleaved rails that never meet.
  EXPECT_THROW(load(R"({"pattern":["a","b"],"forward":[{"u":"a","v":"b","c":1},{"u":"b","v":"a","c":1}]})"),
               Error);
  EXPECT_NO_THROW(load(R"({"pattern":["a"],"forward":[{"u":"a","v":"a","c":2}]})"));
}

TEST(Truncate, Counts) {
  auto ladder = strip_fixture("ladder.json");
  EXPECT_EQ(truncate(ladder, 1).net.vertex_count(), 8);
  auto five = strip_fixture("fiveline.json");
  EXPECT_EQ(truncate(five, 0).net.vertex_count(), 7);
  auto t = truncate(ladder, 2);
  EXPECT_EQ(capacity(t.net, Cut(VertexSet(t.net.vertex_count(), {t.left}))), 2);
  EXPECT_EQ(capacity(t.net, Cut(VertexSet(t.net.vertex_count(), {t.right}))), 2);
}

TEST(Separation, Ladder) {
  auto s = strip_fixture("ladder.json");
  EXPECT_EQ(separation_level(s, kLeft, kRight), 2);
  EXPECT_EQ(separation_level(s, at(0, "top"), at(0, "bottom")), 3);
  EXPECT_EQ(separation_level(s, at(0, "top"), at(1, "top")), 2);
  EXPECT_EQ(separation_level(s, at(-2, "bottom"), kRight), 2);
}

TEST(Separation, FiveLine) {
  auto s = strip_fixture("fiveline.json");
  EXPECT_EQ(separation_level(s, kLeft, kRight), 5);
  Capacity best = 0;
  for (const auto& a : s.pattern)
    for (const auto& b : s.pattern) {
      for (long col = 0; col <= 1; ++col) {
        if (col == 0 && a == b) continue;
        auto l = separation_level(s, at(0, a), at(col, b));
        EXPECT_LE(l, 4);
        best = std::max(best, l);
      }
    }
  EXPECT_EQ(best, 4);
}

TEST(Separation, RejectsUnknownAndEqual) {
  auto s = strip_fixture("ladder.json");
  EXPECT_THROW(separation_level(s, kLeft, kLeft), Error);
  EXPECT_THROW(separation_level(s, at(0, "middle"), kLeft), Error);
}

TEST(WindowedTree, LadderLevelTwoIsPath) {
  auto s = strip_fixture("ladder.json");
  auto wt = windowed_tree(s, 2, 3);
  for (int x = 0; x < wt.tree.node_count(); ++x) EXPECT_LE(wt.tree.degree(x), 2);
  EXPECT_EQ(wt.tree.node_count(), 2 * 3 + 3);  // 7 columns and 2 apexes
  for (const auto& e : wt.tree.edges) EXPECT_EQ(e.capacity, 2);
  EXPECT_FALSE(wt.left_shared);
}

TEST(WindowedTree, LadderLevelThreeHasLeaves) {
  auto s = strip_fixture("ladder.json");
  auto wt = windowed_tree(s, 3, 3);
  const auto& t = wt.tree;
  const auto& net = wt.window.net;
  for (long col = -2; col <= 2; ++col) {
    const int top = t.nu[net.index(strip_vertex_id(col, "top"))];
    const int bottom = t.nu[net.index(strip_vertex_id(col, "bottom"))];
    EXPECT_NE(top, bottom);
    EXPECT_EQ(t.degree(top), 1);
    EXPECT_EQ(t.degree(bottom), 1);
    // Both leaves hang off one hidden node of the central line.
    const int hub = [&] {
      const auto& e = t.edges[t.incident(top)[0]];
      return e.a == top ? e.b : e.a;
    }();
    EXPECT_FALSE(t.is_image(hub));
    EXPECT_EQ(t.degree(hub), 4);
  }
}

TEST(WindowedTree, FiveLineDegreeGrows) {
  auto s = strip_fixture("fiveline.json");
  int previous = 0;
  for (int w = 3; w <= 6; ++w) {
    auto wt = windowed_tree(s, 3, w);
    int top = 0;
    for (int x = 0; x < wt.tree.node_count(); ++x) top = std::max(top, wt.tree.degree(x));
    EXPECT_GT(top, previous);
    previous = top;
  }
}

TEST(WindowedTree, Preconditions) {
  auto s = strip_fixture("ladder.json");
  EXPECT_THROW(windowed_tree(s, 0, 3), Error);
  EXPECT_THROW(windowed_tree(s, 4, 3), Error);
}

TEST(EndFlow, LadderEnds) {
  auto s = strip_fixture("ladder.json");
  for (int w = 0; w <= 3; ++w) {
    auto cert = end_flow_certificate(s, kLeft, kRight, w);
    EXPECT_EQ(cert.flow.value, 2);
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(cert.pieced);
    const auto& net = cert.window.net;
    for (std::size_t i = 0; i < net.edge_count(); ++i) {
      const auto& e = net.edges()[i];
      const bool rung = column_of(net.name(e.u)) == column_of(net.name(e.v));
      EXPECT_EQ(std::abs(cert.flow.flow[i]), rung ? 0 : 1);
    }
  }
}

TEST(EndFlow, MatchesSeparation) {
  auto ladder = strip_fixture("ladder.json");
  auto five = strip_fixture("fiveline.json");
  struct Case {
    const StripNetwork* s;
    StripPoint x, y;
    Capacity want;
  };
  const Case cases[] = {{&ladder, at(0, "top"), at(0, "bottom"), 3},
                        {&five, kLeft, kRight, 5},
                        {&five, at(0, "r2"), kLeft, 4},
                        {&five, at(0, "r0"), at(2, "r4"), 3}};
  for (const auto& c : cases) {
    const auto sep = separation(*c.s, c.x, c.y);
    EXPECT_EQ(sep.level, c.want);
    auto cert = end_flow_certificate(*c.s, c.x, c.y, sep.width);
    EXPECT_EQ(cert.flow.value, sep.level);
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(cert.pieced);
  }
}

TEST(StripProperties, WindowStability) {
  for (const auto* name : {"ladder.json", "fiveline.json"}) {
    auto s = strip_fixture(name);
    for (Capacity n = 1; n <= 4; ++n) {
      const int w = static_cast<int>(3 * n);
      const long r = w - n;
      EXPECT_EQ(local_cuts(s, w, n, r), local_cuts(s, w + 1, n, r)) << name << " n=" << n;
    }
  }
}

TEST(StripProperties, PeriodicShift) {
  for (const auto* name : {"ladder.json", "fiveline.json"}) {
    auto s = strip_fixture(name);
    const auto t = truncate(s, 6);
    const auto lambda = all_pairs_connectivity(t.net);
    TightCutEnumerator en(t.net);
    for (std::size_t i = 0; i < t.net.edge_count(); ++i) {
      const auto& e = t.net.edges()[i];
      if (std::abs(column_of(t.net.name(e.u))) > 1) continue;
      for (Capacity k = 1; k <= 5; ++k) {
        for (const auto& [side, _] : en.through_edge(i, k)) {
          if (side.test(t.left) || side.test(t.right)) continue;
          bool central = true;
          side.for_each([&](VertexIndex v) { central &= std::abs(column_of(t.net.name(v))) <= 2; });
          if (!central) continue;
          VertexSet moved(t.net.vertex_count());
          side.for_each([&](VertexIndex v) { moved.set(t.net.index(shift_name(t.net.name(v), 1))); });
          EXPECT_EQ(capacity(t.net, Cut(moved)), capacity(t.net, Cut(side)));
          EXPECT_EQ(is_thin(t.net, lambda, Cut(moved)), is_thin(t.net, lambda, Cut(side)));
        }
      }
    }
  }
}

TEST(StripProperties, FiniteIntervals) {
  // Between any two members, the members nested strictly between them are
  // finitely many and form a chain.
  auto s = strip_fixture("ladder.json");
  auto wt = windowed_tree(s, 3, 4);
  EXPECT_EQ(static_cast<std::size_t>(wt.tree.node_count()), wt.tree.edges.size() + 1);
  for (const auto& e : wt.tree.edges) {
    for (const auto& f : wt.tree.edges) {
      if (!e.cut_side.is_subset_of(f.cut_side) || e.cut_side == f.cut_side) continue;
      std::vector<VertexSet> between;
      for (const auto& g : wt.tree.edges)
        for (const auto& side : {g.cut_side, g.cut_side.complement()})
          if (e.cut_side.is_subset_of(side) && side.is_subset_of(f.cut_side) &&
              side != e.cut_side && side != f.cut_side)
            between.push_back(side);
      for (const auto& x : between)
        for (const auto& y : between)
          EXPECT_TRUE(x.is_subset_of(y) || y.is_subset_of(x));
    }
  }
}
