#include "cuttree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>

namespace cuttree::oracle {

int limit() {
  if (const char* env = std::getenv("CUTTREE_ORACLE_LIMIT")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return std::min(v, 24);
    } catch (const std::exception&) {
    }
  }
  return 16;
}

void require_small(const Network& net, int max_vertices) {
  if (net.vertex_count() > max_vertices)
    throw Error("oracle limit exceeded: " + std::to_string(net.vertex_count()) +
                " vertices, limit " + std::to_string(max_vertices));
}

Mask to_mask(const VertexSet& s) {
  return s.words().empty() ? 0 : static_cast<Mask>(s.words()[0]);
}

VertexSet to_set(Mask m, int n) {
  VertexSet s(n);
  for (; m; m &= m - 1) s.set(std::countr_zero(m));
  return s;
}

// Splits the masks into blocks by their high bits; each block starts from a
// directly computed capacity and Gray-walks its low bits.
std::vector<Capacity> capacity_table(const WeightedGraph& g) {
  const int n = g.vertex_count;
  std::vector<std::vector<std::pair<int, Capacity>>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.cap});
    adj[e.v].push_back({e.u, e.cap});
  }
  const Mask full = (Mask(1) << n) - 1;
  std::vector<Capacity> cap(std::size_t(full) + 1, 0);
  const int high = std::min(n, 6);
  const int low = n - high;
  const long blocks = 1L << high;
#pragma omp parallel for schedule(static)
  for (long h = 0; h < blocks; ++h) {
    Mask gray = Mask(h) << low;
    Capacity c = 0;
    for (const auto& e : g.edges)
      if (((gray >> e.u) ^ (gray >> e.v)) & 1) c += e.cap;
    cap[gray] = c;
    for (Mask i = 1; i < (Mask(1) << low); ++i) {
      const int b = std::countr_zero(i);
      gray ^= Mask(1) << b;
      const bool inside = (gray >> b) & 1;
      for (auto [w, wc] : adj[b]) c += (((gray >> w) & 1) == inside) ? -wc : wc;
      cap[gray] = c;
    }
  }
  cap[full] = 0;
  return cap;
}

std::vector<Capacity> capacity_table_serial(const WeightedGraph& g) {
  const int n = g.vertex_count;
  std::vector<std::vector<std::pair<int, Capacity>>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.cap});
    adj[e.v].push_back({e.u, e.cap});
  }
  const Mask full = (Mask(1) << n) - 1;
  std::vector<Capacity> cap(std::size_t(full) + 1, 0);
  Mask gray = 0;
  Capacity c = 0;
  for (Mask i = 1; i <= full; ++i) {
    const int b = std::countr_zero(i);
    gray ^= Mask(1) << b;
    const bool inside = (gray >> b) & 1;
    for (auto [w, wc] : adj[b]) c += (((gray >> w) & 1) == inside) ? -wc : wc;
    cap[gray] = c;
  }
  cap[full] = 0;
  return cap;
}

ConnectivityTable connectivity(const Network& net,
                               const std::vector<Capacity>& caps) {
  const int n = net.vertex_count();
  const Mask full = (Mask(1) << n) - 1;
  std::vector<Capacity> best(std::size_t(n) * n,
                             std::numeric_limits<Capacity>::max());
  // Masks without vertex 0 cover every partition once.
  for (Mask m = 1; m < full; m += 2) {
    const Mask side = full & ~m;
    const Capacity c = caps[m];
    for (Mask a = m; a; a &= a - 1) {
      const int u = std::countr_zero(a);
      for (Mask b = side; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        auto& slot = best[std::size_t(u) * n + v];
        if (c < slot) slot = c;
      }
    }
  }
  ConnectivityTable table(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      table.set(u, v, std::min(best[std::size_t(u) * n + v],
                               best[std::size_t(v) * n + u]));
  return table;
}

ConnectivityTable connectivity(const Network& net) {
  require_small(net);
  return connectivity(net, capacity_table(net.graph()));
}

std::size_t count_min_cuts(const Network& net, VertexIndex s, VertexIndex t) {
  require_small(net);
  if (s == t) throw Error("identical endpoints");
  const auto caps = capacity_table(net.graph());
  const Mask full = (Mask(1) << net.vertex_count()) - 1;
  Capacity best = std::numeric_limits<Capacity>::max();
  std::size_t count = 0;
  for (Mask m = 1; m < full; ++m) {
    if (!((m >> s) & 1) || ((m >> t) & 1)) continue;
    if (caps[m] < best) {
      best = caps[m];
      count = 0;
    }
    if (caps[m] == best) ++count;
  }
  return count;
}

namespace {

bool nested(Mask a, Mask b, Mask full) {
  return !(a & b) || !(a & ~b & full) || !(~a & b & full) ||
         !(~a & ~b & full);
}

struct Context {
  int n;
  Mask full;
  std::vector<Capacity> caps;
  ConnectivityTable lambda;

  explicit Context(const Network& net)
      : n(net.vertex_count()),
        full((Mask(1) << net.vertex_count()) - 1),
        caps(capacity_table(net.graph())),
        lambda(connectivity(net, caps)) {}

  // Largest connectivity over the pairs that m separates.
  Capacity max_separated(Mask m) const {
    Capacity best = 0;
    for (Mask a = m; a; a &= a - 1)
      for (Mask b = full & ~m; b; b &= b - 1)
        best = std::max(best, lambda.at(std::countr_zero(a), std::countr_zero(b)));
    return best;
  }

  // Thin cuts of capacity n nested with every member of prev.
  std::vector<Mask> candidates(Capacity level, const std::vector<Mask>& prev) const {
    std::vector<Mask> out;
    for (Mask m = 1; m < full; ++m) {
      if (caps[m] != level || max_separated(m) != level) continue;
      if (std::all_of(prev.begin(), prev.end(),
                      [&](Mask c) { return nested(m, c, full); }))
        out.push_back(m);
    }
    return out;
  }
};

std::vector<Mask> merged(const std::vector<Mask>& prev, const std::set<Mask>& add) {
  std::set<Mask> all(prev.begin(), prev.end());
  all.insert(add.begin(), add.end());
  return {all.begin(), all.end()};
}

}  // namespace

std::vector<Level> canonical_levels(const Network& net) {
  require_small(net);
  const Context ctx(net);
  std::vector<Level> out;
  std::vector<Mask> system;
  for (Capacity level : ctx.lambda.levels()) {
    const auto cand = ctx.candidates(level, system);
    std::vector<std::size_t> mu(cand.size(), 0);
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (std::size_t j = 0; j < cand.size(); ++j)
        if (!nested(cand[i], cand[j], ctx.full)) ++mu[i];

    std::set<Mask> add;
    for (int u = 0; u < ctx.n; ++u) {
      for (int v = 0; v < ctx.n; ++v) {
        if (u == v || ctx.lambda.at(u, v) != level) continue;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < cand.size(); ++i)
          if (((cand[i] >> u) & 1) && !((cand[i] >> v) & 1))
            best = std::min(best, mu[i]);
        if (best == std::numeric_limits<std::size_t>::max())
          throw std::logic_error("no thin separator for a pair at its level");
        for (std::size_t i = 0; i < cand.size(); ++i)
          if (((cand[i] >> u) & 1) && !((cand[i] >> v) & 1) && mu[i] == best) {
            add.insert(cand[i]);
            add.insert(ctx.full & ~cand[i]);
          }
      }
    }
    system = merged(system, add);
    out.push_back({level, system});
  }
  return out;
}

std::vector<Level> smallest_cut_levels(const Network& net) {
  require_small(net);
  const Context ctx(net);
  std::vector<Level> out;
  std::vector<Mask> system;
  for (Capacity level : ctx.lambda.levels()) {
    const auto cand = ctx.candidates(level, system);
    std::set<Mask> add;
    for (int u = 0; u < ctx.n; ++u) {
      bool pending = false;
      for (int v = 0; v < ctx.n; ++v)
        if (v != u && ctx.lambda.at(u, v) == level) pending = true;
      if (!pending) continue;
      std::vector<Mask> minimal;
      for (Mask m : cand) {
        if (!((m >> u) & 1)) continue;
        bool has_smaller = false;
        for (Mask o : cand)
          if (o != m && ((o >> u) & 1) && (o & m) == o) has_smaller = true;
        if (!has_smaller) minimal.push_back(m);
      }
      if (minimal.size() == 1) {
        add.insert(minimal[0]);
        add.insert(ctx.full & ~minimal[0]);
      }
    }
    system = merged(system, add);
    out.push_back({level, system});
  }
  return out;
}

}  // namespace cuttree::oracle
