#pragma once

// Counterexample searches shared by the property tests and the acceptance
// run. Each returns how many instances were checked and how many failed.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "cuttree/cutring.hpp"
#include "cuttree/flow.hpp"
#include "cuttree/oracle.hpp"
#include "cuttree/structure.hpp"

namespace testing_support {

struct Tally {
  long checked = 0;
  long failed = 0;
  Tally& operator+=(const Tally& o) {
    checked += o.checked;
    failed += o.failed;
    return *this;
  }
};

using cuttree::oracle::Mask;

inline bool nested_mask(Mask a, Mask b, Mask full) {
  return !(a & b) || !(a & ~b & full) || !(~a & b & full) || !(~a & ~b & full);
}

// Cuts to range over: every subset when exhaustive, otherwise a sample.
inline std::vector<Mask> cut_pool(int n, bool exhaustive, std::mt19937& rng,
                                  int samples = 400) {
  const Mask full = (Mask(1) << n) - 1;
  std::vector<Mask> out;
  if (exhaustive) {
    for (Mask m = 1; m < full; ++m) out.push_back(m);
  } else {
    std::uniform_int_distribution<Mask> pick(1, full - 1);
    for (int i = 0; i < samples; ++i) out.push_back(pick(rng));
  }
  return out;
}

inline std::vector<Mask> thin_cuts(const cuttree::Network& net,
                                   const cuttree::ConnectivityTable& lambda,
                                   const std::vector<Mask>& pool) {
  std::vector<Mask> out;
  for (Mask m : pool)
    if (cuttree::is_thin(net, lambda,
                         cuttree::Cut(cuttree::oracle::to_set(m, net.vertex_count()))))
      out.push_back(m);
  return out;
}

// A, B crossing and C nested with both: C is nested with every corner.
inline Tally corner_nesting(int n, const std::vector<Mask>& pool) {
  const Mask full = (Mask(1) << n) - 1;
  Tally t;
  for (Mask a : pool)
    for (Mask b : pool) {
      if (b <= a || nested_mask(a, b, full)) continue;
      const Mask corners[] = {a & b, a & ~b & full, ~a & b & full, ~a & ~b & full};
      for (Mask c : pool) {
        if (!nested_mask(c, a, full) || !nested_mask(c, b, full)) continue;
        ++t.checked;
        for (Mask k : corners)
          if (!nested_mask(c, k, full)) {
            ++t.failed;
            break;
          }
      }
    }
  return t;
}

// For a nested family of thin cuts containing B and a thin A crossing B,
// mu(A∩B) + mu(A∩B*) < mu(A).
inline Tally corner_mu_drop(int n, const std::vector<Mask>& family,
                            const std::vector<Mask>& thin) {
  const Mask full = (Mask(1) << n) - 1;
  auto mu = [&](Mask x) {
    long c = 0;
    for (Mask f : family) c += !nested_mask(x, f, full);
    return c;
  };
  Tally t;
  for (Mask b : family)
    for (Mask a : thin) {
      if (nested_mask(a, b, full)) continue;
      ++t.checked;
      if (mu(a & b) + mu(a & ~b & full) >= mu(a)) ++t.failed;
    }
  return t;
}

// Greedy random maximal nested family of thin cuts (complement-closed).
inline std::vector<Mask> random_nested_family(int n, std::vector<Mask> thin,
                                              std::mt19937& rng) {
  const Mask full = (Mask(1) << n) - 1;
  std::shuffle(thin.begin(), thin.end(), rng);
  std::vector<Mask> family;
  for (Mask m : thin) {
    bool ok = true;
    for (Mask f : family) ok &= nested_mask(m, f, full);
    if (ok) {
      family.push_back(m);
      family.push_back(full & ~m);
    }
  }
  return family;
}

// Uncrossing crossing thin cuts yields thin corners with the original
// capacities.
inline Tally uncross_thin(const cuttree::Network& net,
                          const cuttree::ConnectivityTable& lambda,
                          const std::vector<Mask>& thin) {
  const int n = net.vertex_count();
  const Mask full = (Mask(1) << n) - 1;
  Tally t;
  for (Mask a : thin)
    for (Mask b : thin) {
      if (a == b || nested_mask(a, b, full)) continue;
      ++t.checked;
      const cuttree::Cut ca(cuttree::oracle::to_set(a, n)), cb(cuttree::oracle::to_set(b, n));
      try {
        auto [x, y] = cuttree::uncross(net, lambda, ca, cb);
        const auto d = cuttree::corners(net, ca, cb);
        bool corner_x = false, corner_y = false;
        for (const auto& s : d.sets()) {
          corner_x |= s == x.side() || s == x.side().complement();
          corner_y |= s == y.side() || s == y.side().complement();
        }
        if (!corner_x || !corner_y || x.side().intersects(y.side()) ||
            cuttree::capacity(net, x) != cuttree::capacity(net, ca) ||
            cuttree::capacity(net, y) != cuttree::capacity(net, cb) ||
            !cuttree::is_thin(net, lambda, x) || !cuttree::is_thin(net, lambda, y))
          ++t.failed;
      } catch (const std::logic_error&) {
        ++t.failed;
      }
    }
  return t;
}

inline Tally thin_is_tight(const cuttree::Network& net, const std::vector<Mask>& thin) {
  Tally t;
  for (Mask m : thin) {
    ++t.checked;
    if (!cuttree::is_tight(net, cuttree::Cut(cuttree::oracle::to_set(m, net.vertex_count()))))
      ++t.failed;
  }
  return t;
}

// The net flow over every cut separating source and sink is the same.
inline Tally flow_constancy(const cuttree::Network& net, const std::vector<Mask>& pool) {
  const int n = net.vertex_count();
  Tally t;
  for (int s = 0; s < n; ++s)
    for (int u = s + 1; u < n; ++u) {
      const auto f = cuttree::max_flow(net, s, u);
      for (Mask m : pool) {
        if (!((m >> s) & 1) || ((m >> u) & 1)) continue;
        ++t.checked;
        if (cuttree::flow_value_across_cut(net, f, cuttree::Cut(cuttree::oracle::to_set(m, n))) !=
            f.value)
          ++t.failed;
      }
    }
  return t;
}

// The a..f counts reproduce c(A), c(B) and the corner capacities, and
// c(A) + c(B) >= c(A∩B) + c(A∪B).
inline Tally corner_counts(const cuttree::Network& net, const std::vector<Mask>& pool) {
  const int n = net.vertex_count();
  const Mask full = (Mask(1) << n) - 1;
  const auto caps = cuttree::oracle::capacity_table(net.graph());
  Tally t;
  for (Mask a : pool)
    for (Mask b : pool) {
      if (b < a) continue;
      ++t.checked;
      const auto d = cuttree::corners(net, cuttree::Cut(cuttree::oracle::to_set(a, n)),
                                      cuttree::Cut(cuttree::oracle::to_set(b, n)));
      const bool ok = caps[a] == d.a + d.b + d.e + d.f && caps[b] == d.c + d.d + d.e + d.f &&
                      caps[a & b] == d.a + d.c + d.f &&
                      caps[a & ~b & full] == d.b + d.c + d.e &&
                      caps[~a & b & full] == d.a + d.d + d.e &&
                      caps[~a & ~b & full] == d.b + d.d + d.f &&
                      caps[a] + caps[b] >= caps[a & b] + caps[a | b];
      if (!ok) ++t.failed;
    }
  return t;
}

}  // namespace testing_support
