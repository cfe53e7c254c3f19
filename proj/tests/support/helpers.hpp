#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cuttree/network.hpp"
#include "cuttree/strips.hpp"

namespace testing_support {

inline std::string fixture_path(const std::string& name) {
  return std::string(CUTTREE_FIXTURE_DIR) + "/" + name;
}

inline cuttree::Network fixture(const std::string& name) {
  return cuttree::load_network_file(fixture_path(name));
}

inline cuttree::StripNetwork strip_fixture(const std::string& name) {
  return cuttree::load_strip_file(fixture_path(name));
}

inline cuttree::Network make(std::vector<std::string> vertices,
                             std::vector<cuttree::Network::EdgeSpec> edges) {
  return cuttree::Network::build(std::move(vertices), edges);
}

// Cycle on vertices "1".."n" with unit capacities.
inline cuttree::Network cycle(int n) {
  std::vector<std::string> vs;
  std::vector<cuttree::Network::EdgeSpec> es;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(std::to_string(i));
    es.push_back({std::to_string(i), std::to_string(i % n + 1), 1});
  }
  return make(vs, es);
}

// Random connected network on n vertices named v0..v{n-1}, capacities in
// [1, max_cap]. A random spanning tree guarantees connectivity.
inline cuttree::Network random_network(std::mt19937& rng, int n, int max_cap = 4,
                                       double density = 0.4) {
  std::uniform_int_distribution<int> cap(1, max_cap);
  std::bernoulli_distribution extra(density);
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<cuttree::Network::EdgeSpec> es;
  for (int i = 1; i < n; ++i) {
    const int parent = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    used[parent][order[i]] = used[order[i]][parent] = true;
    es.push_back({vs[parent], vs[order[i]], cap(rng)});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used[u][v] && extra(rng)) es.push_back({vs[u], vs[v], cap(rng)});
  return make(vs, es);
}

// The same network with vertex names permuted: vertex named names[i] is
// renamed to names[perm[i]].
inline cuttree::Network relabel(const cuttree::Network& net,
                                const std::vector<int>& perm) {
  std::vector<cuttree::Network::EdgeSpec> es;
  for (const auto& e : net.edges())
    es.push_back({net.name(perm[e.u]), net.name(perm[e.v]), e.cap});
  return make(net.names(), es);
}

}  // namespace testing_support
