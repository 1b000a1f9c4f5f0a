#pragma once

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "kpack/graph.hpp"

// Shared test utilities: seeded random graphs and an independent brute-force
// packing oracle (plain include/skip recursion over the clique list, no
// bounds), kept deliberately separate from the library's branch-and-bound.
namespace kptest {

inline kpack::Graph random_graph(int n, double p, std::uint64_t seed) {
  kpack::Rng rng(seed);
  const std::uint64_t threshold = static_cast<std::uint64_t>(p * 1000000.0);
  std::vector<kpack::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(1000000) < threshold) es.push_back({u, v});
  return kpack::Graph(n, std::move(es));
}

inline int brute_force_max_packing(const kpack::Graph& g, int k) {
  if (k < 2 || k > g.num_vertices()) return 0;
  REQUIRE(g.num_edges() <= 64);
  const auto cliques = kpack::enumerate_cliques(g, k);
  std::vector<std::uint64_t> masks;
  for (const auto& c : cliques) {
    std::uint64_t m = 0;
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        m |= std::uint64_t{1} << g.edge_index(c[a], c[b]);
    masks.push_back(m);
  }
  // Enumerate every packing as an increasing-index subset.
  int best = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used, int size) -> void {
    best = std::max(best, size);
    for (std::size_t j = i; j < masks.size(); ++j)
      if ((masks[j] & used) == 0) self(self, j + 1, used | masks[j], size + 1);
  };
  rec(rec, 0, 0, 0);
  return best;
}

}  // namespace kptest
