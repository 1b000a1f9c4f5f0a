#pragma once

#include <utility>
#include <vector>

#include "kpack/graph.hpp"
#include "kpack/lp.hpp"

namespace kpack {

// Weight function on K_k copies; entries sorted by copy, zero weights omitted.
struct FractionalPacking {
  int k = 0;
  std::vector<std::pair<CliqueCopy, Rational>> weights;
};

// Outcome of the fractional packing LP, with the decomposition test
// nu* == e(G)/C(k,2) decided by exact comparison.
struct DecompositionReport {
  int k = 0;
  Rational lp_value;
  Rational target;
  bool is_fractional_decomposition = false;
  FractionalPacking witness;
};

// Exact nu*_{K_k}(g) via full clique enumeration + exact LP. k >= 2.
DecompositionReport fractional_packing_number(const Graph& g, int k);

// Weight 1/C(n-2, k-2) on every K_k copy of K_n; per-edge sums are exactly 1.
FractionalPacking uniform_complete_decomposition(int n, int k);

// The closed-form fractional K_k-decomposition of K_{2k-1} minus one edge:
// weight 1/C(2k-4, k-2) on every copy meeting the two nonadjacent vertices.
// Host graph is lemma22_host(k): K_{2k-1} with edge (0,1) removed. k >= 3.
FractionalPacking lemma22_decomposition(int k);
Graph lemma22_host(int k);

// Checks copy validity, weight bounds and per-edge sums (<= 1, or == 1 on
// every edge when require_decomposition). Exact arithmetic throughout.
ValidityReport validate_fractional(const Graph& g, const FractionalPacking& p,
                                   bool require_decomposition);

}  // namespace kpack
