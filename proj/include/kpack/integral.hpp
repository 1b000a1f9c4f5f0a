#pragma once

#include <cstdint>
#include <vector>

#include "kpack/fractional.hpp"
#include "kpack/graph.hpp"

namespace kpack {

// Pairwise edge-disjoint K_k copies.
struct IntegralPacking {
  int k = 0;
  std::vector<CliqueCopy> copies;
  int size() const { return static_cast<int>(copies.size()); }
};

// Branch-and-bound ran past its node budget; carries the best packing seen.
class PackingBudgetError : public BudgetError {
 public:
  PackingBudgetError(IntegralPacking best, std::uint64_t nodes)
      : BudgetError("packing search exceeded node budget after " + std::to_string(nodes) +
                    " nodes"),
        best_so_far(std::move(best)),
        nodes(nodes) {}
  IntegralPacking best_so_far;
  std::uint64_t nodes;
};

// Maximum K_k-packing by branch-and-bound over clique inclusion, branching on
// the lexicographically smallest undecided edge. Exact LP bound at the root,
// remaining-edges/C(k,2) bound per node. Throws PackingBudgetError rather
// than returning a possibly suboptimal answer.
IntegralPacking max_packing_exact(const Graph& g, int k, std::uint64_t node_budget);

// Maximal packing from a seeded random scan order.
IntegralPacking greedy_packing(const Graph& g, int k, std::uint64_t order_seed);

// Scans the support of p by decreasing weight (ties lexicographic) and keeps
// edge-disjoint copies; a maximal sub-collection of the support.
IntegralPacking round_fractional(const Graph& g, const FractionalPacking& p);

// Independent edge-disjointness/validity verifier.
ValidityReport verify_packing(const Graph& g, const IntegralPacking& p);

enum class GapMethod { exact, greedy_lower_bound };

struct GapReport {
  Rational nu_star;
  long nu = 0;
  Rational gap;
  GapMethod method = GapMethod::exact;
};

// nu* from the exact LP; nu exact (branch-and-bound) or a greedy lower bound.
GapReport gap_report(const Graph& g, int k, bool exact,
                     std::uint64_t node_budget = 50'000'000, std::uint64_t greedy_seed = 0);

}  // namespace kpack
