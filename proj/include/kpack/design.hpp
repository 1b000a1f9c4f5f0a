#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpack/core.hpp"

namespace kpack {

// Steiner system S(2,t,n): t-subsets of 0..n-1 covering every pair exactly once.
struct Design {
  int n = 0;
  int t = 0;
  std::vector<std::vector<int>> blocks;  // each block sorted ascending
  friend bool operator==(const Design&, const Design&) = default;
};

// Bijection on 0..n-1.
struct Permutation {
  std::vector<int> map;

  int size() const { return static_cast<int>(map.size()); }
  int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }
  static Permutation identity(int n);
  Permutation inverse() const;
  Permutation then(const Permutation& next) const;  // apply *this, then next
  bool is_bijection() const;
};

// Uniform permutation of 0..n-1 by Fisher-Yates from the shared Rng.
Permutation random_permutation(int n, Rng& rng);

// Points/lines of PG(2,q) over the q-element field; q in {2,3,4} (built-in
// field tables). Result is S(2, q+1, q^2+q+1), validated before return.
Design projective_plane_design(int q);

enum class DesignSearchStatus { found, none_exists, budget_exceeded, divisibility };

struct DesignSearchResult {
  DesignSearchStatus status = DesignSearchStatus::none_exists;
  std::optional<Design> design;
  std::uint64_t nodes = 0;
};

// Exact-cover backtracking over pairs, lexicographically smallest uncovered
// pair first, candidate blocks in lexicographic order. Exhaustive within the
// node budget, so none_exists is a proof; budget_exceeded is not.
DesignSearchResult search_design(int n, int t, std::uint64_t node_budget);

// Pair-coverage table check: every pair exactly once, block count
// C(n,2)/C(t,2), blocks sorted and in range.
ValidityReport validate_design(const Design& d);

// Blocks mapped pointwise and re-sorted.
Design permute_design(const Design& d, const Permutation& p);

// Text format: "design <n> <t> <b>" then b lines of t sorted 1-indexed points.
// parse_design validates before returning.
Design parse_design(const std::string& text);
std::string serialize_design(const Design& d);

}  // namespace kpack
