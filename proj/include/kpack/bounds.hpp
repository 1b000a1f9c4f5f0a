#pragma once

#include <cstdint>

#include "kpack/graph.hpp"
#include "kpack/rational.hpp"

namespace kpack {

// Inputs to the per-edge clique-count lower bound: a graph on n_star vertices
// with minimum degree at least n_star - degree_deficit, clique order t.
struct BoundQuery {
  long n_star = 0;
  long degree_deficit = 0;
  int t = 2;
};

struct BoundValue {
  Rational value;
  bool vacuous = false;  // some factor of the product was <= 0
};

// (1/(t-2)!) * prod_{i=2}^{t-1} (n_star - i*degree_deficit), exact.
BoundValue lemma26_bound(const BoundQuery& q);

struct ProbBound {
  Rational value;
  bool clamped = false;
};

// 1 - (1 - t*gamma)^(t-2), exact, clamped into [0,1].
ProbBound cor27_bound(const Rational& gamma, int t);

struct Lemma26Report {
  long deficit = 0;       // n - min_degree(g), derived from the graph
  Rational bound;
  bool vacuous = false;
  long min_count = 0;     // smallest per-edge K_t count observed
  Edge argmin{0, 0};
  bool holds = false;     // min_count >= bound
  std::uint64_t copies_enumerated = 0;
};

// Counts K_t copies per edge by enumeration and compares the minimum against
// lemma26_bound with the graph-derived deficit. copy_budget caps enumeration.
Lemma26Report verify_lemma26(const Graph& g, int t, std::uint64_t copy_budget = 10'000'000);

}  // namespace kpack
