#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "kpack/graph.hpp"
#include "kpack/rational.hpp"

namespace kpack {

// Blow-up of K_{k-1}: k-1 disjoint copies of a regular part graph with all
// cross-part pairs adjacent. s/epsilon/d are set when the instance follows
// the standard parameterization part_size = 2s(k^3-k), degree = 4s(k^2-k)-d,
// d = floor(epsilon * n).
struct BlowupSpec {
  int k = 0;
  int part_size = 0;
  Graph part_graph;
  int n = 0;
  std::optional<long> s;
  std::optional<Rational> epsilon;
  std::optional<long> d;
};

// Simple deg-regular graph on nv vertices via the pairing model, rejecting
// pairings with loops or multi-edges; up to 1000 attempts, deterministic in
// the seed.
Graph random_regular(int nv, int deg, std::uint64_t seed);

// Deterministic fallback: circulant with offsets 1..deg/2 (plus nv/2 when deg
// is odd, which requires nv even).
Graph circulant_graph(int nv, int deg);

std::pair<Graph, BlowupSpec> blow_up(int k, const Graph& part_graph);

// The parameterized family: part graph random regular from the given seed.
std::pair<Graph, BlowupSpec> paper_blowup(int k, long s, const Rational& epsilon,
                                          std::uint64_t seed);

struct ExtremalReport {
  int n = 0;
  int min_degree = 0;
  long intra_edge_count = 0;
  Rational structural_bound;  // (k-1) * e(part_graph)
  Rational target;            // e(G) / C(k,2)
  Rational deficiency;        // max(0, 1 - bound/target)
  bool premise_checked = false;
  std::uint64_t kk_copies = 0;
};

// Reports the structural fractional-packing bound. When the K_k count is
// small enough the pigeonhole premise (every K_k uses an intra-part edge) is
// re-checked by exhaustive enumeration.
ExtremalReport structural_bound_report(const Graph& g, const BlowupSpec& spec,
                                       std::uint64_t enumeration_budget = 2'000'000);

}  // namespace kpack
