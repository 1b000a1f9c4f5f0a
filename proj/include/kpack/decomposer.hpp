#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpack/design.hpp"
#include "kpack/graph.hpp"

namespace kpack {

// Pipeline configuration. t and r are derived from k; the caps default to
// the asymptotic formulas clamped to >= 1 (meaningless verbatim at desk
// scale) and can be overridden.
struct DecomposerConfig {
  int k = 3;
  std::optional<int> maxdeg_cap;      // target max degree of the bad-edge graph
  std::optional<int> saturation_cap;  // per-vertex absorbed-edge cap
  int sample_attempts = 64;
  std::uint64_t rng_seed = 0;
  bool keep_near_kt = false;

  int t() const { return 2 * k - 1; }
  int r() const { return k * (k - 1) / 2 - 1; }
  int resolved_maxdeg_cap(int n) const;      // floor(6n/k^7), clamped to >= 1
  int resolved_saturation_cap(int n) const;  // floor(n/2k), clamped to >= 1
};

// A pipeline stage could not complete; stage is one of "preprocess",
// "design", "select", "assemble", "verify".
class DecomposeError : public std::runtime_error {
 public:
  DecomposeError(std::string stage_, const std::string& msg)
      : std::runtime_error(stage_ + ": " + msg), stage(std::move(stage_)) {}
  std::string stage;
};

struct PartitionElement {
  std::vector<int> vertices;  // sorted, size t
  std::vector<Edge> edges;    // induced edges, sorted
  bool is_complete = false;   // K_t
  bool is_near_kt = false;    // K_t minus exactly one edge
};

// Edge partition G_pi: induced subgraphs on the permuted design blocks.
struct Partition {
  std::vector<PartitionElement> elements;
  std::vector<Edge> bad_edges;  // edges of elements routed through good sets
  Permutation permutation;
  int bad_max_degree = 0;
  bool above_cap = false;  // tagged by sample_partition
  int attempts_used = 0;
  bool keep_near_kt = false;

  // Element index containing a vertex pair (every pair lies in exactly one).
  int element_of(int u, int v) const {
    return pair_element_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }

  std::vector<int> pair_element_;  // flattened n x n lookup
  std::size_t n_ = 0;
};

// Candidate rejection counters mirroring the proof's a_1..a_5: candidates
// seen, same-element conflicts, other bad edge inside the candidate, element
// already used, vertex saturation.
struct RejectionDiagnostics {
  std::uint64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0;
};

struct GoodSetChoice {
  Edge bad_edge;
  CliqueCopy clique;                       // the K_k absorbing bad_edge
  std::vector<std::pair<int, Edge>> picks; // (element index, edge taken from it)
};

struct GoodSetAssignment {
  std::vector<GoodSetChoice> choices;  // bad edges in lexicographic order
  RejectionDiagnostics diag;
  std::vector<int> absorbed_count;     // per-vertex bookkeeping at completion
  int saturation_cap_used = 0;
};

struct CertificatePart {
  enum class Tag { Kk, Kt, KtMinus } tag = Tag::Kk;
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted
  std::string source;         // annotation: which element/bad edge produced it
};

std::string_view tag_name(CertificatePart::Tag tag);

struct DecompositionCertificate {
  int k = 0;
  std::vector<CertificatePart> parts;
  // Reproducibility metadata.
  std::uint64_t seed = 0;
  int maxdeg_cap = 0;
  int saturation_cap = 0;
  bool keep_near_kt = false;
  bool partition_above_cap = false;
  bool below_paper_threshold = false;
  RejectionDiagnostics diag;
};

struct PreprocessResult {
  Graph reduced;                        // vertices relabeled 0..n'-1
  std::vector<CertificatePart> absorbed;  // in the input graph's labels
  std::vector<int> removed_vertices;      // removal order, input labels
  std::vector<int> reduced_to_original;   // label map, strictly increasing
};

// Vertex removals until n = 1 mod t(t-1): each round tiles the minimum-degree
// vertex's neighborhood with K_{k-1}/K_{3k-4} cliques by backtracking and
// absorbs all incident edges into K_k / K_t-minus parts.
PreprocessResult preprocess(const Graph& g, const DecomposerConfig& cfg);

Partition partition_graph(const Graph& g, const Design& d, const Permutation& p,
                          bool keep_near_kt = false);

// Draws up to cfg.sample_attempts permutations; returns the first partition
// whose bad-edge max degree meets the cap, else the best found tagged
// above_cap. sample_attempts == 0 uses the identity permutation.
Partition sample_partition(const Graph& g, const Design& d, const DecomposerConfig& cfg);

// Processes bad edges lexicographically; for each, accepts the first K_k
// candidate whose other r edges sit in r distinct unused complete elements,
// meet no other bad edge, and saturate no vertex.
GoodSetAssignment select_good_sets(const Graph& g, const Partition& part,
                                   const DecomposerConfig& cfg);

// Builds the certificate: one K_k per bad edge, K_t-minus for each element a
// good set drew from, K_t for untouched complete elements, then the absorbed
// parts (which must share the partition's label space).
DecompositionCertificate assemble(const Graph& g, const Partition& part,
                                  const GoodSetAssignment& sel,
                                  const std::vector<CertificatePart>& absorbed,
                                  const DecomposerConfig& cfg);

// Independent checker: parts partition E(g) exactly and every part matches
// its tag's structure. Shares no code with assemble.
ValidityReport verify_certificate(const Graph& g, const DecompositionCertificate& cert,
                                  const DecomposerConfig& cfg);

struct DesignSource {
  enum class Kind { builtin_pg, search, file } kind = Kind::builtin_pg;
  int q = 4;                      // builtin_pg
  std::optional<Design> design;   // file
  std::uint64_t search_budget = 50'000'000;

  static DesignSource pg(int q);
  static DesignSource searched(std::uint64_t budget = 50'000'000);
  static DesignSource from_design(Design d);
};

// End-to-end driver: preprocess, resolve a design for the reduced order,
// sample a partition, select good sets, assemble, verify. Returns only a
// verified certificate; failures carry their stage.
DecompositionCertificate decompose(const Graph& g, const DecomposerConfig& cfg,
                                   const DesignSource& source);

}  // namespace kpack
