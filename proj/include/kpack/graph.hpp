#pragma once

#include <span>
#include <string>
#include <vector>

#include "kpack/core.hpp"

namespace kpack {

// Unordered vertex pair in canonical order u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// One K_k copy as its strictly increasing vertex tuple.
using CliqueCopy = std::vector<int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Adjacency is kept both as a bitset row per vertex (fast neighborhood
// intersection during clique enumeration) and as a sorted edge list with
// stable indices (the LP's constraint rows).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && u != v && adj_[static_cast<std::size_t>(u)].test(v);
  }
  // Position of an edge in edges(), or -1 when absent.
  int edge_index(int u, int v) const;
  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
  const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;   // sorted lexicographically, u < v
  std::vector<Bitset> adj_;   // one row per vertex
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph remove_edges(const Graph& g, std::span<const Edge> removed);
int min_degree(const Graph& g);

// All k-cliques in lexicographic order of their vertex tuples. 2 <= k <= n.
std::vector<CliqueCopy> enumerate_cliques(const Graph& g, int k);

// The k-cliques whose vertex set contains both endpoints of e (e must be an
// edge of g), in lexicographic order.
std::vector<CliqueCopy> cliques_containing_edge(const Graph& g, Edge e, int k);

// Whether the vertex tuple is strictly increasing and spans a clique of g.
bool is_clique(const Graph& g, const CliqueCopy& vertices);

// Text format: "p edge <n> <m>" header, then m lines "e <u> <v>" with
// 1-indexed u < v; "c " lines are comments.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace kpack
