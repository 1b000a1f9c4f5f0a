#include "kpack/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kpack {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw ParamError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), Bitset(n));
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw ParamError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) throw ParamError("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParamError("duplicate edge");
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].set(e.v);
    adj_[static_cast<std::size_t>(e.v)].set(e.u);
  }
}

int Graph::edge_index(int u, int v) const {
  const Edge e = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
  if (n < 3) throw ParamError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(es));
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  Bitset drop(g.num_edges());
  for (const auto& e : removed) {
    int idx = g.edge_index(e.u, e.v);
    if (idx < 0)
      throw ParamError("cannot remove non-edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    drop.set(idx);
  }
  std::vector<Edge> kept;
  kept.reserve(static_cast<std::size_t>(g.num_edges()));
  for (int i = 0; i < g.num_edges(); ++i)
    if (!drop.test(i)) kept.push_back(g.edges()[static_cast<std::size_t>(i)]);
  return Graph(g.num_vertices(), std::move(kept));
}

int min_degree(const Graph& g) {
  if (g.num_vertices() < 1) throw ParamError("min_degree of empty graph");
  int d = g.num_vertices();
  for (int v = 0; v < g.num_vertices(); ++v) d = std::min(d, g.degree(v));
  return d;
}

namespace {

// Ordered-vertex backtracking: cur holds a clique, cand the common
// neighborhood restricted to vertices greater than cur.back().
void extend_cliques(const Graph& g, int k, CliqueCopy& cur, const Bitset& cand,
                    std::vector<CliqueCopy>& out) {
  const int need = k - static_cast<int>(cur.size());
  if (need == 0) {
    out.push_back(cur);
    return;
  }
  if (cand.count() < need) return;
  for (int v = cand.next_set(0); v >= 0; v = cand.next_set(v + 1)) {
    Bitset next = cand;
    next &= g.neighbors(v);
    for (int w = next.next_set(0); w >= 0 && w <= v; w = next.next_set(w + 1)) next.reset(w);
    cur.push_back(v);
    extend_cliques(g, k, cur, next, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CliqueCopy> enumerate_cliques(const Graph& g, int k) {
  if (k < 2 || k > g.num_vertices())
    throw ParamError("clique order out of range: k=" + std::to_string(k));
  std::vector<CliqueCopy> out;
  CliqueCopy cur;
  for (int v = 0; v < g.num_vertices(); ++v) {
    Bitset cand = g.neighbors(v);
    for (int w = cand.next_set(0); w >= 0 && w <= v; w = cand.next_set(w + 1)) cand.reset(w);
    cur.push_back(v);
    extend_cliques(g, k, cur, cand, out);
    cur.pop_back();
  }
  return out;
}

std::vector<CliqueCopy> cliques_containing_edge(const Graph& g, Edge e, int k) {
  if (e.u > e.v) std::swap(e.u, e.v);
  if (!g.has_edge(e.u, e.v))
    throw ParamError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  if (k < 2 || k > g.num_vertices())
    throw ParamError("clique order out of range: k=" + std::to_string(k));
  std::vector<CliqueCopy> out;
  if (k == 2) {
    out.push_back({e.u, e.v});
    return out;
  }
  Bitset common = g.neighbors(e.u);
  common &= g.neighbors(e.v);
  // Enumerate (k-2)-cliques inside the common neighborhood, then canonicalize
  // the full tuple; a final sort restores lexicographic order.
  std::vector<CliqueCopy> partial;
  CliqueCopy cur;
  for (int v = common.next_set(0); v >= 0; v = common.next_set(v + 1)) {
    if (k == 3) {
      partial.push_back({v});
      continue;
    }
    Bitset cand = common;
    cand &= g.neighbors(v);
    for (int w = cand.next_set(0); w >= 0 && w <= v; w = cand.next_set(w + 1)) cand.reset(w);
    cur.push_back(v);
    extend_cliques(g, k - 2, cur, cand, partial);
    cur.pop_back();
  }
  for (auto& p : partial) {
    p.push_back(e.u);
    p.push_back(e.v);
    std::sort(p.begin(), p.end());
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique(const Graph& g, const CliqueCopy& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.num_vertices()) return false;
    if (i + 1 < vertices.size() && vertices[i] >= vertices[i + 1]) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_edge(vertices[i], vertices[j])) return false;
  }
  return true;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "p") {
      if (n >= 0) throw ParseError("duplicate problem line", lineno);
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
        throw ParseError("malformed header, expected \"p edge <n> <m>\"", lineno);
    } else if (word == "e") {
      if (n < 0) throw ParseError("edge before problem line", lineno);
      long u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line", lineno);
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError("vertex index out of range [1," + std::to_string(n) + "]", lineno);
      Edge e = make_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      if (!seen.insert(e).second)
        throw ParseError("duplicate edge (" + std::to_string(e.u + 1) + "," +
                             std::to_string(e.v + 1) + ")",
                         lineno);
      edges.push_back(e);
    } else {
      throw ParseError("unrecognized line", lineno);
    }
  }
  if (n < 0) throw ParseError("missing problem line", lineno == 0 ? 1 : lineno);
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     lineno);
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace kpack
