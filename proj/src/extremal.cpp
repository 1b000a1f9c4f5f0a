#include "kpack/extremal.hpp"

#include <algorithm>
#include <set>

namespace kpack {

Graph random_regular(int nv, int deg, std::uint64_t seed) {
  if (nv <= 0 || deg < 0 || deg >= nv) throw ParamError("need 0 <= deg < nv");
  if ((static_cast<long>(nv) * deg) % 2 != 0)
    throw ParamError("nv*deg must be even for a regular graph");
  if (deg == 0) return Graph(nv);
  Rng rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(nv) * static_cast<std::size_t>(deg));
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < deg; ++i) stubs[static_cast<std::size_t>(v) * deg + i] = v;
  const std::size_t pairs = stubs.size() / 2;

  // Pairing model with switch repair: pair shuffled stubs, then fix loops and
  // multi-edges by swapping stub partners with random other pairs. A pairing
  // that cannot be repaired within its fuel is thrown away entirely.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    rng.shuffle(stubs);
    std::set<Edge> edges;
    std::vector<std::size_t> illegal;
    std::vector<char> is_illegal(pairs, 0);
    for (std::size_t i = 0; i < pairs; ++i) {
      const int a = stubs[2 * i], b = stubs[2 * i + 1];
      if (a == b || !edges.insert(make_edge(a, b)).second) {
        illegal.push_back(i);
        is_illegal[i] = 1;
      }
    }
    std::uint64_t fuel = 400 * pairs;
    while (!illegal.empty() && fuel > 0) {
      --fuel;
      const std::size_t i = illegal.back();
      const std::size_t j = static_cast<std::size_t>(rng.below(pairs));
      if (j == i) continue;
      const int a1 = stubs[2 * i], b1 = stubs[2 * i + 1];
      const int a2 = stubs[2 * j], b2 = stubs[2 * j + 1];
      if (a1 == b2 || a2 == b1) continue;
      if (!is_illegal[j]) edges.erase(make_edge(a2, b2));
      const Edge e1 = make_edge(a1, b2), e2 = make_edge(a2, b1);
      if (e1 != e2 && !edges.count(e1) && !edges.count(e2)) {
        edges.insert(e1);
        edges.insert(e2);
        std::swap(stubs[2 * i + 1], stubs[2 * j + 1]);
        illegal.pop_back();
        is_illegal[i] = 0;
        if (is_illegal[j]) {
          is_illegal[j] = 0;
          illegal.erase(std::find(illegal.begin(), illegal.end(), j));
        }
      } else if (!is_illegal[j]) {
        edges.insert(make_edge(a2, b2));
      }
    }
    if (illegal.empty())
      return Graph(nv, std::vector<Edge>(edges.begin(), edges.end()));
  }
  throw SolverError("pairing model failed 1000 attempts; use circulant_graph instead");
}

Graph circulant_graph(int nv, int deg) {
  if (nv <= 0 || deg < 0 || deg >= nv) throw ParamError("need 0 <= deg < nv");
  if (deg % 2 == 1 && nv % 2 == 1)
    throw ParamError("odd degree circulant needs an even vertex count");
  std::set<Edge> edges;
  for (int off = 1; off <= deg / 2; ++off)
    for (int v = 0; v < nv; ++v) edges.insert(make_edge(v, (v + off) % nv));
  if (deg % 2 == 1)
    for (int v = 0; v < nv / 2; ++v) edges.insert(make_edge(v, v + nv / 2));
  Graph g(nv, std::vector<Edge>(edges.begin(), edges.end()));
  for (int v = 0; v < nv; ++v)
    if (g.degree(v) != deg)
      throw ParamError("offsets collide for nv=" + std::to_string(nv) +
                       ", deg=" + std::to_string(deg));
  return g;
}

std::pair<Graph, BlowupSpec> blow_up(int k, const Graph& part_graph) {
  if (k < 3) throw ParamError("need k >= 3");
  const int ps = part_graph.num_vertices();
  if (ps < 1) throw ParamError("part graph must be nonempty");
  const int deg = ps == 0 ? 0 : part_graph.degree(0);
  for (int v = 0; v < ps; ++v)
    if (part_graph.degree(v) != deg) throw ParamError("part graph must be regular");

  BlowupSpec spec;
  spec.k = k;
  spec.part_size = ps;
  spec.part_graph = part_graph;
  spec.n = (k - 1) * ps;
  std::vector<Edge> edges;
  for (int part = 0; part < k - 1; ++part) {
    const int base = part * ps;
    for (const auto& e : part_graph.edges()) edges.push_back({base + e.u, base + e.v});
  }
  for (int pa = 0; pa < k - 1; ++pa)
    for (int pb = pa + 1; pb < k - 1; ++pb)
      for (int a = 0; a < ps; ++a)
        for (int b = 0; b < ps; ++b) edges.push_back({pa * ps + a, pb * ps + b});
  return {Graph(spec.n, std::move(edges)), spec};
}

std::pair<Graph, BlowupSpec> paper_blowup(int k, long s, const Rational& epsilon,
                                          std::uint64_t seed) {
  if (k < 3 || s < 1) throw ParamError("need k >= 3 and s >= 1");
  if (epsilon.sign() < 0) throw ParamError("epsilon must be nonnegative");
  const long part_size = 2 * s * (static_cast<long>(k) * k * k - k);
  const long n = part_size * (k - 1);
  const long d = (epsilon * Rational(n)).floor().get_si();
  const long deg = 4 * s * (static_cast<long>(k) * k - k) - d;
  if (deg < 0 || deg >= part_size) throw ParamError("epsilon too large for this k and s");
  Graph part = random_regular(static_cast<int>(part_size), static_cast<int>(deg), seed);
  auto [g, spec] = blow_up(k, part);
  spec.s = s;
  spec.epsilon = epsilon;
  spec.d = d;
  return {std::move(g), std::move(spec)};
}

ExtremalReport structural_bound_report(const Graph& g, const BlowupSpec& spec,
                                       std::uint64_t enumeration_budget) {
  if (g.num_vertices() != spec.n || spec.part_size <= 0)
    throw ParamError("graph does not match blow-up spec");
  ExtremalReport rep;
  rep.n = g.num_vertices();
  rep.min_degree = min_degree(g);
  rep.intra_edge_count = static_cast<long>(spec.k - 1) * spec.part_graph.num_edges();
  rep.structural_bound = Rational(rep.intra_edge_count);
  rep.target = Rational(mpz_class(g.num_edges()), binomial(spec.k, 2));
  if (rep.target.sign() > 0) {
    const Rational def = Rational(1) - rep.structural_bound / rep.target;
    rep.deficiency = def.sign() > 0 ? def : Rational(0);
  }

  // Pigeonhole premise: k vertices in k-1 parts force an intra-part edge.
  // Re-checked by enumeration when the candidate count is affordable.
  if (binomial(g.num_vertices(), spec.k) <=
      mpz_class(static_cast<unsigned long>(enumeration_budget))) {
    auto part_of = [&](int v) { return v / spec.part_size; };
    for (const auto& c : enumerate_cliques(g, spec.k)) {
      ++rep.kk_copies;
      bool has_intra = false;
      for (std::size_t a = 0; a < c.size() && !has_intra; ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
          if (part_of(c[a]) == part_of(c[b])) {
            has_intra = true;
            break;
          }
      if (!has_intra)
        throw SolverError("blow-up premise violated: K_k with no intra-part edge");
    }
    rep.premise_checked = true;
  }
  return rep;
}

}  // namespace kpack
