#include "kpack/fractional.hpp"

#include <algorithm>
#include <map>

namespace kpack {

DecompositionReport fractional_packing_number(const Graph& g, int k) {
  if (k < 2) throw ParamError("clique order must be at least 2");
  DecompositionReport rep;
  rep.k = k;
  rep.target = Rational(mpz_class(g.num_edges()), binomial(k, 2));
  rep.witness.k = k;
  std::vector<CliqueCopy> copies;
  if (k <= g.num_vertices()) copies = enumerate_cliques(g, k);
  if (!copies.empty()) {
    const PackingLP lp = build_packing_lp(g, k, copies);
    const LPSolution sol = solve_exact(lp);
    rep.lp_value = sol.value;
    for (std::size_t j = 0; j < copies.size(); ++j)
      if (sol.assignment[j].sign() > 0)
        rep.witness.weights.emplace_back(copies[j], sol.assignment[j]);
  }
  rep.is_fractional_decomposition = rep.lp_value == rep.target;
  return rep;
}

FractionalPacking uniform_complete_decomposition(int n, int k) {
  if (k < 2) throw ParamError("clique order must be at least 2");
  if (n < k) throw ParamError("need n >= k");
  const Graph g = complete_graph(n);
  FractionalPacking p;
  p.k = k;
  const Rational w(mpz_class(1), binomial(n - 2, k - 2));
  for (auto& c : enumerate_cliques(g, k)) p.weights.emplace_back(std::move(c), w);
  return p;
}

Graph lemma22_host(int k) {
  if (k < 3) throw ParamError("need k >= 3");
  const Edge missing{0, 1};
  return remove_edges(complete_graph(2 * k - 1), std::span<const Edge>(&missing, 1));
}

FractionalPacking lemma22_decomposition(int k) {
  if (k < 3) throw ParamError("need k >= 3");
  const Graph host = lemma22_host(k);
  FractionalPacking p;
  p.k = k;
  const Rational w(mpz_class(1), binomial(2 * k - 4, k - 2));
  for (auto& c : enumerate_cliques(host, k)) {
    // Copies meeting {0,1}; no copy contains both since (0,1) is the missing edge.
    if (c[0] == 0 || c[0] == 1) p.weights.emplace_back(std::move(c), w);
  }
  return p;
}

ValidityReport validate_fractional(const Graph& g, const FractionalPacking& p,
                                   bool require_decomposition) {
  ValidityReport rep;
  const Rational one(1);
  std::vector<Rational> edge_sum(static_cast<std::size_t>(g.num_edges()));
  const CliqueCopy* prev = nullptr;
  for (const auto& [copy, w] : p.weights) {
    std::string name = "copy (";
    for (std::size_t i = 0; i < copy.size(); ++i)
      name += (i ? "," : "") + std::to_string(copy[i]);
    name += ")";
    if (static_cast<int>(copy.size()) != p.k) {
      rep.fail(name + " has wrong order");
      continue;
    }
    if (!is_clique(g, copy)) {
      rep.fail(name + " is not a clique of the host graph");
      continue;
    }
    if (prev && !(*prev < copy)) rep.fail(name + " breaks sorted weight order");
    prev = &copy;
    if (w.sign() < 0 || w > one) {
      rep.fail(name + " weight " + w.str() + " outside [0,1]");
      continue;
    }
    for (std::size_t a = 0; a < copy.size(); ++a)
      for (std::size_t b = a + 1; b < copy.size(); ++b)
        edge_sum[static_cast<std::size_t>(g.edge_index(copy[a], copy[b]))] += w;
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    const auto& s = edge_sum[static_cast<std::size_t>(i)];
    const Edge e = g.edges()[static_cast<std::size_t>(i)];
    const std::string id = "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (s > one)
      rep.fail("edge " + id + " covered " + s.str() + " > 1");
    else if (require_decomposition && s != one)
      rep.fail("edge " + id + " covered " + s.str() + " != 1");
  }
  return rep;
}

}  // namespace kpack
