#include "kpack/bounds.hpp"

#include <algorithm>

namespace kpack {

BoundValue lemma26_bound(const BoundQuery& q) {
  if (q.t < 2) throw ParamError("need t >= 2");
  BoundValue out;
  Rational prod(1);
  for (long i = 2; i <= q.t - 1; ++i) {
    const Rational factor(q.n_star - i * q.degree_deficit);
    if (factor.sign() <= 0) out.vacuous = true;
    prod *= factor;
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(q.t - 2));
  out.value = prod / Rational(fact);
  return out;
}

ProbBound cor27_bound(const Rational& gamma, int t) {
  if (t < 2) throw ParamError("need t >= 2");
  if (gamma.sign() < 0) throw ParamError("gamma must be nonnegative");
  ProbBound out;
  const Rational base = Rational(1) - Rational(t) * gamma;
  out.value = Rational(1) - pow(base, t - 2);
  if (out.value < Rational(0)) {
    out.value = Rational(0);
    out.clamped = true;
  } else if (out.value > Rational(1)) {
    out.value = Rational(1);
    out.clamped = true;
  }
  return out;
}

Lemma26Report verify_lemma26(const Graph& g, int t, std::uint64_t copy_budget) {
  const int n = g.num_vertices();
  if (t < 2 || t > n) throw ParamError("need 2 <= t <= n");
  Lemma26Report rep;
  rep.deficit = n - min_degree(g);
  const BoundValue b = lemma26_bound({n, rep.deficit, t});
  rep.bound = b.value;
  rep.vacuous = b.vacuous;

  // Budget estimate before enumeration: C(n,t) candidate tuples.
  const mpz_class cand = binomial(n, t);
  if (cand > mpz_class(static_cast<unsigned long>(copy_budget)))
    throw BudgetError("K_t enumeration infeasible: C(" + std::to_string(n) + "," +
                      std::to_string(t) + ") = " + cand.get_str() + " exceeds budget");

  std::vector<long> per_edge(static_cast<std::size_t>(g.num_edges()), 0);
  const auto copies = enumerate_cliques(g, t);
  rep.copies_enumerated = copies.size();
  for (const auto& c : copies)
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t bidx = a + 1; bidx < c.size(); ++bidx)
        ++per_edge[static_cast<std::size_t>(g.edge_index(c[a], c[bidx]))];

  rep.min_count = g.num_edges() == 0 ? 0 : per_edge[0];
  rep.argmin = g.num_edges() == 0 ? Edge{0, 0} : g.edges()[0];
  for (int i = 1; i < g.num_edges(); ++i) {
    if (per_edge[static_cast<std::size_t>(i)] < rep.min_count) {
      rep.min_count = per_edge[static_cast<std::size_t>(i)];
      rep.argmin = g.edges()[static_cast<std::size_t>(i)];
    }
  }
  rep.holds = Rational(rep.min_count) >= rep.bound;
  return rep;
}

}  // namespace kpack
