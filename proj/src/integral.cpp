#include "kpack/integral.hpp"

#include <algorithm>

namespace kpack {

namespace {

struct Search {
  const Graph& g;
  int k;
  long kc2;
  std::vector<CliqueCopy> cliques;
  std::vector<std::vector<int>> clique_edges;     // edge indices per clique
  std::vector<std::vector<int>> edge_cliques;     // clique indices per edge
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  long lp_floor;                                   // root bound
  std::vector<CliqueCopy> best;
  std::vector<int> chosen;

  Search(const Graph& g_, int k_, std::uint64_t budget_) : g(g_), k(k_), budget(budget_) {
    kc2 = static_cast<long>(k) * (k - 1) / 2;
    if (k >= 2 && k <= g.num_vertices()) cliques = enumerate_cliques(g, k);
    clique_edges.resize(cliques.size());
    edge_cliques.resize(static_cast<std::size_t>(g.num_edges()));
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      const auto& cv = cliques[c];
      for (std::size_t a = 0; a < cv.size(); ++a)
        for (std::size_t b = a + 1; b < cv.size(); ++b) {
          const int idx = g.edge_index(cv[a], cv[b]);
          clique_edges[c].push_back(idx);
          edge_cliques[static_cast<std::size_t>(idx)].push_back(static_cast<int>(c));
        }
      std::sort(clique_edges[c].begin(), clique_edges[c].end());
    }
    if (!cliques.empty()) {
      const LPSolution root = solve_exact(build_packing_lp(g, k, cliques));
      lp_floor = root.value.floor().get_si();
    } else {
      lp_floor = 0;
    }
  }

  void run() {
    Bitset covered(g.num_edges());
    Bitset excluded(g.num_edges());
    dfs(covered, excluded, g.num_edges());
  }

  void dfs(Bitset& covered, Bitset& excluded, int free_edges) {
    if (++nodes > budget) {
      IntegralPacking b{k, best};
      throw PackingBudgetError(std::move(b), nodes);
    }
    const long cur = static_cast<long>(chosen.size());
    if (cur > static_cast<long>(best.size())) {
      best.clear();
      for (int c : chosen) best.push_back(cliques[static_cast<std::size_t>(c)]);
    }
    if (static_cast<long>(best.size()) >= lp_floor) return;  // proven optimal
    if (cur + free_edges / kc2 <= static_cast<long>(best.size())) return;

    // Smallest undecided edge.
    int e = -1;
    for (int i = 0; i < g.num_edges(); ++i) {
      if (!covered.test(i) && !excluded.test(i)) {
        e = i;
        break;
      }
    }
    if (e < 0) return;

    for (int c : edge_cliques[static_cast<std::size_t>(e)]) {
      bool free = true;
      for (int idx : clique_edges[static_cast<std::size_t>(c)]) {
        if (covered.test(idx) || excluded.test(idx)) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      for (int idx : clique_edges[static_cast<std::size_t>(c)]) covered.set(idx);
      chosen.push_back(c);
      dfs(covered, excluded, free_edges - static_cast<int>(kc2));
      chosen.pop_back();
      for (int idx : clique_edges[static_cast<std::size_t>(c)]) covered.reset(idx);
    }
    excluded.set(e);
    dfs(covered, excluded, free_edges - 1);
    excluded.reset(e);
  }
};

std::vector<int> clique_edge_ids(const Graph& g, const CliqueCopy& c) {
  std::vector<int> ids;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b) ids.push_back(g.edge_index(c[a], c[b]));
  return ids;
}

}  // namespace

IntegralPacking max_packing_exact(const Graph& g, int k, std::uint64_t node_budget) {
  if (k < 2) throw ParamError("clique order must be at least 2");
  if (node_budget == 0) throw ParamError("node budget must be positive");
  Search s(g, k, node_budget);
  s.run();
  return IntegralPacking{k, std::move(s.best)};
}

IntegralPacking greedy_packing(const Graph& g, int k, std::uint64_t order_seed) {
  IntegralPacking p{k, {}};
  if (k < 2 || k > g.num_vertices()) return p;
  auto cliques = enumerate_cliques(g, k);
  Rng rng(order_seed);
  rng.shuffle(cliques);
  Bitset used(g.num_edges());
  for (auto& c : cliques) {
    const auto ids = clique_edge_ids(g, c);
    bool free = std::none_of(ids.begin(), ids.end(), [&](int i) { return used.test(i); });
    if (!free) continue;
    for (int i : ids) used.set(i);
    p.copies.push_back(std::move(c));
  }
  std::sort(p.copies.begin(), p.copies.end());
  return p;
}

IntegralPacking round_fractional(const Graph& g, const FractionalPacking& p) {
  if (const auto rep = validate_fractional(g, p, false); !rep.ok())
    throw ParamError("invalid fractional packing: " + rep.violations.front());
  auto order = p.weights;
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  IntegralPacking out{p.k, {}};
  Bitset used(g.num_edges());
  for (const auto& [copy, w] : order) {
    if (w.sign() == 0) continue;
    const auto ids = clique_edge_ids(g, copy);
    bool free = std::none_of(ids.begin(), ids.end(), [&](int i) { return used.test(i); });
    if (!free) continue;
    for (int i : ids) used.set(i);
    out.copies.push_back(copy);
  }
  std::sort(out.copies.begin(), out.copies.end());
  return out;
}

ValidityReport verify_packing(const Graph& g, const IntegralPacking& p) {
  ValidityReport rep;
  std::vector<int> cover(static_cast<std::size_t>(g.num_edges()), 0);
  for (const auto& c : p.copies) {
    std::string name = "copy (";
    for (std::size_t i = 0; i < c.size(); ++i) name += (i ? "," : "") + std::to_string(c[i]);
    name += ")";
    if (static_cast<int>(c.size()) != p.k) {
      rep.fail(name + " has wrong order");
      continue;
    }
    if (!is_clique(g, c)) {
      rep.fail(name + " is not a clique of the host graph");
      continue;
    }
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        ++cover[static_cast<std::size_t>(g.edge_index(c[a], c[b]))];
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    if (cover[static_cast<std::size_t>(i)] > 1) {
      const Edge e = g.edges()[static_cast<std::size_t>(i)];
      rep.fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") reused " +
               std::to_string(cover[static_cast<std::size_t>(i)]) + " times");
    }
  }
  return rep;
}

GapReport gap_report(const Graph& g, int k, bool exact, std::uint64_t node_budget,
                     std::uint64_t greedy_seed) {
  GapReport rep;
  rep.nu_star = fractional_packing_number(g, k).lp_value;
  if (exact) {
    rep.nu = max_packing_exact(g, k, node_budget).size();
    rep.method = GapMethod::exact;
  } else {
    rep.nu = greedy_packing(g, k, greedy_seed).size();
    rep.method = GapMethod::greedy_lower_bound;
  }
  rep.gap = rep.nu_star - Rational(rep.nu);
  return rep;
}

}  // namespace kpack
