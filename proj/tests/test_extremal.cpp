#include <doctest.h>

#include "kpack/extremal.hpp"
#include "kpack/fractional.hpp"

using namespace kpack;

namespace {

void check_regular(const Graph& g, int deg) {
  for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.degree(v) == deg);
}

}  // namespace

TEST_CASE("random regular sampler") {
  const Graph g1 = random_regular(6, 2, 1);
  CHECK(g1.num_edges() == 6);
  check_regular(g1, 2);

  const Graph g2 = random_regular(48, 20, 3);
  CHECK(g2.num_edges() == 480);
  check_regular(g2, 20);

  CHECK_THROWS_AS(random_regular(5, 3, 0), ParamError);
  CHECK_THROWS_AS(random_regular(4, 4, 0), ParamError);

  SUBCASE("deterministic in the seed") {
    CHECK(random_regular(10, 3, 42) == random_regular(10, 3, 42));
  }
  SUBCASE("simplicity and regularity across many seeds") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int nv = 8 + static_cast<int>(seed % 5) * 2;
      const int deg = 3 + static_cast<int>(seed % 3);
      const Graph g = random_regular(nv, deg, seed);
      check_regular(g, deg);  // Graph construction already rejects loops/dups
    }
  }
}

TEST_CASE("circulant fallback") {
  check_regular(circulant_graph(6, 2), 2);
  check_regular(circulant_graph(8, 3), 3);
  check_regular(circulant_graph(10, 4), 4);
  CHECK_THROWS_AS(circulant_graph(7, 3), ParamError);
  CHECK(circulant_graph(6, 2) == cycle_graph(6));
}

TEST_CASE("blow-up structure") {
  SUBCASE("two hexagons") {
    const auto [g, spec] = blow_up(3, cycle_graph(6));
    CHECK(g.num_vertices() == 12);
    CHECK(g.num_edges() == 48);  // 36 cross + 12 intra
    check_regular(g, 8);
    CHECK(spec.part_size == 6);
    CHECK(spec.n == 12);
  }
  SUBCASE("paper-sized parts") {
    const auto [g, spec] = blow_up(3, random_regular(48, 20, 3));
    CHECK(g.num_vertices() == 96);
    check_regular(g, 68);  // 96*(3/4) - 4
  }
  SUBCASE("k=4 structure") {
    const auto [g, spec] = blow_up(4, cycle_graph(4));
    CHECK(g.num_vertices() == 12);
    // Cross-part pairs are all present.
    for (int a = 0; a < 4; ++a)
      for (int b = 4; b < 8; ++b) CHECK(g.has_edge(a, b));
    check_regular(g, 2 + 8);
  }
  SUBCASE("degree formula on assorted parts") {
    for (int k : {3, 4, 5}) {
      for (int deg : {2, 4}) {
        const Graph part = circulant_graph(8, deg);
        const auto [g, spec] = blow_up(k, part);
        check_regular(g, (k - 2) * 8 + deg);
      }
    }
  }
}

TEST_CASE("parameterized family") {
  const auto [g, spec] = paper_blowup(3, 1, Rational(1, 20), 3);
  CHECK(spec.part_size == 48);
  CHECK(*spec.d == 4);
  CHECK(spec.part_graph.degree(0) == 20);
  CHECK(g.num_vertices() == 96);
  CHECK(min_degree(g) == 68);

  const auto rep = structural_bound_report(g, spec);
  CHECK(rep.intra_edge_count == 960);
  CHECK(rep.structural_bound == Rational(960));
  CHECK(g.num_edges() == 3264);
  CHECK(rep.target == Rational(1088));
  CHECK(rep.deficiency == Rational(128, 1088));
  CHECK(rep.deficiency == Rational(2, 17));
}

TEST_CASE("structural bound on the mini instance") {
  const auto [g, spec] = blow_up(3, cycle_graph(6));
  const auto rep = structural_bound_report(g, spec);
  CHECK(rep.intra_edge_count == 12);
  CHECK(rep.structural_bound == Rational(12));
  CHECK(rep.target == Rational(16));
  CHECK(rep.deficiency == Rational(1, 4));
  CHECK(rep.premise_checked);
  CHECK(rep.kk_copies == 72);

  // LP cross-check: the fractional optimum respects the structural bound.
  const auto lp = fractional_packing_number(g, 3);
  CHECK(lp.lp_value <= Rational(12));
  CHECK(lp.lp_value < rep.target);
  CHECK_FALSE(lp.is_fractional_decomposition);
}

TEST_CASE("pigeonhole premise on small blow-ups") {
  for (int len : {4, 5, 6}) {
    const auto [g, spec] = blow_up(3, cycle_graph(len));
    if (g.num_vertices() > 14) continue;
    const auto rep = structural_bound_report(g, spec);
    CHECK(rep.premise_checked);
  }
  const auto [g4, spec4] = blow_up(4, cycle_graph(4));
  const auto rep4 = structural_bound_report(g4, spec4);
  CHECK(rep4.premise_checked);
}

TEST_CASE("edgeless part graph") {
  const auto [g, spec] = blow_up(3, Graph(4));
  const auto rep = structural_bound_report(g, spec);
  CHECK(rep.structural_bound == Rational(0));
  CHECK(rep.kk_copies == 0);  // no triangles at all
  CHECK(rep.premise_checked);
}
