#include <doctest.h>

#include "helpers.hpp"
#include "kpack/bounds.hpp"

using namespace kpack;

TEST_CASE("product formula values") {
  const auto b1 = lemma26_bound({21, 1, 5});
  CHECK(b1.value == Rational(969));
  CHECK_FALSE(b1.vacuous);
  CHECK(b1.value == Rational(binomial(19, 3)));

  const auto b2 = lemma26_bound({12, 2, 4});
  CHECK(b2.value == Rational(24));
  CHECK_FALSE(b2.vacuous);

  const auto b3 = lemma26_bound({5, 3, 4});
  CHECK(b3.value == Rational(2));
  CHECK(b3.vacuous);  // a factor went negative
}

TEST_CASE("complete-graph tightness: deficit 1 gives C(n-2, t-2)") {
  for (int t : {3, 4, 5})
    for (long n = t; n <= 21; ++n)
      CHECK(lemma26_bound({n, 1, t}).value == Rational(binomial(n - 2, t - 2)));
}

TEST_CASE("monotonicity of the formula") {
  for (long deficit = 0; deficit < 5; ++deficit)
    CHECK(lemma26_bound({20, deficit, 4}).value >= lemma26_bound({20, deficit + 1, 4}).value);
  for (long n = 10; n < 20; ++n)
    CHECK(lemma26_bound({n + 1, 2, 4}).value >= lemma26_bound({n, 2, 4}).value);
}

TEST_CASE("probability bound") {
  CHECK(cor27_bound(Rational(0), 5).value == Rational(0));

  const auto b = cor27_bound(Rational(1, 45), 5);
  CHECK(b.value == Rational(217, 729));
  CHECK_FALSE(b.clamped);

  CHECK(cor27_bound(Rational(1, 5), 5).value == Rational(1));
  const auto over = cor27_bound(Rational(1, 2), 5);  // base negative, odd power
  CHECK(over.value == Rational(1));
  CHECK(over.clamped);

  Rational prev(-1);
  for (long i = 0; i <= 9; ++i) {
    const auto v = cor27_bound(Rational(i, 45), 5).value;
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(cor27_bound(Rational(-1, 4), 5), ParamError);
}

TEST_CASE("empirical verification on the named instances") {
  std::vector<Edge> pm;
  for (int i = 0; i < 12; i += 2) pm.push_back({i, i + 1});
  const Graph k12pm = remove_edges(complete_graph(12), pm);
  const auto rep = verify_lemma26(k12pm, 4);
  CHECK(rep.deficit == 2);
  CHECK(rep.bound == Rational(24));
  CHECK(rep.min_count >= 24);
  CHECK(rep.holds);

  const auto k8 = verify_lemma26(complete_graph(8), 4);
  CHECK(k8.deficit == 1);
  CHECK(k8.bound == Rational(15));
  CHECK(k8.min_count == 15);  // tight on complete graphs
  CHECK(k8.holds);

  const auto c6 = verify_lemma26(cycle_graph(6), 3);
  CHECK(c6.deficit == 4);
  CHECK(c6.vacuous);
  CHECK(c6.min_count == 0);
  CHECK(c6.holds);
}

TEST_CASE("empirical domination on random near-complete graphs") {
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 50; ++seed) {
    const Graph g = kptest::random_graph(9 + static_cast<int>(seed % 4), 0.93, 2200 + seed);
    const int n = g.num_vertices();
    if (n - min_degree(g) > 3) continue;
    for (int t : {3, 4}) {
      const auto rep = verify_lemma26(g, t);
      CHECK(rep.holds);
    }
    ++tested;
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(verify_lemma26(complete_graph(12), 4, 10), BudgetError);
  CHECK_THROWS_AS(verify_lemma26(complete_graph(4), 5), ParamError);
}
