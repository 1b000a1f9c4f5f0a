#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "kpack/graph.hpp"
#include "kpack/rational.hpp"

using namespace kpack;

TEST_CASE("complete graphs") {
  CHECK(complete_graph(4).num_edges() == 6);
  CHECK(complete_graph(21).num_edges() == 210);
  CHECK(complete_graph(0).num_edges() == 0);
  CHECK(complete_graph(0).num_vertices() == 0);
}

TEST_CASE("min degree") {
  const Edge e{0, 1};
  CHECK(min_degree(remove_edges(complete_graph(5), std::span<const Edge>(&e, 1))) == 3);
  CHECK(min_degree(cycle_graph(6)) == 2);
  CHECK(min_degree(complete_graph(21)) == 20);
  for (int n = 2; n <= 12; ++n) CHECK(min_degree(complete_graph(n)) == n - 1);
}

TEST_CASE("remove_edges") {
  const Edge e{0, 1};
  CHECK(remove_edges(complete_graph(5), std::span<const Edge>(&e, 1)).num_edges() == 9);
  CHECK(remove_edges(complete_graph(21), std::span<const Edge>(&e, 1)).num_edges() == 209);

  std::vector<Edge> pm;
  for (int i = 0; i < 12; i += 2) pm.push_back({i, i + 1});
  const Graph g = remove_edges(complete_graph(12), pm);
  CHECK(g.num_edges() == 60);
  CHECK(min_degree(g) == 10);

  const Edge missing{0, 3};
  CHECK_THROWS_AS(remove_edges(cycle_graph(6), std::span<const Edge>(&missing, 1)),
                  ParamError);
}

TEST_CASE("clique enumeration on the named instances") {
  CHECK(enumerate_cliques(complete_graph(5), 3).size() == 10);
  CHECK(enumerate_cliques(complete_graph(4), 3).size() == 4);
  CHECK(enumerate_cliques(cycle_graph(6), 3).empty());
  CHECK_THROWS_AS(enumerate_cliques(complete_graph(4), 5), ParamError);
  CHECK_THROWS_AS(enumerate_cliques(complete_graph(4), 1), ParamError);
}

TEST_CASE("enumeration is lexicographic and complete on K_n") {
  for (int n = 2; n <= 10; ++n) {
    const Graph g = complete_graph(n);
    for (int k = 2; k <= n; ++k) {
      const auto cliques = enumerate_cliques(g, k);
      CHECK(mpz_class(static_cast<long>(cliques.size())) == binomial(n, k));
      CHECK(std::is_sorted(cliques.begin(), cliques.end()));
    }
  }
}

TEST_CASE("cliques containing an edge") {
  const Graph k5 = complete_graph(5);
  for (const auto& e : k5.edges()) CHECK(cliques_containing_edge(k5, e, 3).size() == 3);

  const Edge missing{0, 1};
  const Graph k5m = remove_edges(k5, std::span<const Edge>(&missing, 1));
  const auto at02 = cliques_containing_edge(k5m, {0, 2}, 3);
  CHECK(at02 == std::vector<CliqueCopy>{{0, 2, 3}, {0, 2, 4}});

  CHECK(cliques_containing_edge(complete_graph(4), {1, 3}, 4).size() == 1);
  CHECK_THROWS_AS(cliques_containing_edge(k5m, {0, 1}, 3), ParamError);
}

TEST_CASE("cliques_containing_edge matches filtered enumeration") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = kptest::random_graph(12, 0.5, seed);
    for (int k : {3, 4}) {
      const auto all = enumerate_cliques(g, k);
      for (const auto& e : g.edges()) {
        std::vector<CliqueCopy> expect;
        for (const auto& c : all)
          if (std::binary_search(c.begin(), c.end(), e.u) &&
              std::binary_search(c.begin(), c.end(), e.v))
            expect.push_back(c);
        CHECK(cliques_containing_edge(g, e, k) == expect);
      }
    }
  }
}

TEST_CASE("graph text format") {
  const std::string k3 = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";
  CHECK(parse_graph(k3) == complete_graph(3));
  CHECK(serialize_graph(complete_graph(3)) == k3);
  CHECK(parse_graph("c comment\np edge 3 3\nc another\ne 1 2\ne 1 3\ne 2 3") ==
        complete_graph(3));

  SUBCASE("self-loop names its line") {
    try {
      parse_graph("p edge 2 1\ne 1 1");
      FAIL("expected throw");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("out-of-range vertex") {
    try {
      parse_graph("p edge 3 1\ne 1 4");
      FAIL("expected throw");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("duplicate edge, either orientation") {
    try {
      parse_graph("p edge 3 3\ne 1 2\nc x\ne 2 1");
      FAIL("expected throw");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
  }
  SUBCASE("malformed header") {
    CHECK_THROWS_AS(parse_graph("p edge x 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p vertex 3 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\n"), ParseError);
  }
}

TEST_CASE("parse/serialize round trip on random graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = kptest::random_graph(3 + static_cast<int>(seed % 10), 0.4, seed);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("graph constructor rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), ParamError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParamError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ParamError);
  CHECK_THROWS_AS(Graph(-1), ParamError);
}
