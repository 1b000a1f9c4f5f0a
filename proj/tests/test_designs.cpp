#include <doctest.h>

#include "kpack/design.hpp"
#include "kpack/rational.hpp"

using namespace kpack;

TEST_CASE("projective planes over the built-in fields") {
  const auto fano = projective_plane_design(2);
  CHECK(fano.n == 7);
  CHECK(fano.t == 3);
  CHECK(fano.blocks.size() == 7);
  CHECK(validate_design(fano).ok());

  const auto d13 = projective_plane_design(3);
  CHECK(d13.n == 13);
  CHECK(d13.t == 4);
  CHECK(d13.blocks.size() == 13);
  CHECK(validate_design(d13).ok());

  const auto d21 = projective_plane_design(4);
  CHECK(d21.n == 21);
  CHECK(d21.t == 5);
  CHECK(d21.blocks.size() == 21);
  CHECK(validate_design(d21).ok());

  CHECK_THROWS_AS(projective_plane_design(5), ParamError);
}

TEST_CASE("block count identity") {
  for (int q : {2, 3, 4}) {
    const auto d = projective_plane_design(q);
    CHECK(mpz_class(static_cast<long>(d.blocks.size())) ==
          binomial(d.n, 2) / binomial(d.t, 2));
  }
}

TEST_CASE("exact-cover search") {
  SUBCASE("finds a Steiner triple system of order 7") {
    const auto res = search_design(7, 3, 1u << 22);
    REQUIRE(res.status == DesignSearchStatus::found);
    CHECK(res.design->blocks.size() == 7);
    CHECK(validate_design(*res.design).ok());

    const auto again = search_design(7, 3, 1u << 22);
    CHECK(res.design->blocks == again.design->blocks);  // deterministic
  }
  SUBCASE("proves no system of order 6 exists") {
    const auto res = search_design(6, 3, 1u << 22);
    CHECK(res.status == DesignSearchStatus::none_exists);
  }
  SUBCASE("divisibility refusal comes first") {
    const auto res = search_design(5, 4, 1u << 22);
    CHECK(res.status == DesignSearchStatus::divisibility);
    CHECK(res.nodes == 0);
  }
  SUBCASE("budget exhaustion is distinct from nonexistence") {
    const auto res = search_design(13, 4, 2);
    CHECK(res.status == DesignSearchStatus::budget_exceeded);
  }
  SUBCASE("order 9 triple system") {
    const auto res = search_design(9, 3, 1u << 22);
    REQUIRE(res.status == DesignSearchStatus::found);
    CHECK(res.design->blocks.size() == 12);
    CHECK(validate_design(*res.design).ok());
  }
}

TEST_CASE("validator pinpoints broken designs") {
  auto fano = projective_plane_design(2);
  SUBCASE("duplicated block covers three pairs twice") {
    fano.blocks.push_back(fano.blocks.front());
    const auto rep = validate_design(fano);
    int pair_violations = 0;
    for (const auto& v : rep.violations)
      if (v.find("covered 2 times") != std::string::npos) ++pair_violations;
    CHECK(pair_violations == 3);
  }
  SUBCASE("missing block leaves pairs uncovered") {
    fano.blocks.pop_back();
    CHECK_FALSE(validate_design(fano).ok());
  }
  SUBCASE("empty design on one point is vacuously valid") {
    CHECK(validate_design(Design{1, 5, {}}).ok());
  }
  SUBCASE("unsorted block is rejected") {
    std::swap(fano.blocks[0][0], fano.blocks[0][1]);
    CHECK_FALSE(validate_design(fano).ok());
  }
}

TEST_CASE("permuting a design") {
  const auto fano = projective_plane_design(2);
  CHECK(permute_design(fano, Permutation::identity(7)) == fano);

  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_permutation(7, rng);
    const auto moved = permute_design(fano, p);
    CHECK(validate_design(moved).ok());
    CHECK(permute_design(moved, p.inverse()) == fano);
  }

  const auto d21 = projective_plane_design(4);
  Permutation reversal;
  for (int i = 20; i >= 0; --i) reversal.map.push_back(i);
  const auto moved = permute_design(d21, reversal);
  CHECK(moved.blocks.size() == 21);
  CHECK(validate_design(moved).ok());

  CHECK_THROWS_AS(permute_design(fano, Permutation::identity(6)), ParamError);
  Permutation not_bijective;
  not_bijective.map = {0, 0, 2, 3, 4, 5, 6};
  CHECK_THROWS_AS(permute_design(fano, not_bijective), ParamError);
}

TEST_CASE("design text format") {
  const auto fano = projective_plane_design(2);
  const auto text = serialize_design(fano);
  CHECK(text.substr(0, 13) == "design 7 3 7\n");
  CHECK(parse_design(text) == fano);

  SUBCASE("short block is rejected with its line") {
    try {
      parse_design("design 7 3 7\n1 2\n");
      FAIL("expected throw");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("an invalid design names a miscovered pair") {
    // Right block count, but one Fano block swapped for a duplicate.
    auto broken = fano;
    broken.blocks[6] = broken.blocks[0];
    try {
      parse_design(serialize_design(broken));
      FAIL("expected throw");
    } catch (const ParamError& e) {
      CHECK(std::string(e.what()).find("pair") != std::string::npos);
    }
  }
  SUBCASE("block count mismatch") {
    CHECK_THROWS_AS(parse_design("design 7 3 7\n1 2 3\n"), ParseError);
  }
  SUBCASE("point out of range") {
    CHECK_THROWS_AS(parse_design("design 7 3 1\n1 2 9\n"), ParseError);
  }
}
