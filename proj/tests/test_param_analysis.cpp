#include <doctest.h>

#include "rado/errors.hpp"
#include "rado/param_analysis.hpp"
#include "rado/search.hpp"

using namespace rado;

TEST_CASE("bad_parameter_set reproduces the n=3 intersection analysis") {
  auto fam = five_var_family(1);
  auto rbb = bad_parameter_set(fam, Coloring::parse("rbb"));
  CHECK_FALSE(rbb.always_bad);
  CHECK(rbb.finite_bad == std::vector<Int>{3, 4, 5, 6});
  auto rrb = bad_parameter_set(fam, Coloring::parse("rrb"));
  CHECK_FALSE(rrb.always_bad);
  CHECK(rrb.finite_bad == std::vector<Int>{1, 2, 3, 4});
}

TEST_CASE("identically-solvable families are always bad") {
  auto fam = five_var_family(3); // all-ones solves it for every k
  for (const char* text : {"r", "rb", "rbrb", "rrrr"})
    CHECK(bad_parameter_set(fam, Coloring::parse(text)).always_bad);
}

TEST_CASE("pointwise agreement with the certificate verifier") {
  for (Int j : {1, 5}) {
    auto fam = five_var_family(j);
    for (const char* text : {"rbb", "rrb", "rbbrr", "rbbbb", "rbrbr", "rrbbbbbbrr"}) {
      Coloring coloring = Coloring::parse(text);
      BadKSet bad = bad_parameter_set(fam, coloring);
      for (Int k = 1; k <= 100; ++k) {
        bool fails = !verify_certificate(ColorSystem::uniform(fam.instantiate(k)), coloring);
        CHECK(bad.contains(k) == fails);
      }
    }
  }
}

TEST_CASE("instantiation and symbolic solving commute") {
  auto fam = five_var_family(1);
  Int n = 3;
  // every tuple over [1,3]^5: A + B*k = 0 iff the instantiated equation holds
  std::vector<Int> tuple(5, 1);
  auto advance = [&]() {
    int i = 4;
    while (i >= 0 && tuple[static_cast<size_t>(i)] == n) tuple[static_cast<size_t>(i--)] = 1;
    if (i < 0) return false;
    ++tuple[static_cast<size_t>(i)];
    return true;
  };
  do {
    Int a = fam.shift().a0, b = fam.shift().a1;
    for (size_t i = 0; i < 5; ++i) {
      a += fam.signed_coeffs()[i].a0 * tuple[i];
      b += fam.signed_coeffs()[i].a1 * tuple[i];
    }
    for (Int k = 1; k <= 50; ++k)
      CHECK((a + b * k == 0) == fam.instantiate(k).is_solution(tuple));
  } while (advance());
}

TEST_CASE("cofinite correctness beyond the largest bad k") {
  auto fam = five_var_family(1);
  auto rbb = bad_parameter_set(fam, Coloring::parse("rbb"));
  Int edge = rbb.max_finite();
  for (Int k : {edge + 1, edge + 7})
    CHECK(verify_certificate(ColorSystem::uniform(fam.instantiate(k)), Coloring::parse("rbb")));
}

TEST_CASE("cofinitely-valid coloring tables") {
  auto fam = five_var_family(1);
  auto n3 = colorings_valid_cofinitely(fam, 3);
  REQUIRE(n3.size() == 2);
  CHECK(n3[0].first.str() == "rbb");
  CHECK(n3[1].first.str() == "rrb");

  auto n10 = colorings_valid_cofinitely(fam, 10);
  REQUIRE(n10.size() == 1);
  CHECK(n10[0].first.str() == "rrbbbbbbrr");
  // Union of the published intersection conditions: the j=22 and j=27..30
  // clauses of "k=j-2" add 20 and 25..28 beyond the prose summary "k=1..19";
  // e.g. at k=25 the red tuple (9,9,9,1,2) gives 27+25 = 26*2.
  std::vector<Int> expect;
  for (Int k = 1; k <= 20; ++k) expect.push_back(k);
  for (Int k = 25; k <= 28; ++k) expect.push_back(k);
  CHECK(n10[0].second.finite_bad == expect);
}

TEST_CASE("rado_from_bad_sets agrees with the paper spots and the search engine") {
  CHECK(rado_from_bad_sets(five_var_family(1), 19, 12) == 10);
  CHECK(rado_from_bad_sets(five_var_family(5), 20, 12) == 9);
  CHECK(rado_from_bad_sets(five_var_family(2), 9, 12) == 4);
  for (Int j : {1, 5}) {
    for (Int k : {2, 9, 23, 25}) {
      Int via_sets = rado_from_bad_sets(five_var_family(j), k, 12);
      auto via_search = rado_number(ColorSystem::uniform(five_var_family(j).instantiate(k)), 12);
      REQUIRE(via_search.found);
      CHECK(via_sets == via_search.value);
    }
  }
}

TEST_CASE("cap and guard errors") {
  CHECK_THROWS_AS(colorings_valid_cofinitely(five_var_family(1), 40, 1 << 10), error);
  // j=1, k=25: the Rado number is 11, above a cap of 4
  CHECK_THROWS_AS(rado_from_bad_sets(five_var_family(1), 25, 4), error);
}
