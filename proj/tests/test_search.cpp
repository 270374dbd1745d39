#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "rado/closed_forms.hpp"
#include "rado/errors.hpp"
#include "rado/family.hpp"
#include "rado/search.hpp"

using namespace rado;

namespace {

SearchOptions serial_opts() {
  SearchOptions o;
  o.threads = 1;
  return o;
}

} // namespace

TEST_CASE("schur number of x+y=z is 5") {
  auto res = rado_number(ColorSystem::uniform(make_schur()), 10);
  REQUIRE(res.found);
  CHECK(res.value == 5);
  CHECK(res.certificate.n() == 4);
  CHECK(verify_certificate(ColorSystem::uniform(make_schur()), res.certificate));
  CHECK(res.certificate.str() == "rbbr"); // lexicographically least valid coloring
}

TEST_CASE("find_valid_coloring basics") {
  auto sys = ColorSystem::uniform(make_schur());
  auto c4 = find_valid_coloring(sys, 4);
  REQUIRE(c4.has_value());
  CHECK(verify_certificate(sys, *c4));
  CHECK_FALSE(find_valid_coloring(sys, 5).has_value());

  // first valid coloring of [1,3] for x+y+z+kv=(k+2)w is r b r
  for (Int k : {1, 5, 9}) {
    auto sys5 = ColorSystem::uniform(make_weighted_sum(5, k, k + 2));
    auto c = find_valid_coloring(sys5, 3);
    REQUIRE(c.has_value());
    CHECK(c->str() == "rbr");
  }
}

TEST_CASE("four-variable table spot: k=11 gives 15") {
  auto res = rado_number(ColorSystem::uniform(make_weighted_sum(4, 11, 4)), 100);
  REQUIRE(res.found);
  CHECK(res.value == 15);
}

TEST_CASE("all-ones instances resolve to 1") {
  for (int m : {3, 4, 5}) {
    for (Int k : {1, 2, 4}) {
      auto res = rado_number(ColorSystem::uniform(make_weighted_sum(m, k, k + m - 2)), 5);
      REQUIRE(res.found);
      CHECK(res.value == 1);
      CHECK(res.certificate.n() == 0);
    }
  }
}

TEST_CASE("pair system search: {x+y=z, 3x=y} resolves to 15") {
  auto res = rado_number(pair_sum_vs_multiple(3), 100);
  REQUIRE(res.found);
  CHECK(res.value == 15);
  CHECK(verify_certificate(pair_sum_vs_multiple(3), res.certificate));
}

TEST_CASE("verify_certificate examples") {
  // k=32 residue-class coloring: [1,8] red, [9,76] blue
  ColorSystem sys = ColorSystem::uniform(make_weighted_sum(4, 32, 4));
  CHECK(verify_certificate(sys, Coloring::parse("1-8:r,9-76:b")));

  ColorSystem schur = ColorSystem::uniform(make_schur());
  CHECK_FALSE(verify_certificate(schur, Coloring(2, std::vector<std::uint8_t>(5, 0))));

  // {1,4,6,9} red on [1,14] separates x+y=z from 3x=y
  std::vector<std::uint8_t> colors(14, 1);
  for (Int v : {1, 4, 6, 9}) colors[static_cast<size_t>(v - 1)] = 0;
  CHECK(verify_certificate(pair_sum_vs_multiple(3), Coloring(2, colors)));

  // the red class {1,4,6,12} admits 6+6=12, so that coloring must be rejected
  std::vector<std::uint8_t> paper(14, 1);
  for (Int v : {1, 4, 6, 12}) paper[static_cast<size_t>(v - 1)] = 0;
  CHECK_FALSE(verify_certificate(pair_sum_vs_multiple(3), Coloring(2, paper)));
}

TEST_CASE("restriction closure: prefixes of valid colorings stay valid") {
  for (Int k : {2, 7}) {
    auto sys = ColorSystem::uniform(make_weighted_sum(4, k, 4));
    auto c = find_valid_coloring(sys, 8);
    if (!c) continue;
    std::vector<std::uint8_t> prefix(c->colors().begin(), c->colors().end() - 1);
    CHECK(verify_certificate(sys, Coloring(2, prefix)));
  }
}

TEST_CASE("periodic certificates") {
  CHECK(verify_periodic_certificate(pair_sum_vs_shift(3), parity_pattern()));
  CHECK(verify_periodic_certificate(pair_sum_vs_shift(7), parity_pattern()));
  CHECK_FALSE(verify_periodic_certificate(pair_sum_vs_shift(2), parity_pattern()));
  CHECK_FALSE(verify_periodic_certificate(ColorSystem::uniform(make_schur(), 1),
                                          PeriodicPattern{1, {0}}));
}

TEST_CASE("periodic soundness: parity pattern extends to any prefix") {
  auto sys = pair_sum_vs_shift(5);
  REQUIRE(verify_periodic_certificate(sys, parity_pattern()));
  for (Int n : {20, 200}) {
    std::vector<std::uint8_t> colors;
    for (Int t = 1; t <= n; ++t) colors.push_back(parity_pattern().color_of(t));
    CHECK(verify_certificate(sys, Coloring(2, colors)));
  }
}

TEST_CASE("enumerate_valid_colorings spots") {
  auto j1 = ColorSystem::uniform(five_var_family(1).instantiate(25));
  auto got = enumerate_valid_colorings(j1, 3, true);
  REQUIRE(got.size() == 2);
  CHECK(got[0].str() == "rbb");
  CHECK(got[1].str() == "rrb");

  auto schur = enumerate_valid_colorings(ColorSystem::uniform(make_schur()), 2, true);
  REQUIRE(schur.size() == 1);
  CHECK(schur[0].str() == "rb");

  auto j5 = ColorSystem::uniform(five_var_family(5).instantiate(30));
  auto got8 = enumerate_valid_colorings(j5, 8, true);
  REQUIRE(got8.size() == 1);
  CHECK(got8[0].str() == "rbbrrrbb");

  CHECK_THROWS_AS(enumerate_valid_colorings(ColorSystem::uniform(make_schur()), 30, true, 1 << 10),
                  error);
}

TEST_CASE("color symmetry: swapped colorings of a symmetric system stay valid") {
  auto sys = ColorSystem::uniform(make_weighted_sum(4, 5, 4));
  auto c = find_valid_coloring(sys, 5);
  REQUIRE(c.has_value());
  std::vector<std::uint8_t> swapped;
  for (auto v : c->colors()) swapped.push_back(static_cast<std::uint8_t>(1 - v));
  CHECK(verify_certificate(sys, Coloring(2, swapped)));
}

TEST_CASE("export_cnf clause counts") {
  auto schur = ColorSystem::uniform(make_schur());
  std::string two = export_cnf(schur, 2);
  CHECK(two.find("p cnf 2 2") != std::string::npos);
  std::string five = export_cnf(schur, 5);
  CHECK(five.find("p cnf 5 20") != std::string::npos);
  // no solution fits inside [1,1]
  std::string one = export_cnf(schur, 1);
  CHECK(one.find("p cnf 1 0") != std::string::npos);
}

TEST_CASE("cnf satisfiability tracks coloring existence") {
  auto sys = ColorSystem::uniform(make_schur());
  CHECK(testing::dimacs_satisfiable(export_cnf(sys, 4)));
  CHECK_FALSE(testing::dimacs_satisfiable(export_cnf(sys, 5)));
}

TEST_CASE("oracle equivalence on random small systems") {
  std::mt19937 rng(0xC0FFEE);
  int tested = 0;
  while (tested < 12) {
    int m = 3 + static_cast<int>(rng() % 3);
    int split = 1 + static_cast<int>(rng() % (m - 1));
    std::vector<Term> lhs, rhs;
    for (int s = 1; s <= m; ++s) {
      Term t{static_cast<Int>(1 + rng() % 6), s};
      if (s <= split) lhs.push_back(t);
      else rhs.push_back(t);
    }
    LinearEquation eq;
    try {
      eq = LinearEquation::make(lhs, rhs);
    } catch (const error&) {
      continue;
    }
    auto sys = ColorSystem::uniform(eq);
    auto oracle = testing::exhaustive_rado(sys, 14);
    if (!oracle) continue;
    ++tested;
    auto res = rado_number(sys, 14, serial_opts());
    REQUIRE(res.found);
    CHECK(res.value == *oracle);
    CHECK(verify_certificate(sys, res.certificate));
    CHECK_FALSE(find_valid_coloring(sys, res.value).has_value());
  }
}

TEST_CASE("serial and parallel engines agree, including certificates") {
  std::vector<ColorSystem> systems = {
      ColorSystem::uniform(make_schur()),
      ColorSystem::uniform(make_weighted_sum(4, 11, 4)),
      pair_sum_vs_multiple(4),
      ColorSystem::uniform(make_unit_sum(4, 3)),
  };
  for (const auto& sys : systems) {
    auto a = rado_number_serial(sys, 40);
#ifdef _OPENMP
    SearchOptions popt;
    popt.threads = 0;
    auto b = rado_number_parallel(sys, 40, popt);
    SearchOptions p2;
    p2.threads = 3;
    p2.split_depth = 4;
    auto c = rado_number_parallel(sys, 40, p2);
#else
    auto b = a, c = a;
#endif
    CHECK(a.found == b.found);
    CHECK(a.value == b.value);
    CHECK(a.certificate == b.certificate);
    CHECK(a.found == c.found);
    CHECK(a.value == c.value);
    CHECK(a.certificate == c.certificate);
  }
}

TEST_CASE("determinism across repeated runs") {
  auto sys = ColorSystem::uniform(make_weighted_sum(4, 7, 4));
  auto first = rado_number(sys, 30);
  for (int i = 0; i < 3; ++i) {
    auto again = rado_number(sys, 30);
    CHECK(again.found == first.found);
    CHECK(again.value == first.value);
    CHECK(again.certificate == first.certificate);
  }
}

TEST_CASE("unresolved results keep a witness and respect n_max semantics") {
  auto sys = pair_sum_vs_shift(3); // infinite: parity coloring is valid forever
  auto res = rado_number(sys, 60);
  REQUIRE_FALSE(res.found);
  CHECK(res.value == 60);
  CHECK(res.certificate.n() == 60);
  CHECK(verify_certificate(sys, res.certificate));
}

TEST_CASE("search budget raises budget_exceeded") {
  SearchOptions opts;
  opts.threads = 1;
  opts.budget = std::chrono::milliseconds(1);
  bool hit = false;
  try {
    rado_number(ColorSystem::uniform(make_weighted_sum(4, 57, 4)), 300, opts);
  } catch (const error& e) {
    hit = e.code() == errc::budget_exceeded;
  }
  CHECK(hit);
}

TEST_CASE("published values the engine overturns, pinned by the exhaustive oracle") {
  // x+y+z+25v = 26w: the red triple sum 9+9+9 = 27 kills both length-9
  // colorings (27 + 25 = 26*2), so the value drops to 9.
  auto j1k25 = ColorSystem::uniform(five_var_family(1).instantiate(25));
  auto oracle = testing::exhaustive_rado(j1k25, 12);
  REQUIRE(oracle.has_value());
  CHECK(*oracle == 9);
  auto res = rado_number(j1k25, 12);
  REQUIRE(res.found);
  CHECK(res.value == *oracle);

  // {x+y=z, 4x=y}: 8 red forces 4 blue (4+4=8), 16 red ((4,16) pair), and
  // 8+8=16 closes the contradiction; the blue side forces symmetrically, so
  // no valid coloring of [1,16] exists and the value is 16, not 20.
  auto pair4 = pair_sum_vs_multiple(4);
  auto oracle4 = testing::exhaustive_rado(pair4, 18);
  REQUIRE(oracle4.has_value());
  CHECK(*oracle4 == 16);
  auto res4 = rado_number(pair4, 30);
  REQUIRE(res4.found);
  CHECK(res4.value == *oracle4);
  CHECK(verify_certificate(pair4, res4.certificate));
}

TEST_CASE("three colors are supported by the api") {
  auto sys = ColorSystem::uniform(make_schur(), 3);
  auto res = rado_number(sys, 20, serial_opts());
  REQUIRE(res.found);
  CHECK(res.value == 14); // classical three-color value
  CHECK(res.certificate.n() == 13);
  CHECK(verify_certificate(sys, res.certificate));
}
