#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "rado/cache.hpp"
#include "rado/errors.hpp"
#include "rado/family.hpp"
#include "rado/reproduce.hpp"

using namespace rado;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/rado_test_" + name) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("coloring string formats round-trip") {
  Coloring c = Coloring::parse("rbbrrrbb");
  CHECK(c.str() == "rbbrrrbb");
  CHECK(c.run_length() == "1:r,2-3:b,4-6:r,7-8:b");
  CHECK(Coloring::parse(c.run_length()) == c);

  Coloring digits = Coloring::parse("0120", 3);
  CHECK(digits.r() == 3);
  CHECK(Coloring::parse(digits.run_length(), 3) == digits);

  Coloring interval = Coloring::parse("1-9:r,10-92:b,93:r");
  CHECK(interval.n() == 93);
  CHECK(interval.color_of(9) == 0);
  CHECK(interval.color_of(10) == 1);
  CHECK(interval.color_of(93) == 0);

  CHECK_THROWS_AS(Coloring::parse("3-4:r"), error); // must start at 1
  CHECK_THROWS_AS(Coloring::parse("rxb"), error);
}

TEST_CASE("certificate file format") {
  Coloring c = Coloring::parse("rbbr");
  std::string text = certificate_text(c);
  CHECK(text == "n=4 r=2\nrbbr\n");
  CHECK(parse_certificate(text) == c);
  CHECK(parse_certificate("n=3 r=2\n1-2:r,3:b\n") == Coloring::parse("rrb"));
  CHECK(parse_certificate("n=0 r=2\n\n").n() == 0);
  CHECK_THROWS_AS(parse_certificate("n=5 r=2\nrb\n"), error);
}

TEST_CASE("cache appends, reloads, verifies and rejects stale versions") {
  TempFile tmp("cache.jsonl");
  ColorSystem sys = ColorSystem::uniform(make_schur());
  RadoResult res = rado_number(sys, 10);
  {
    ResultCache cache(tmp.path);
    CHECK_FALSE(cache.lookup(sys, 10).has_value());
    cache.append(ResultCache::make_record(sys, 10, res, 0.125));
    auto hit = cache.lookup(sys, 10);
    REQUIRE(hit.has_value());
    CHECK(hit->value == 5);
    CHECK(hit->wall_s == 0.125);
  }
  {
    ResultCache reloaded(tmp.path);
    auto hit = reloaded.lookup(sys, 10);
    REQUIRE(hit.has_value());
    auto back = ResultCache::to_result(*hit, sys.r());
    CHECK(back.found == res.found);
    CHECK(back.value == res.value);
    CHECK(back.certificate == res.certificate);
  }
  {
    // corrupt the stored engine version: the record must be ignored
    std::ifstream in(tmp.path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    size_t pos = all.find("rado-engine");
    REQUIRE(pos != std::string::npos);
    all.replace(pos, 11, "old-engine!");
    std::ofstream(tmp.path, std::ios::trunc) << all;
    ResultCache stale(tmp.path);
    CHECK_FALSE(stale.lookup(sys, 10).has_value());
  }
  {
    // corrupt the certificate: the record must be ignored
    ResultCache cache(tmp.path);
    CacheRecord bad = ResultCache::make_record(sys, 10, res, 0.5);
    bad.certificate = "1-4:r";
    cache.append(bad);
    ResultCache reloaded(tmp.path);
    CHECK_FALSE(reloaded.lookup(sys, 10).has_value());
  }
}

TEST_CASE("scope names round-trip") {
  for (const char* name : {"table2", "thm-four-var", "five-var", "two-system", "saracino-spots",
                           "appendix2-tables"})
    CHECK(scope_name(parse_scope(name)) == name);
  CHECK_THROWS_AS(parse_scope("nope"), error);
}

TEST_CASE("reproduce appendix2 scope passes and is idempotent with a warm cache") {
  TempFile tmp("repro_cache.jsonl");
  ReproduceOptions opts;
  opts.cache_path = tmp.path;
  auto rows = reproduce(Scope::kAppendix2Tables, opts);
  REQUIRE(!rows.empty());
  for (const auto& row : rows) {
    if (row.status == "info") continue;
    CHECK(row.status == "pass");
  }
  std::string first = reproduce_csv(rows);
  std::string second = reproduce_csv(reproduce(Scope::kAppendix2Tables, opts));
  CHECK(first == second);
}

TEST_CASE("reproduce two-system scope emits the infinite rows as unresolved-with-certificate") {
  TempFile tmp("repro_two.jsonl");
  ReproduceOptions opts;
  opts.cache_path = tmp.path;
  opts.budget_s = 120;
  auto rows = reproduce(Scope::kTwoSystem, opts);
  int infinite_rows = 0;
  for (const auto& row : rows) {
    if (row.formula == "infinite") {
      ++infinite_rows;
      CHECK(row.search.find(">1000") != std::string::npos);
      CHECK(row.search.find("periodic:valid") != std::string::npos);
      CHECK(row.status == "pass");
    }
  }
  CHECK(infinite_rows == 3);
  // warm-cache idempotence over a scope that exercises the search cache
  std::string first = reproduce_csv(rows);
  std::string second = reproduce_csv(reproduce(Scope::kTwoSystem, opts));
  CHECK(first == second);
}

TEST_CASE("csv escaping") {
  std::vector<ReproduceRow> rows(1);
  rows[0] = {"inst", "src", "1,2,3", "x\"y", "pass", 0.5};
  std::string csv = reproduce_csv(rows);
  CHECK(csv.find("\"1,2,3\"") != std::string::npos);
  CHECK(csv.find("\"x\"\"y\"") != std::string::npos);
}
