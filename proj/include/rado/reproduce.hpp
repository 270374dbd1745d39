#pragma once

#include <string>
#include <vector>

#include "rado/cache.hpp"

namespace rado {

enum class Scope { kTable2, kThmFourVar, kFiveVar, kTwoSystem, kSaracinoSpots, kAppendix2Tables };

Scope parse_scope(const std::string& name);
std::string scope_name(Scope scope);

struct ReproduceOptions {
  double budget_s = 60.0;  // per instance
  std::string cache_path;  // empty disables the cache
  int threads = 0;
};

struct ReproduceRow {
  std::string instance;
  std::string source;
  std::string formula;
  std::string search;
  std::string status; // pass | fail | discrepancy | timeout | unresolved | info
  double seconds = 0;
};

// Runs formula vs search for every instance in scope; rows come out in a
// fixed scope order, with wall times taken from the cache when warm so a
// second run reproduces the report byte for byte.
std::vector<ReproduceRow> reproduce(Scope scope, const ReproduceOptions& opts = {});

std::string reproduce_csv(const std::vector<ReproduceRow>& rows);

} // namespace rado
