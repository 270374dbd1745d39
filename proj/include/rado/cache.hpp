#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rado/search.hpp"

namespace rado {

const char* engine_version();

// Append-only result record; the certificate is stored run-length encoded
// and must re-verify on load.
struct CacheRecord {
  std::string system;
  Int n_max = 0;
  bool found = false;
  Int value = 0; // found: the Rado number; otherwise n_max ("> n_max")
  std::string certificate;
  std::string engine;
  double wall_s = 0;
  std::string timestamp;
};

class ResultCache {
 public:
  ResultCache() = default; // disabled
  explicit ResultCache(std::string path);

  bool enabled() const { return !path_.empty(); }

  // Hit only when the engine version matches and the certificate re-verifies;
  // stale or corrupt records fall through to recomputation.
  std::optional<CacheRecord> lookup(const ColorSystem& sys, Int n_max) const;
  void append(const CacheRecord& rec);

  static CacheRecord make_record(const ColorSystem& sys, Int n_max, const RadoResult& res,
                                 double wall_s);
  static RadoResult to_result(const CacheRecord& rec, int r);

 private:
  std::string path_;
  std::map<std::pair<std::string, Int>, CacheRecord> records_;
};

} // namespace rado
