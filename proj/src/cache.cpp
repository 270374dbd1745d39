#include "rado/cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "rado/errors.hpp"

namespace rado {

const char* engine_version() { return "rado-engine 1.0.0"; }

namespace {

std::string now_iso8601() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;
    CacheRecord rec;
    rec.system = j.value("system", "");
    rec.n_max = j.value("n_max", Int{0});
    std::string result = j.value("result", "");
    if (!result.empty() && result[0] == '>') {
      rec.found = false;
      rec.value = rec.n_max;
    } else {
      rec.found = true;
      rec.value = std::stoll(result);
    }
    rec.certificate = j.value("certificate", "");
    rec.engine = j.value("engine_version", "");
    rec.wall_s = j.value("wall_s", 0.0);
    rec.timestamp = j.value("timestamp", "");
    records_[{rec.system, rec.n_max}] = rec; // last record wins
  }
}

std::optional<CacheRecord> ResultCache::lookup(const ColorSystem& sys, Int n_max) const {
  if (!enabled()) return std::nullopt;
  auto it = records_.find({sys.text(), n_max});
  if (it == records_.end()) return std::nullopt;
  const CacheRecord& rec = it->second;
  if (rec.engine != engine_version()) return std::nullopt; // stale engine: recompute
  try {
    Coloring cert = rec.certificate.empty() ? Coloring(sys.r(), {})
                                            : Coloring::parse(rec.certificate, sys.r());
    Int expect = rec.found ? rec.value - 1 : rec.n_max;
    if (cert.n() != expect) return std::nullopt;
    if (!verify_certificate(sys, cert)) return std::nullopt;
  } catch (const error&) {
    return std::nullopt;
  }
  return rec;
}

void ResultCache::append(const CacheRecord& rec) {
  if (!enabled()) return;
  nlohmann::json j;
  j["system"] = rec.system;
  j["n_max"] = rec.n_max;
  j["result"] = rec.found ? std::to_string(rec.value) : ">" + std::to_string(rec.n_max);
  j["certificate"] = rec.certificate;
  j["engine_version"] = rec.engine;
  j["wall_s"] = rec.wall_s;
  j["timestamp"] = rec.timestamp;
  std::ofstream out(path_, std::ios::app);
  out << j.dump() << '\n';
  records_[{rec.system, rec.n_max}] = rec;
}

CacheRecord ResultCache::make_record(const ColorSystem& sys, Int n_max, const RadoResult& res,
                                     double wall_s) {
  CacheRecord rec;
  rec.system = sys.text();
  rec.n_max = n_max;
  rec.found = res.found;
  rec.value = res.value;
  rec.certificate = res.certificate.run_length();
  rec.engine = engine_version();
  rec.wall_s = wall_s;
  rec.timestamp = now_iso8601();
  return rec;
}

RadoResult ResultCache::to_result(const CacheRecord& rec, int r) {
  RadoResult res;
  res.found = rec.found;
  res.value = rec.value;
  res.certificate = rec.certificate.empty() ? Coloring(r, {}) : Coloring::parse(rec.certificate, r);
  return res;
}

} // namespace rado
