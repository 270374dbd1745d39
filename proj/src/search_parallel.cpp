// OpenMP work-split engine: a level whose serial search exceeds its node cap
// is re-run split into seed subtrees explored independently; the merge keeps
// the lexicographically least witness, so the outcome matches the serial
// reference bit for bit regardless of scheduling or worker count.

#ifdef _OPENMP

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

#include "rado/errors.hpp"
#include "rado/search.hpp"
#include "rado/search_internal.hpp"

namespace rado {
namespace detail {

namespace {

Int auto_split_depth(int r, Int n) {
  Int d = 1;
  std::uint64_t total = static_cast<std::uint64_t>(r);
  while (d < n && total < 4096) {
    total *= static_cast<std::uint64_t>(r);
    ++d;
  }
  return std::min(d, n);
}

} // namespace

LevelOutcome parallel_level_search(const Checker& check, Int n,
                                   const std::vector<std::uint8_t>& resume, bool fix_first,
                                   const SearchControl& ctl, const SearchOptions& opts,
                                   std::vector<std::uint8_t>& witness) {
  Int d0 = opts.split_depth > 0 ? std::min<Int>(opts.split_depth, n) : auto_split_depth(check.r(), n);
  std::vector<std::vector<std::uint8_t>> seeds;
  {
    Worker seeder(check);
    seeds = level_seeds(check, seeder, n, d0, resume, fix_first);
  }
  if (seeds.empty()) return LevelOutcome::kUnsat;
  if (d0 >= n) { // seeds are complete valid colorings already
    witness = std::move(seeds.front());
    return LevelOutcome::kSat;
  }

  const long long nseeds = static_cast<long long>(seeds.size());
  std::vector<std::vector<std::uint8_t>> sat_witness(static_cast<size_t>(nseeds));
  std::atomic<long long> best_sat{std::numeric_limits<long long>::max()};
  std::atomic<bool> failed{false};
  std::string failure;
  errc failure_code{};
  std::mutex failure_mu;

  int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    Worker worker(check);
#pragma omp for schedule(dynamic, 1)
    for (long long i = 0; i < nseeds; ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      if (best_sat.load(std::memory_order_relaxed) < i) continue;
      worker.reset();
      SearchControl sub = ctl;
      sub.best_sat_seed = &best_sat;
      sub.my_seed = i;
      sub.node_cap = 0;
      try {
        LevelOutcome out = level_search(check, worker, n, resume,
                                        seeds[static_cast<size_t>(i)].data(), d0, fix_first, sub);
        if (out == LevelOutcome::kSat) {
          sat_witness[static_cast<size_t>(i)].assign(worker.colors().begin(),
                                                     worker.colors().begin() + n);
          long long cur = best_sat.load(std::memory_order_relaxed);
          while (i < cur && !best_sat.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (const error& e) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failed.exchange(true)) {
          failure = e.what();
          failure_code = e.code();
        }
      }
    }
  }
  if (failed.load()) fail(failure_code, failure);
  long long winner = best_sat.load();
  if (winner == std::numeric_limits<long long>::max()) return LevelOutcome::kUnsat;
  witness = std::move(sat_witness[static_cast<size_t>(winner)]);
  return LevelOutcome::kSat;
}

} // namespace detail

RadoResult rado_number_parallel(const ColorSystem& sys, Int n_max, const SearchOptions& opts) {
  if (n_max < 1) fail(errc::invalid_argument, "n_max must be >= 1");
  return detail::run_levels(sys, n_max, opts, true);
}

RadoResult rado_number(const ColorSystem& sys, Int n_max, const SearchOptions& opts) {
  if (opts.threads == 1) return rado_number_serial(sys, n_max, opts);
  return rado_number_parallel(sys, n_max, opts);
}

} // namespace rado

#endif // _OPENMP
