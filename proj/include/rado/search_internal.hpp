#pragma once

// Shared machinery between the serial reference engine and the OpenMP
// work-split engine. Not part of the public surface.
//
// The engine decides level by level: a valid coloring of [1,n] restricts to
// one of [1,n-1], so level n resumes lexicographically from the previous
// witness, and the Rado number is the first level whose search refutes.
// Within a level the search propagates forced colors: each solution value
// set keeps per-color counters of its already-colored members, so killing a
// color at a future integer (and hence forcing or refuting it) is detected
// the moment it happens.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <vector>

#include "rado/search.hpp"

namespace rado::detail {

// Immutable per-equation incidence index over the solution value sets with
// maximum entry t, for t in [1, n_max].
struct PatternIndex {
  std::vector<std::uint32_t> layer_first; // t -> first set id; size n_max+2
  std::vector<std::uint8_t> need;         // per set: count of non-max values
  std::vector<std::uint32_t> set_layer;   // per set: its layer t
  std::vector<std::uint32_t> inc_off;     // value v -> [inc_off[v], inc_off[v+1]) in inc_sid
  std::vector<std::uint32_t> inc_sid;     // set ids containing v as a non-max value
  std::uint32_t set_count = 0;
};

// Immutable problem shape: distinct equations, their indices, and the
// subset-sum fallback for wide unit-sum equations.
class Checker {
 public:
  enum class Kind { kPattern, kSumDp };

  Checker(const ColorSystem& sys, Int n_max, std::size_t cache_budget,
          std::chrono::steady_clock::time_point deadline = {});

  int r() const { return r_; }
  Int n_max() const { return n_max_; }
  Kind kind(int c) const { return kinds_[static_cast<size_t>(c)]; }
  const PatternIndex& index_of(int c) const { return index_[eq_of_color_[static_cast<size_t>(c)]]; }

  int sumdp_units(int c) const { return units_[static_cast<size_t>(c)]; }
  const std::vector<Int>& sumdp_singles(int c) const { return singles_[static_cast<size_t>(c)]; }
  Int sumdp_shift(int c) const { return shifts_[static_cast<size_t>(c)]; }

 private:
  int r_;
  Int n_max_;
  std::vector<LinearEquation> eqs_; // distinct
  std::vector<size_t> eq_of_color_;
  std::vector<PatternIndex> index_;
  std::vector<Kind> kinds_;
  std::vector<int> units_;
  std::vector<std::vector<Int>> singles_;
  std::vector<Int> shifts_;
};

constexpr std::uint8_t kUncolored = 0xFF;

// Per-worker mutable search state: colors, counters, and an assignment trail
// with exact undo. assign() places a color and propagates every forced
// color at integers <= bound, failing when the branch cannot extend to a
// full coloring of [1,bound].
class Worker {
 public:
  explicit Worker(const Checker& check);

  void reset();
  size_t mark() const { return trail_.size(); }
  void undo_to(size_t mark);

  bool assign(Int t, int c, Int bound);
  bool color_allowed(Int t, int c) const {
    return ready_[static_cast<size_t>(c)][static_cast<size_t>(t)] == 0;
  }
  bool colored(Int t) const { return colors_[static_cast<size_t>(t - 1)] != kUncolored; }
  const std::vector<std::uint8_t>& colors() const { return colors_; }

  std::uint64_t nodes = 0;

 private:
  bool raw_assign(Int t, int c, Int bound);
  bool sumdp_conflict(int c, Int t, Int bound);

  const Checker& check_;
  std::vector<std::uint8_t> colors_;
  std::vector<std::vector<std::uint8_t>> count_; // per color: per set id
  std::vector<std::vector<std::int32_t>> ready_; // per color: per layer
  std::vector<std::uint8_t> dead_colors_;        // per layer: # colors with ready > 0
  std::vector<Int> trail_;
  std::vector<std::pair<Int, std::uint8_t>> queue_; // forced assignments pending
  std::vector<std::uint64_t> dp_;                   // subset-sum scratch
  std::vector<Int> cls_;
};

struct SearchControl {
  std::chrono::steady_clock::time_point deadline{};
  const std::atomic<long long>* best_sat_seed = nullptr;
  long long my_seed = 0;
  std::uint64_t node_cap = 0; // 0 = unlimited
};

enum class LevelOutcome { kSat, kUnsat, kCapped, kAborted };

// Finds the lexicographically least valid coloring of [1,n] that is >= the
// resume witness (the level n-1 witness; shorter strings are padded with
// color 0) and, when seed_len > 0, starts with the given seed prefix.
// The worker must be freshly reset; on kSat the witness is in
// worker.colors()[0..n).
LevelOutcome level_search(const Checker& check, Worker& worker, Int n,
                          const std::vector<std::uint8_t>& resume, const std::uint8_t* seed,
                          Int seed_len, bool fix_first, const SearchControl& ctl);

// All valid decision prefixes of [1,depth] (that may extend to level n), in
// lexicographic order, restricted to prefixes >= resume.
std::vector<std::vector<std::uint8_t>> level_seeds(const Checker& check, Worker& worker, Int n,
                                                   Int depth,
                                                   const std::vector<std::uint8_t>& resume,
                                                   bool fix_first);

RadoResult run_levels(const ColorSystem& sys, Int n_max, const SearchOptions& opts, bool parallel);

#ifdef _OPENMP
// Seed-split refutation/witness search for one level; returns kSat with the
// lexicographically least witness or kUnsat, identical to the serial result.
LevelOutcome parallel_level_search(const Checker& check, Int n,
                                   const std::vector<std::uint8_t>& resume, bool fix_first,
                                   const SearchControl& ctl, const SearchOptions& opts,
                                   std::vector<std::uint8_t>& witness);
#endif

} // namespace rado::detail
