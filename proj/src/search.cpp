#include "rado/search.hpp"

#include <algorithm>
#include <sstream>

#include "rado/enumerate.hpp"
#include "rado/errors.hpp"
#include "rado/search_internal.hpp"

namespace rado {

ColorSystem ColorSystem::uniform(LinearEquation eq, int r) {
  if (r < 1) fail(errc::invalid_argument, "need at least one color");
  ColorSystem sys;
  for (int i = 0; i < r; ++i) sys.eqs.push_back(eq);
  return sys;
}

bool ColorSystem::all_equal() const {
  for (const auto& e : eqs)
    if (!(e == eqs.front())) return false;
  return true;
}

std::string ColorSystem::text() const {
  std::string out;
  for (size_t i = 0; i < eqs.size(); ++i) {
    if (i) out += " ; ";
    out += eqs[i].text();
  }
  return out;
}

ColorSystem parse_system(const std::string& text) {
  ColorSystem sys;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t sep = text.find(';', pos);
    std::string part = text.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
    sys.eqs.push_back(parse_equation(part));
    if (sep == std::string::npos) break;
    pos = sep + 1;
  }
  if (sys.eqs.empty()) fail(errc::parse_error, "empty system");
  return sys;
}

ColorSystem pair_sum_vs_multiple(Int k) { return ColorSystem{{make_schur(), make_multiple(k)}}; }

ColorSystem pair_sum_vs_shift(Int a) { return ColorSystem{{make_schur(), make_shift(a)}}; }

namespace detail {
namespace {

// Shape usable by the subset-sum check: unit slots plus at most two other
// slots. Wide unit-sum equations take this path, where indexed patterns
// would explode combinatorially.
struct SumDpShape {
  bool ok = false;
  int units = 0;
  std::vector<Int> singles;
  Int shift = 0;
};

SumDpShape analyze_sumdp(const LinearEquation& eq) {
  SumDpShape s;
  for (Int c : eq.signed_coeffs()) {
    if (c == 1) ++s.units;
    else s.singles.push_back(c);
  }
  s.shift = eq.shift();
  s.ok = s.units >= 1 && s.singles.size() <= 2;
  return s;
}

constexpr int kSumDpMinArity = 9;

} // namespace

Checker::Checker(const ColorSystem& sys, Int n_max, std::size_t cache_budget,
                 std::chrono::steady_clock::time_point deadline)
    : r_(sys.r()), n_max_(n_max) {
  for (const auto& eq : sys.eqs) {
    size_t idx = 0;
    for (; idx < eqs_.size(); ++idx)
      if (eqs_[idx] == eq) break;
    if (idx == eqs_.size()) eqs_.push_back(eq);
    eq_of_color_.push_back(idx);
  }
  index_.resize(eqs_.size());
  std::vector<Kind> eq_kind(eqs_.size(), Kind::kPattern);
  std::size_t total_values = 0;
  for (size_t e = 0; e < eqs_.size(); ++e) {
    auto shape = analyze_sumdp(eqs_[e]);
    if (eqs_[e].arity() >= kSumDpMinArity && shape.ok) {
      eq_kind[e] = Kind::kSumDp;
      continue;
    }
    PatternIndex& idx = index_[e];
    idx.layer_first.assign(static_cast<size_t>(n_max) + 2, 0);
    std::vector<std::vector<std::uint32_t>> by_value(static_cast<size_t>(n_max) + 1);
    for (Int t = 1; t <= n_max; ++t) {
      if (deadline.time_since_epoch().count() != 0 && (t & 15) == 0 &&
          std::chrono::steady_clock::now() > deadline)
        fail(errc::budget_exceeded, "search budget exceeded while indexing solutions");
      idx.layer_first[static_cast<size_t>(t)] = idx.set_count;
      for (const auto& set : solution_value_sets_at(eqs_[e], t)) {
        std::uint32_t sid = idx.set_count++;
        idx.need.push_back(static_cast<std::uint8_t>(set.size() - 1));
        idx.set_layer.push_back(static_cast<std::uint32_t>(t));
        total_values += set.size();
        if (total_values > cache_budget)
          fail(errc::enumeration_limit_exceeded,
               "solution pattern index exceeded its budget of " + std::to_string(cache_budget) +
                   " values");
        for (Int v : set)
          if (v != t) by_value[static_cast<size_t>(v)].push_back(sid);
      }
    }
    idx.layer_first[static_cast<size_t>(n_max) + 1] = idx.set_count;
    idx.inc_off.assign(static_cast<size_t>(n_max) + 2, 0);
    for (Int v = 1; v <= n_max; ++v)
      idx.inc_off[static_cast<size_t>(v) + 1] =
          idx.inc_off[static_cast<size_t>(v)] +
          static_cast<std::uint32_t>(by_value[static_cast<size_t>(v)].size());
    idx.inc_sid.reserve(idx.inc_off[static_cast<size_t>(n_max) + 1]);
    for (Int v = 1; v <= n_max; ++v)
      idx.inc_sid.insert(idx.inc_sid.end(), by_value[static_cast<size_t>(v)].begin(),
                         by_value[static_cast<size_t>(v)].end());
  }
  for (int c = 0; c < r_; ++c) {
    size_t e = eq_of_color_[static_cast<size_t>(c)];
    kinds_.push_back(eq_kind[e]);
    if (eq_kind[e] == Kind::kSumDp) {
      auto shape = analyze_sumdp(eqs_[e]);
      units_.push_back(shape.units);
      singles_.push_back(shape.singles);
      shifts_.push_back(shape.shift);
    } else {
      units_.push_back(0);
      singles_.emplace_back();
      shifts_.push_back(0);
    }
  }
}

Worker::Worker(const Checker& check) : check_(check) {
  count_.resize(static_cast<size_t>(check.r()));
  ready_.resize(static_cast<size_t>(check.r()));
  reset();
}

void Worker::reset() {
  Int n_max = check_.n_max();
  colors_.assign(static_cast<size_t>(n_max), kUncolored);
  for (int c = 0; c < check_.r(); ++c) {
    const PatternIndex& idx = check_.index_of(c);
    count_[static_cast<size_t>(c)].assign(idx.set_count, 0);
    auto& rdy = ready_[static_cast<size_t>(c)];
    rdy.assign(static_cast<size_t>(n_max) + 2, 0);
    if (check_.kind(c) == Checker::Kind::kPattern)
      for (std::uint32_t sid = 0; sid < idx.set_count; ++sid)
        if (idx.need[sid] == 0) ++rdy[idx.set_layer[sid]]; // one-value solutions kill every color
  }
  dead_colors_.assign(static_cast<size_t>(n_max) + 2, 0);
  for (Int t = 1; t <= n_max; ++t) {
    std::uint8_t dead = 0;
    for (int c = 0; c < check_.r(); ++c)
      if (ready_[static_cast<size_t>(c)][static_cast<size_t>(t)] > 0) ++dead;
    dead_colors_[static_cast<size_t>(t)] = dead;
  }
  trail_.clear();
}

void Worker::undo_to(size_t mark) {
  while (trail_.size() > mark) {
    Int t = trail_.back();
    trail_.pop_back();
    int c = colors_[static_cast<size_t>(t - 1)];
    colors_[static_cast<size_t>(t - 1)] = kUncolored;
    if (check_.kind(c) == Checker::Kind::kSumDp) continue;
    const PatternIndex& idx = check_.index_of(c);
    auto* cnt = count_[static_cast<size_t>(c)].data();
    auto* rdy = ready_[static_cast<size_t>(c)].data();
    for (std::uint32_t i = idx.inc_off[static_cast<size_t>(t)];
         i < idx.inc_off[static_cast<size_t>(t) + 1]; ++i) {
      std::uint32_t sid = idx.inc_sid[i];
      if (cnt[sid]-- == idx.need[sid]) {
        std::uint32_t layer = idx.set_layer[sid];
        if (--rdy[layer] == 0 && colors_[static_cast<size_t>(layer - 1)] == kUncolored)
          --dead_colors_[layer];
      }
    }
  }
}

bool Worker::raw_assign(Int t, int c, Int bound) {
  if (ready_[static_cast<size_t>(c)][static_cast<size_t>(t)] != 0) return false;
  colors_[static_cast<size_t>(t - 1)] = static_cast<std::uint8_t>(c);
  trail_.push_back(t);
  ++nodes;
  if (check_.kind(c) == Checker::Kind::kSumDp) return !sumdp_conflict(c, t, bound);
  const PatternIndex& idx = check_.index_of(c);
  auto* cnt = count_[static_cast<size_t>(c)].data();
  auto* rdy = ready_[static_cast<size_t>(c)].data();
  bool ok = true;
  int r = check_.r();
  for (std::uint32_t i = idx.inc_off[static_cast<size_t>(t)];
       i < idx.inc_off[static_cast<size_t>(t) + 1]; ++i) {
    std::uint32_t sid = idx.inc_sid[i];
    if (++cnt[sid] == idx.need[sid]) {
      std::uint32_t layer = idx.set_layer[sid];
      std::uint8_t col = colors_[static_cast<size_t>(layer - 1)];
      if (col == c) ok = false; // completed a monochromatic solution
      if (rdy[layer]++ == 0 && col == kUncolored) {
        std::uint8_t dc = ++dead_colors_[layer];
        if (static_cast<Int>(layer) <= bound) {
          if (dc == r) ok = false; // no color left for a required integer
          else if (dc == r - 1) {
            for (int live = 0; live < r; ++live)
              if (ready_[static_cast<size_t>(live)][layer] == 0) {
                queue_.emplace_back(static_cast<Int>(layer), static_cast<std::uint8_t>(live));
                break;
              }
          }
        }
      }
    }
  }
  return ok;
}

bool Worker::assign(Int t, int c, Int bound) {
  queue_.clear();
  if (!raw_assign(t, c, bound)) return false;
  for (size_t qi = 0; qi < queue_.size(); ++qi) {
    auto [u, cu] = queue_[qi];
    std::uint8_t col = colors_[static_cast<size_t>(u - 1)];
    if (col != kUncolored) {
      if (col != cu) return false;
      continue;
    }
    if (!raw_assign(u, static_cast<int>(cu), bound)) return false;
  }
  return true;
}

// Exact-count subset-sum reachability over the color class: reach[j] holds
// the sums of exactly j class values (repeats allowed).
bool Worker::sumdp_conflict(int c, Int t, Int bound) {
  cls_.clear();
  for (Int v = 1; v <= bound; ++v)
    if (colors_[static_cast<size_t>(v - 1)] == c) cls_.push_back(v);
  const auto& cls = cls_;
  int u = check_.sumdp_units(c);
  Int max_sum = static_cast<Int>(u) * (cls.empty() ? 1 : cls.back());
  size_t words = static_cast<size_t>(max_sum / 64 + 1);
  auto& dp = dp_;
  dp.assign(words * static_cast<size_t>(u + 1), 0);
  auto row = [&](int j) { return dp.data() + static_cast<size_t>(j) * words; };
  row(0)[0] = 1;
  for (int j = 1; j <= u; ++j) {
    const std::uint64_t* prev = row(j - 1);
    std::uint64_t* cur = row(j);
    for (Int v : cls) {
      size_t word_shift = static_cast<size_t>(v) / 64;
      int bit_shift = static_cast<int>(v % 64);
      for (size_t w = words; w-- > word_shift;) {
        std::uint64_t x = prev[w - word_shift] << bit_shift;
        if (bit_shift && w > word_shift) x |= prev[w - word_shift - 1] >> (64 - bit_shift);
        cur[w] |= x;
      }
    }
  }
  auto reach = [&](int j, Int sum) {
    if (sum < 0 || sum > max_sum) return false;
    return ((row(j)[static_cast<size_t>(sum) / 64] >> (sum % 64)) & 1u) != 0;
  };
  const auto& singles = check_.sumdp_singles(c);
  Int base = check_.sumdp_shift(c);
  // A solution must use t somewhere: either a single slot equals t, or one
  // of the unit slots does (then u-1 units remain free).
  auto unit_target_hit = [&](Int target, bool t_used) {
    if (t_used && reach(u, target)) return true;
    return reach(u - 1, target - t);
  };
  if (singles.empty()) return unit_target_hit(-base, false);
  if (singles.size() == 1) {
    for (Int v : cls)
      if (unit_target_hit(-base - singles[0] * v, v == t)) return true;
    return false;
  }
  for (Int v : cls)
    for (Int w : cls)
      if (unit_target_hit(-base - singles[0] * v - singles[1] * w, v == t || w == t)) return true;
  return false;
}

// --- level search ------------------------------------------------------------

namespace {

struct Frame {
  Int t;
  int next_color;
  bool on_resume; // still on the resume-witness spine
  size_t mark;
};

inline int resume_color(const std::vector<std::uint8_t>& resume, Int t) {
  return t <= static_cast<Int>(resume.size()) ? resume[static_cast<size_t>(t - 1)] : 0;
}

} // namespace

LevelOutcome level_search(const Checker& check, Worker& worker, Int n,
                          const std::vector<std::uint8_t>& resume, const std::uint8_t* seed,
                          Int seed_len, bool fix_first, const SearchControl& ctl) {
  bool on_resume = true; // false once the seed sits above the resume prefix
  for (Int t = 1; t <= seed_len; ++t) {
    int c = seed[static_cast<size_t>(t - 1)];
    on_resume = on_resume && c == resume_color(resume, t);
    if (worker.colored(t)) {
      if (worker.colors()[static_cast<size_t>(t - 1)] != c) return LevelOutcome::kUnsat;
      continue;
    }
    if (!worker.assign(t, c, n)) return LevelOutcome::kUnsat;
  }

  std::vector<Frame> stack;
  auto push_frame = [&](Int t, bool on_path) {
    stack.push_back(Frame{t, on_path ? resume_color(resume, t) : 0, on_path, worker.mark()});
  };
  Int first = seed_len + 1;
  while (first <= n && worker.colored(first)) ++first;
  if (first > n) return LevelOutcome::kSat; // seed propagation completed the level
  push_frame(first, on_resume);
  std::uint64_t last_check = worker.nodes;
  int r = check.r();
  while (!stack.empty()) {
    Frame& f = stack.back();
    worker.undo_to(f.mark);
    int c = f.next_color++;
    int limit = (f.t == 1 && fix_first) ? 1 : r;
    if (c >= limit) {
      stack.pop_back();
      continue;
    }
    if (worker.nodes - last_check >= 4096) {
      last_check = worker.nodes;
      if (ctl.deadline.time_since_epoch().count() != 0 &&
          std::chrono::steady_clock::now() > ctl.deadline)
        fail(errc::budget_exceeded, "search budget exceeded");
      if (ctl.best_sat_seed && ctl.best_sat_seed->load(std::memory_order_relaxed) < ctl.my_seed)
        return LevelOutcome::kAborted;
      if (ctl.node_cap && worker.nodes > ctl.node_cap) return LevelOutcome::kCapped;
    }
    if (!worker.assign(f.t, c, n)) continue;
    Int u = f.t + 1;
    while (u <= n && worker.colored(u)) ++u;
    bool child_on = f.on_resume && c == resume_color(resume, f.t);
    if (u > n) return LevelOutcome::kSat;
    push_frame(u, child_on);
  }
  return LevelOutcome::kUnsat;
}

std::vector<std::vector<std::uint8_t>> level_seeds(const Checker& check, Worker& worker, Int n,
                                                   Int depth,
                                                   const std::vector<std::uint8_t>& resume,
                                                   bool fix_first) {
  std::vector<std::vector<std::uint8_t>> seeds;
  std::vector<Frame> stack;
  auto push_frame = [&](Int t, bool on_path) {
    stack.push_back(Frame{t, on_path ? resume_color(resume, t) : 0, on_path, worker.mark()});
  };
  push_frame(1, true);
  int r = check.r();
  while (!stack.empty()) {
    Frame& f = stack.back();
    worker.undo_to(f.mark);
    int c = f.next_color++;
    int limit = (f.t == 1 && fix_first) ? 1 : r;
    if (c >= limit) {
      stack.pop_back();
      continue;
    }
    if (!worker.assign(f.t, c, n)) continue;
    Int u = f.t + 1;
    while (u <= depth && worker.colored(u)) ++u;
    bool child_on = f.on_resume && c == resume_color(resume, f.t);
    if (u > depth) {
      seeds.emplace_back(worker.colors().begin(), worker.colors().begin() + depth);
      continue;
    }
    push_frame(u, child_on);
  }
  worker.undo_to(0);
  return seeds;
}

RadoResult run_levels(const ColorSystem& sys, Int n_max, const SearchOptions& opts, bool parallel) {
  SearchControl ctl;
  if (opts.budget.count() > 0) ctl.deadline = std::chrono::steady_clock::now() + opts.budget;
  Checker check(sys, n_max, opts.cache_budget, ctl.deadline);
  Worker worker(check);
  bool fix_first = sys.all_equal();
  std::vector<std::uint8_t> witness; // valid coloring of [1, n-1]
  for (Int n = 1; n <= n_max; ++n) {
    worker.reset();
    SearchControl lvl = ctl;
    if (parallel) lvl.node_cap = 300000;
    LevelOutcome out = level_search(check, worker, n, witness, nullptr, 0, fix_first, lvl);
    std::vector<std::uint8_t> next;
    if (out == LevelOutcome::kSat)
      next.assign(worker.colors().begin(), worker.colors().begin() + n);
#ifdef _OPENMP
    if (out == LevelOutcome::kCapped)
      out = parallel_level_search(check, n, witness, fix_first, ctl, opts, next);
#endif
    if (out == LevelOutcome::kSat) {
      witness = std::move(next);
      continue;
    }
    if (out != LevelOutcome::kUnsat) fail(errc::invalid_argument, "level search did not resolve");
    RadoResult res;
    res.found = true;
    res.value = n;
    res.certificate = Coloring(sys.r(), std::move(witness));
    return res;
  }
  RadoResult res;
  res.found = false;
  res.value = n_max;
  res.certificate = Coloring(sys.r(), std::move(witness));
  return res;
}

} // namespace detail

RadoResult rado_number_serial(const ColorSystem& sys, Int n_max, const SearchOptions& opts) {
  if (n_max < 1) fail(errc::invalid_argument, "n_max must be >= 1");
  return detail::run_levels(sys, n_max, opts, false);
}

std::optional<Coloring> find_valid_coloring(const ColorSystem& sys, Int n,
                                            const SearchOptions& opts) {
  RadoResult r = rado_number(sys, n, opts);
  if (r.found) return std::nullopt; // no valid coloring from level r.value <= n on
  return r.certificate;
}

bool verify_certificate(const ColorSystem& sys, const Coloring& coloring) {
  if (coloring.r() != sys.r())
    fail(errc::invalid_argument, "certificate color count does not match the system");
  for (int c = 0; c < sys.r(); ++c) {
    std::vector<Int> cls;
    for (Int v = 1; v <= coloring.n(); ++v)
      if (coloring.color_of(v) == c) cls.push_back(v);
    if (class_has_solution(sys.eqs[static_cast<size_t>(c)], cls)) return false;
  }
  return true;
}

bool verify_periodic_certificate(const ColorSystem& sys, const PeriodicPattern& pattern) {
  if (pattern.r != sys.r())
    fail(errc::invalid_argument, "pattern color count does not match the system");
  Int p = pattern.period();
  for (int c = 0; c < sys.r(); ++c) {
    std::vector<Int> residues;
    for (Int rho = 0; rho < p; ++rho)
      if (pattern.pattern[static_cast<size_t>(((rho - 1) % p + p) % p)] == c) residues.push_back(rho);
    if (residues.empty()) continue;
    // Reachable residues of the partial sums, slot by slot.
    const auto& eq = sys.eqs[static_cast<size_t>(c)];
    std::vector<char> reach(static_cast<size_t>(p), 0), next(static_cast<size_t>(p), 0);
    reach[static_cast<size_t>(((eq.shift() % p) + p) % p)] = 1;
    for (Int coeff : eq.signed_coeffs()) {
      std::fill(next.begin(), next.end(), 0);
      for (Int s = 0; s < p; ++s) {
        if (!reach[static_cast<size_t>(s)]) continue;
        for (Int rho : residues) {
          Int v = ((s + coeff % p * rho) % p + p) % p;
          next[static_cast<size_t>(v)] = 1;
        }
      }
      reach.swap(next);
    }
    if (reach[0]) return false; // this class can satisfy its equation mod p
  }
  return true;
}

std::vector<Coloring> enumerate_valid_colorings(const ColorSystem& sys, Int n,
                                                bool fix_first_color, std::uint64_t limit) {
  if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
  std::uint64_t total = 1;
  for (Int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(sys.r());
    if (total > limit)
      fail(errc::enumeration_limit_exceeded,
           "r^n exceeds the enumeration limit of " + std::to_string(limit));
  }
  detail::Checker check(sys, n, SearchOptions{}.cache_budget);
  detail::Worker worker(check);
  auto seeds = detail::level_seeds(check, worker, n, n, {}, fix_first_color);
  std::vector<Coloring> out;
  out.reserve(seeds.size());
  for (auto& s : seeds) out.emplace_back(sys.r(), std::move(s));
  // ordered by display string, the order the coloring tables use
  std::sort(out.begin(), out.end(),
            [](const Coloring& a, const Coloring& b) { return a.str() < b.str(); });
  return out;
}

std::string export_cnf(const ColorSystem& sys, Int n) {
  if (sys.r() != 2) fail(errc::invalid_argument, "CNF export supports two colors");
  std::vector<std::vector<Int>> clauses;
  for (int c = 0; c < 2; ++c) {
    for_each_solution(sys.eqs[static_cast<size_t>(c)], n, [&](std::span<const Int> tuple) {
      std::vector<Int> vals(tuple.begin(), tuple.end());
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      if (c == 0)
        clauses.push_back(vals); // at least one value not color 0
      else {
        for (auto& v : vals) v = -v;
        clauses.push_back(vals);
      }
      return true;
    });
  }
  std::ostringstream out;
  out << "c valid 2-colorings of [1," << n << "] for " << sys.text() << '\n';
  out << "p cnf " << n << ' ' << clauses.size() << '\n';
  for (const auto& cl : clauses) {
    for (Int lit : cl) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

#ifndef _OPENMP
RadoResult rado_number(const ColorSystem& sys, Int n_max, const SearchOptions& opts) {
  return rado_number_serial(sys, n_max, opts);
}
#endif

} // namespace rado
