#include "rado/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "rado/errors.hpp"

namespace rado {
namespace {

inline Int floor_div(Int a, Int b) {
  return a / b - ((a % b != 0) && ((a > 0) != (b > 0)) ? 1 : 0);
}

// Largest partial sum the DFS can see; keeping it under INT64_MAX/4 lets the
// inner loops run unchecked.
Int overflow_guard(const LinearEquation& eq, Int h) {
  Int bound = eq.shift();
  for (Int s : eq.signed_coeffs()) bound = checked_add(bound, checked_mul(s < 0 ? -s : s, h));
  if (bound > std::numeric_limits<Int>::max() / 4)
    fail(errc::overflow, "coefficients too large for range [1," + std::to_string(h) + "]");
  return bound;
}

// Feasible value interval for coefficient s given residual r and the
// min/max contribution of the remaining slots.
inline bool value_window(Int s, Int r, Int min_rest, Int max_rest, Int& lo, Int& hi) {
  Int a = -r - min_rest; // need s*v <= a
  Int b = -r - max_rest; // need s*v >= b
  if (s > 0) {
    lo = ceil_div(b, s);
    hi = floor_div(a, s);
  } else {
    lo = ceil_div(a, s);
    hi = floor_div(b, s);
  }
  return lo <= hi;
}

struct OrderedEnum {
  const LinearEquation& eq;
  Int h;
  bool need_max; // require max entry == h
  const SolutionVisitor& visit;
  std::vector<Int> min_suffix, max_suffix, values;
  bool stopped = false;

  OrderedEnum(const LinearEquation& e, Int hh, bool nm, const SolutionVisitor& v)
      : eq(e), h(hh), need_max(nm), visit(v) {
    overflow_guard(e, hh);
    int m = eq.arity();
    min_suffix.assign(static_cast<size_t>(m) + 1, 0);
    max_suffix.assign(static_cast<size_t>(m) + 1, 0);
    for (int i = m - 1; i >= 0; --i) {
      Int s = eq.signed_coeffs()[static_cast<size_t>(i)];
      min_suffix[static_cast<size_t>(i)] = min_suffix[static_cast<size_t>(i) + 1] + (s > 0 ? s : s * h);
      max_suffix[static_cast<size_t>(i)] = max_suffix[static_cast<size_t>(i) + 1] + (s > 0 ? s * h : s);
    }
    values.assign(static_cast<size_t>(m), 0);
  }

  void run() { rec(0, eq.shift(), false); }

  void rec(int i, Int r, bool seen_h) {
    if (stopped) return;
    int m = eq.arity();
    Int s = eq.signed_coeffs()[static_cast<size_t>(i)];
    Int lo, hi;
    if (!value_window(s, r, min_suffix[static_cast<size_t>(i) + 1], max_suffix[static_cast<size_t>(i) + 1], lo, hi))
      return;
    lo = std::max<Int>(lo, 1);
    hi = std::min<Int>(hi, h);
    if (i == m - 1) {
      // single slot left: s*v = -r exactly
      if (-r % s != 0) return;
      Int v = -r / s;
      if (v < lo || v > hi) return;
      if (need_max && !seen_h && v != h) return;
      values[static_cast<size_t>(i)] = v;
      if (!visit(values)) stopped = true;
      return;
    }
    for (Int v = lo; v <= hi && !stopped; ++v) {
      values[static_cast<size_t>(i)] = v;
      rec(i + 1, r + s * v, seen_h || v == h);
    }
  }
};

// Slots reordered into groups of equal signed coefficient so that a
// non-decreasing chain within each group enumerates solution multisets once:
// multi-slot groups first (small |coeff| first), then singletons with the
// largest |coeff| iterated early and the smallest solved exactly at the end.
struct GroupPlan {
  std::vector<Int> coeff;     // per position
  std::vector<int> chain;     // index of previous position in same group, or -1
  std::vector<Int> min_sfx, max_sfx;

  GroupPlan(const LinearEquation& eq, Int h) {
    struct G { Int s; int count; };
    std::vector<G> groups;
    for (Int s : eq.signed_coeffs()) {
      auto it = std::find_if(groups.begin(), groups.end(), [&](const G& g) { return g.s == s; });
      if (it == groups.end()) groups.push_back({s, 1});
      else ++it->count;
    }
    std::stable_sort(groups.begin(), groups.end(), [](const G& a, const G& b) {
      bool ma = a.count > 1, mb = b.count > 1;
      if (ma != mb) return ma;
      Int aa = a.s < 0 ? -a.s : a.s, ab = b.s < 0 ? -b.s : b.s;
      if (ma) return aa < ab;
      if (aa != ab) return aa > ab;
      return a.s < b.s;
    });
    for (const auto& g : groups)
      for (int e = 0; e < g.count; ++e) {
        coeff.push_back(g.s);
        chain.push_back(e == 0 ? -1 : static_cast<int>(coeff.size()) - 2);
      }
    size_t m = coeff.size();
    min_sfx.assign(m + 1, 0);
    max_sfx.assign(m + 1, 0);
    for (size_t i = m; i-- > 0;) {
      Int s = coeff[i];
      min_sfx[i] = min_sfx[i + 1] + (s > 0 ? s : s * h);
      max_sfx[i] = max_sfx[i + 1] + (s > 0 ? s * h : s);
    }
  }
};

struct SetCollector {
  const LinearEquation& eq;
  Int t;
  GroupPlan plan;
  std::vector<Int> values;
  std::vector<std::vector<Int>> out;

  SetCollector(const LinearEquation& e, Int tt) : eq(e), t(tt), plan(e, tt) {
    overflow_guard(e, tt);
    values.assign(static_cast<size_t>(e.arity()), 0);
  }

  void rec(size_t i, Int r, bool seen_t) {
    size_t m = values.size();
    Int s = plan.coeff[i];
    Int lo, hi;
    if (!value_window(s, r, plan.min_sfx[i + 1], plan.max_sfx[i + 1], lo, hi)) return;
    if (plan.chain[i] >= 0) lo = std::max(lo, values[static_cast<size_t>(plan.chain[i])]);
    lo = std::max<Int>(lo, 1);
    hi = std::min(hi, t);
    if (i == m - 1) {
      if (-r % s != 0) return;
      Int v = -r / s;
      if (v < lo || v > hi) return;
      if (!seen_t && v != t) return;
      values[i] = v;
      std::vector<Int> set(values);
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      out.push_back(std::move(set));
      return;
    }
    for (Int v = lo; v <= hi; ++v) {
      values[i] = v;
      rec(i + 1, r + s * v, seen_t || v == t);
    }
  }
};

struct ClassSearch {
  const LinearEquation& eq;
  std::span<const Int> vals; // sorted ascending, distinct
  Int require;
  GroupPlan plan;
  std::vector<Int> chosen;

  ClassSearch(const LinearEquation& e, std::span<const Int> v, Int req)
      : eq(e), vals(v), require(req), plan(e, v.empty() ? 1 : v.back()) {
    if (!v.empty()) overflow_guard(e, v.back());
    chosen.assign(static_cast<size_t>(e.arity()), 0);
  }

  bool member(Int v) const { return std::binary_search(vals.begin(), vals.end(), v); }

  bool rec(size_t i, Int r, bool seen_req) {
    size_t m = chosen.size();
    Int s = plan.coeff[i];
    Int lo, hi;
    if (!value_window(s, r, plan.min_sfx[i + 1], plan.max_sfx[i + 1], lo, hi)) return false;
    if (plan.chain[i] >= 0) lo = std::max(lo, chosen[static_cast<size_t>(plan.chain[i])]);
    if (i == m - 1) {
      if (-r % s != 0) return false;
      Int v = -r / s;
      if (v < lo || v > hi || !member(v)) return false;
      if (require > 0 && !seen_req && v != require) return false;
      return true;
    }
    auto it = std::lower_bound(vals.begin(), vals.end(), lo);
    for (; it != vals.end() && *it <= hi; ++it) {
      chosen[i] = *it;
      if (rec(i + 1, r + s * *it, seen_req || *it == require)) return true;
    }
    return false;
  }
};

} // namespace

void for_each_solution(const LinearEquation& eq, Int n, const SolutionVisitor& visit) {
  if (n < 1) fail(errc::invalid_argument, "range bound must be >= 1");
  OrderedEnum e(eq, n, false, visit);
  e.run();
}

void for_each_solution_with_max(const LinearEquation& eq, Int t, const SolutionVisitor& visit) {
  if (t < 1) fail(errc::invalid_argument, "range bound must be >= 1");
  OrderedEnum e(eq, t, true, visit);
  e.run();
}

std::vector<SolutionTuple> solutions(const LinearEquation& eq, Int n) {
  std::vector<SolutionTuple> out;
  for_each_solution(eq, n, [&](std::span<const Int> v) {
    out.emplace_back(v.begin(), v.end());
    return true;
  });
  return out;
}

std::vector<std::vector<Int>> solution_value_sets_at(const LinearEquation& eq, Int t) {
  if (t < 1) fail(errc::invalid_argument, "range bound must be >= 1");
  SetCollector c(eq, t);
  c.rec(0, eq.shift(), false);
  std::sort(c.out.begin(), c.out.end());
  c.out.erase(std::unique(c.out.begin(), c.out.end()), c.out.end());
  return c.out;
}

bool class_has_solution(const LinearEquation& eq, std::span<const Int> values, Int require) {
  if (values.empty()) return false;
  ClassSearch s(eq, values, require);
  return s.rec(0, eq.shift(), false);
}

} // namespace rado
