#include "rado/closed_forms.hpp"

#include <algorithm>

#include "rado/errors.hpp"

namespace rado {
namespace {

FormulaValue not_covered(std::string why) {
  FormulaValue v;
  v.status = FormulaStatus::kNotCovered;
  v.source = std::move(why);
  return v;
}

FormulaValue value_of(Int value, std::string source) {
  FormulaValue v;
  v.status = FormulaStatus::kValue;
  v.value = value;
  v.source = std::move(source);
  return v;
}

bool mod2_eq(Int a, Int b) { return ((a - b) % 2 + 2) % 2 == 0; }
bool mod3_eq(Int a, Int b) { return ((a - b) % 3 + 3) % 3 == 0; }

constexpr std::pair<Int, Int> kExcludedPairs[] = {{3, 2}, {4, 2},  {5, 3},  {10, 5},
                                                  {11, 6}, {12, 7}, {13, 8}, {14, 9}};

bool pair_excluded(Int sum, Int ell) {
  for (auto [a, b] : kExcludedPairs)
    if (a == sum && b == ell) return true;
  return false;
}

} // namespace

FormulaValue unit_sum_value(Int n, Int ell) {
  if (n < 2 || ell < 2) return not_covered("needs n >= 2 and ell >= 2");
  if (ell == 2) {
    // Only the closed ceiling row is taken at ell = 2.
    if (n >= 2 * ell + 2) return value_of(nested_ceil(n - 1, ell), "unit-sum ceiling row (ell=2)");
    return not_covered("ell = 2 is covered only for n >= 2*ell+2");
  }
  if (2 * n < ell + 2) return not_covered("outside table range: needs n >= ell/2 + 1");

  struct Row {
    const char* name;
    bool match;
    Int value;
  };
  bool parity = mod2_eq(ell, n - 1);
  bool mod3 = mod3_eq(ell, n - 1);
  bool except5 = ((ell == 4 || ell == 5) && n == ell - 1) || (10 <= ell && ell <= 14 && n == ell - 4);
  Row rows[] = {
      {"n=ell+1", n == ell + 1, 1},
      {"3: ell+2<=n<=3ell/2+1, parity", ell + 2 <= n && 2 * n <= 3 * ell + 2 && parity, 3},
      {"3: 2ell/3+1<=n<=ell, ell>=4, parity", 3 * n >= 2 * ell + 3 && n <= ell && ell >= 4 && parity, 3},
      {"4: ell+2<=n<=3ell/2+1, non-parity", ell + 2 <= n && 2 * n <= 3 * ell + 2 && !parity, 4},
      {"4: 3ell/2+1<n<=2ell+1, mod3", 2 * n > 3 * ell + 2 && n <= 2 * ell + 1 && mod3, 4},
      {"4: 2ell/3+1<=n<=ell, ell>=4, non-parity",
       3 * n >= 2 * ell + 3 && n <= ell && ell >= 4 && !parity, 4},
      {"4: ell/2+1<=n<2ell/3+1, ell>=4, mod3",
       2 * n >= ell + 2 && 3 * n < 2 * ell + 3 && ell >= 4 && mod3, 4},
      {"5: 3ell/2+1<n<=2ell+1, non-mod3", 2 * n > 3 * ell + 2 && n <= 2 * ell + 1 && !mod3, 5},
      {"5: ell/2+1<=n<2ell/3+1, ell>=4, non-mod3, minus exceptions",
       2 * n >= ell + 2 && 3 * n < 2 * ell + 3 && ell >= 4 && !mod3 && !except5, 5},
      {"6: 10<=ell<=14, n=ell-4", 10 <= ell && ell <= 14 && n == ell - 4, 6},
      {"9: ell=n=3 or ell=5,n=4", (ell == 3 && n == 3) || (ell == 5 && n == 4), 9},
      {"10: ell=4,n=3", ell == 4 && n == 3, 10},
      {"ceiling: n>=2ell+2", n >= 2 * ell + 2, 0},
  };
  const Row* hit = nullptr;
  for (const auto& row : rows) {
    if (!row.match) continue;
    if (hit)
      fail(errc::ambiguous_row, "unit-sum rows '" + std::string(hit->name) + "' and '" + row.name +
                                    "' both match n=" + std::to_string(n) + ", ell=" + std::to_string(ell));
    hit = &row;
  }
  if (!hit) return not_covered("no unit-sum table row matches");
  Int v = hit->value ? hit->value : nested_ceil(n - 1, ell);
  FormulaValue out = value_of(v, std::string("unit-sum row: ") + hit->name);
  out.hypotheses.push_back({"ell >= 3", true});
  out.hypotheses.push_back({"n >= ell/2 + 1", true});
  return out;
}

FormulaValue weighted_sum_exact(Int m, Int k, Int ell) {
  if (m < 3 || k < 1) return not_covered("needs m >= 3 and k >= 1");
  // k = ell = (m-2)*kk with kk >= m-2
  if (k == ell && k % (m - 2) == 0) {
    Int kk = k / (m - 2);
    if (kk >= m - 2) {
      FormulaValue out = value_of(2 * kk, "weighted-sum exact: ell=k=(m-2)k' gives 2k'");
      out.hypotheses.push_back({"k' >= m-2", true});
      return out;
    }
  }
  if (ell < 2) return not_covered("needs ell >= 2");
  if (ell == k + m - 2) return value_of(1, "weighted-sum exact: ell=k+m-2, all-ones solution");
  if (pair_excluded(k + m - 2, ell))
    return not_covered("pair (k+m-2, ell) is on the excluded list");

  bool par1 = mod2_eq(k + m - 2, ell);
  bool par2 = mod2_eq(ell - k, m - 2);
  if (3 * (ell - k) >= 2 * (m - 2) && 2 * (ell - k) <= 3 * (m - 2)) {
    FormulaValue out;
    if (par1 && par2) out = value_of(3, "weighted-sum exact: middle band, matching parity");
    else if (!par1 && !par2) out = value_of(4, "weighted-sum exact: middle band, opposite parity");
    else return not_covered("parity conditions match neither case");
    out.hypotheses.push_back({"2(m-2)/3+k <= ell <= 3(m-2)/2+k", true});
    out.hypotheses.push_back({"ell != k+m-2", true});
    return out;
  }
  bool mod1 = mod3_eq(k + m - 2, ell);
  bool mod2 = mod3_eq(ell - k, m - 2);
  bool low_band = 2 * (ell - k) >= m - 2 && 3 * ell < 2 * (k + m - 2);
  bool high_band = 2 * (ell - k) > 3 * (m - 2) && ell <= k + 2 * m - 4 && m >= k;
  if (low_band || high_band) {
    FormulaValue out;
    if (mod1 && mod2) out = value_of(4, "weighted-sum exact: outer band, matching residues mod 3");
    else if (!mod1 && !mod2) out = value_of(5, "weighted-sum exact: outer band, differing residues mod 3");
    else return not_covered("mod-3 conditions match neither case");
    out.hypotheses.push_back(
        {low_band ? "(m-2)/2+k <= ell < 2(k+m-2)/3" : "3(m-2)/2+k < ell <= k+2m-4 and m >= k", true});
    return out;
  }
  return not_covered("no exact case applies");
}

namespace {

constexpr Int kFourVarSmall[] = {4, 1, 4, 4, 6}; // k = 1..5

// k = 6..15 then 17..31
constexpr Int kFourVarTable[] = {5,  7,  8,  9,  10, 15, 16, 17, 18, 24,
                                 24, 25, 32, 34, 36, 37, 45, 47, 49, 51,
                                 62, 64, 66, 68, 75};

constexpr FourVarClass kFourVarClasses[] = {
    {16, {0, 0}, 1, 1, 6, 16},  {16, {1, 10}, 2, 1, 5, 10}, {16, {2, 0}, 1, 1, 4, 4},
    {16, {7, 0}, 1, 1, 8, 7},   {16, {8, 0}, 1, 1, 7, 8},   {16, {9, 0}, 1, 1, 6, 9},
    {16, {11, 0}, 1, 1, 9, 20}, {16, {12, 0}, 1, 1, 8, 16}, {16, {13, 0}, 1, 1, 7, 12},
    {16, {14, 0}, 1, 1, 6, 8},  {16, {15, 0}, 1, 1, 7, 22}, {64, {3, 35}, 2, 4, 30, 66},
    {64, {19, 51}, 2, 4, 30, 34}, {64, {4, 36}, 2, 4, 26, 24}, {64, {20, 52}, 2, 4, 26, 56},
    {64, {5, 37}, 2, 4, 22, 46},  {64, {21, 53}, 2, 4, 22, 78}, {64, {6, 38}, 2, 4, 18, 68},
    {64, {22, 54}, 2, 4, 18, 36},
};

} // namespace

std::span<const FourVarClass> four_var_classes() { return kFourVarClasses; }

FormulaValue four_var_value(Int k) {
  if (k < 1) return not_covered("needs k >= 1");
  if (k <= 5) return value_of(kFourVarSmall[static_cast<size_t>(k - 1)], "four-var small-k data");
  if (k == 16) return value_of(24, "four-var small-k data");
  if (k <= 31) {
    size_t idx = static_cast<size_t>(k < 16 ? k - 6 : k - 7);
    FormulaValue out = value_of(kFourVarTable[idx], "four-var table, k in [6,31]");
    if (k == 15) {
      // The residue formula for k=15 mod 16 yields 22 but the recorded table
      // value is 24; both are reported and the search engine arbitrates.
      out.discrepancy = Discrepancy{22, 24};
      out.source = "four-var table, k=15 (flagged: residue formula disagrees)";
    }
    return out;
  }
  const FourVarClass* hit = nullptr;
  for (const auto& cls : kFourVarClasses) {
    if (!cls.matches(k)) continue;
    if (hit) fail(errc::non_integral_formula, "four-var residue classes overlap at k=" + std::to_string(k));
    hit = &cls;
  }
  if (!hit) fail(errc::non_integral_formula, "four-var residue classes miss k=" + std::to_string(k));
  Int num = checked_add(checked_add(checked_mul(hit->quad, checked_mul(k, k)), checked_mul(hit->lin, k)), hit->cst);
  if (num % hit->modulus != 0)
    fail(errc::non_integral_formula, "four-var residue formula is non-integral at k=" + std::to_string(k));
  return value_of(num / hit->modulus,
                  "four-var residue k=" + std::to_string(k % hit->modulus) + " (mod " +
                      std::to_string(hit->modulus) + ")");
}

FormulaValue five_var_value(Int j, Int k) {
  if (j < 1 || j > 5 || k < 1) return not_covered("needs j in [1,5], k >= 1");
  auto src = [&](const char* piece) {
    return "five-var j=" + std::to_string(j) + ": " + piece;
  };
  switch (j) {
    case 2:
    case 4:
      return value_of(4, src("constant 4 for all k"));
    case 3:
      return value_of(1, src("all-ones solution for all k"));
    case 5: {
      if (k <= 4) return value_of(3, src("k in [1,4]"));
      if ((k >= 5 && k <= 11) || k == 13 || k == 14 || k == 17) return value_of(5, src("k in [5,11] or {13,14,17}"));
      if (k == 12 || k == 15 || k == 16 || k == 18 || k == 19 || k == 22)
        return value_of(6, src("k in {12,15,16,18,19,22}"));
      if (k == 21 || k == 23 || k == 24 || (k >= 26 && k <= 29)) return value_of(8, src("k in {21,23,24} or [26,29]"));
      return value_of(9, src("k in {20,25} or k >= 30"));
    }
    case 1: {
      if (k <= 2) return value_of(5, src("k in {1,2}"));
      if (k <= 4) return value_of(3, src("k in {3,4}"));
      if (k <= 6) return value_of(4, src("k in {5,6}"));
      if (k <= 9) return value_of(5, src("k in {7,8,9}"));
      if (k <= 12) return value_of(6, src("k in {10,11,12}"));
      if (k <= 14) return value_of(7, src("k in {13,14}"));
      if (k <= 16) return value_of(8, src("k in {15,16}"));
      if (k <= 18) return value_of(9, src("k in {17,18}"));
      if (k <= 20) return value_of(10, src("k in {19,20}"));
      return value_of(11, src("k >= 21"));
    }
    default:
      return not_covered("unreachable");
  }
}

FormulaValue pair_system_value(PairKind kind, Int param) {
  if (kind == PairKind::kLinearMultiple) {
    if (param < 3) return not_covered("linear-multiple pair needs k >= 3");
    return value_of(5 * param, "pair system {x+y=z, kx=y}: 5k");
  }
  if (param < 2) return not_covered("shift pair needs a >= 2");
  if (param % 2 == 1) {
    FormulaValue v;
    v.status = FormulaStatus::kInfinite;
    v.source = "pair system {x+y=z, x+a=y}: infinite for odd a";
    return v;
  }
  return value_of(3 * param + 2, "pair system {x+y=z, x+a=y}: 3a+2 for even a");
}

Int ceiling_lower_bound(Int m, Int k, Int ell) {
  if (m < 3 || k < 1 || ell < 1) fail(errc::invalid_argument, "needs m >= 3, k >= 1, ell >= 1");
  return nested_ceil(k + m - 2, ell);
}

BoundsReport weighted_sum_bounds(Int m, Int k, Int ell) {
  if (m < 3 || k < 1 || ell < 1) fail(errc::invalid_argument, "needs m >= 3, k >= 1, ell >= 1");
  BoundsReport rep;
  rep.lower = BoundSide{ceiling_lower_bound(m, k, ell), "two-interval ceiling lower bound"};
  rep.hypotheses.push_back({"ell > k (transfer theorems)", ell > k});
  if (ell > k) {
    FormulaValue upper = unit_sum_value(m - 1, ell - k);
    if (upper.status == FormulaStatus::kValue) {
      rep.upper = BoundSide{upper.value, "unit-sum transfer upper: " + upper.source};
      rep.in_hypotheses = true;
    }
    bool transfer_low = k + m - 2 <= 2 * ell && ell <= k + 2 * (m - 2) && !pair_excluded(k + m - 2, ell);
    rep.hypotheses.push_back({"(k+m-2)/2 <= ell <= k+2(m-2), pair not excluded", transfer_low});
    if (transfer_low) {
      FormulaValue low = unit_sum_value(ell + 1, k + m - 2);
      if (low.status == FormulaStatus::kValue) {
        rep.in_hypotheses = true;
        if (low.value > rep.lower->value)
          rep.lower = BoundSide{low.value, "unit-sum transfer lower: " + low.source};
      }
    }
    bool exact_case = k * (ell - k) * (ell - k) >= (m - 2) * (m - 2) * (m - 2) &&
                      m >= (ell - k) * (ell - k) - (ell - k) + 2;
    rep.hypotheses.push_back({"k(ell-k)^2 >= (m-2)^3 and m >= (ell-k)^2-(ell-k)+2", exact_case});
    if (exact_case) {
      // Large k forces x_{m-1} = x_m in every in-range solution, so the value
      // is exactly that of the unit-sum equation; usable only where the
      // unit-sum table actually covers (m-1, ell-k).
      FormulaValue ev = unit_sum_value(m - 1, ell - k);
      if (ev.status == FormulaStatus::kValue) {
        rep.exact = true;
        rep.in_hypotheses = true;
        rep.lower = BoundSide{ev.value, "large-k exact value"};
        rep.upper = BoundSide{ev.value, "large-k exact value"};
      }
    }
  }
  return rep;
}

} // namespace rado
