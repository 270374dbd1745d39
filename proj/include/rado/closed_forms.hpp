#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rado/arith.hpp"

namespace rado {

enum class FormulaStatus { kValue, kInfinite, kNotCovered };

struct HypothesisCheck {
  std::string condition;
  bool holds = false;
};

// A table value recorded next to a conflicting formula value for the same
// input; the search engine arbitrates.
struct Discrepancy {
  Int formula_value = 0;
  Int table_value = 0;
};

struct FormulaValue {
  FormulaStatus status = FormulaStatus::kNotCovered;
  Int value = 0; // meaningful only when status == kValue
  std::string source;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<Discrepancy> discrepancy;

  bool covered() const { return status != FormulaStatus::kNotCovered; }
  bool infinite() const { return status == FormulaStatus::kInfinite; }
};

// Two-color Rado number of x1+...+x_{n-1} = ell*x_n by table lookup.
// Rows are checked in order; a double match raises errc::ambiguous_row.
// The closed ceiling row extends to ell=2 (n >= 2*ell+2 only).
FormulaValue unit_sum_value(Int n, Int ell);

// Exact cases for x1+...+x_{m-2}+k*x_{m-1} = ell*x_m.
FormulaValue weighted_sum_exact(Int m, Int k, Int ell);

// x+y+k*z = 4*w: small-k data for k <= 31 (k=15 carries a flagged
// discrepancy), residue-class formulas for k >= 32.
FormulaValue four_var_value(Int k);

// x+y+z+k*v = (k+j)*w for j in [1,5]; total on its domain.
FormulaValue five_var_value(Int j, Int k);

enum class PairKind { kLinearMultiple, kShift };

// {x+y=z, k*x=y} -> 5k (param >= 3); {x+y=z, x+a=y} -> infinite for odd a,
// 3a+2 for even a (param >= 2).
FormulaValue pair_system_value(PairKind kind, Int param);

// ceil((k+m-2)/ell * ceil((k+m-2)/ell)): the two-interval coloring lower
// bound, valid for every m >= 3, k, ell >= 1.
Int ceiling_lower_bound(Int m, Int k, Int ell);

struct BoundSide {
  Int value = 0;
  std::string source;
};

struct BoundsReport {
  std::optional<BoundSide> lower;
  std::optional<BoundSide> upper;
  bool exact = false;          // lower == upper via the large-k case
  bool in_hypotheses = false;  // some transfer theorem applied (needs ell > k)
  std::vector<HypothesisCheck> hypotheses;
};

BoundsReport weighted_sum_bounds(Int m, Int k, Int ell);

// Residue classes behind four_var_value for k >= 32, exposed so coverage and
// exact-division can be asserted over a full period.
struct FourVarClass {
  int modulus = 16;             // 16 or 64
  std::array<int, 2> residues{}; // nres entries used
  int nres = 1;
  Int quad = 1, lin = 0, cst = 0; // value = (quad*k^2 + lin*k + cst) / modulus

  bool matches(Int k) const {
    for (int i = 0; i < nres; ++i)
      if (k % modulus == residues[static_cast<size_t>(i)]) return true;
    return false;
  }
};

std::span<const FourVarClass> four_var_classes();

} // namespace rado
