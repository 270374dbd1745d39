#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rado/equation.hpp"

namespace rado {

// A coefficient value a0 + a1*k, both parts nonnegative.
struct AffineInt {
  Int a0 = 0;
  Int a1 = 0;

  Int at(Int k) const { return checked_add(a0, checked_mul(a1, k)); }
  bool constant() const { return a1 == 0; }
  friend bool operator==(const AffineInt&, const AffineInt&) = default;
};

struct FamilyTerm {
  AffineInt coeff;
  int slot = 0;
  friend bool operator==(const FamilyTerm&, const FamilyTerm&) = default;
};

// An equation whose coefficients are affine in one integer parameter k.
class EquationFamily {
 public:
  static EquationFamily make(std::vector<FamilyTerm> lhs, std::vector<FamilyTerm> rhs,
                             AffineInt shift = {});

  LinearEquation instantiate(Int k) const; // k >= validity()
  Int validity() const { return validity_; }
  int arity() const { return arity_; }
  bool parameter_free() const;

  const std::vector<FamilyTerm>& lhs() const { return lhs_; }
  const std::vector<FamilyTerm>& rhs() const { return rhs_; }
  const AffineInt& shift() const { return shift_; }
  // +coeff for lhs slots, -coeff for rhs (a1 negated too); 0-based by slot-1.
  const std::vector<AffineInt>& signed_coeffs() const { return signed_; }

  std::string text() const;

  friend bool operator==(const EquationFamily&, const EquationFamily&) = default;

 private:
  std::vector<FamilyTerm> lhs_, rhs_;
  AffineInt shift_;
  int arity_ = 0;
  Int validity_ = 1;
  std::vector<AffineInt> signed_;
};

// Accepts plain equations too (then no 'k' appears).
EquationFamily parse_family(std::string_view text);

// x1 + ... + x_{m-2} + k*x_{m-1} = ell*x_m, parameterized by k.
EquationFamily weighted_sum_family(int m, Int ell);

// x1 + x2 + x3 + k*x4 = (k+j)*x5, parameterized by k.
EquationFamily five_var_family(Int j);

// Parameter-free family wrapping x1 + ... + x_{n-1} = ell*x_n.
EquationFamily unit_sum_family(int n, Int ell);

} // namespace rado
