#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rado/arith.hpp"

namespace rado {

// One side term: coeff * x<slot>, coeff >= 1, slots 1-based.
struct Term {
  Int coeff = 0;
  int slot = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

// A tuple of values, position i giving the value of slot i+1. Repeats allowed.
using SolutionTuple = std::vector<Int>;

// A linear equation sum(lhs) + shift = sum(rhs) over positive integer
// coefficients. Each variable slot appears exactly once across both sides,
// so sides are part of the identity: a*x+b*y+c*z=d*w and a*x+b*y=c*z+d*w are
// different equations even when their solution sets coincide.
//
// The optional constant term (shift, lhs side) exists for the x + a = y
// family used by the pair systems; every other constructor leaves it 0.
class LinearEquation {
 public:
  static LinearEquation make(std::vector<Term> lhs, std::vector<Term> rhs, Int shift = 0);

  int arity() const { return arity_; }
  Int shift() const { return shift_; }
  const std::vector<Term>& lhs() const { return lhs_; }
  const std::vector<Term>& rhs() const { return rhs_; }

  // +coeff for lhs slots, -coeff for rhs slots; index 0-based by slot-1.
  const std::vector<Int>& signed_coeffs() const { return signed_; }

  // Exact check with overflow-checked arithmetic.
  bool is_solution(std::span<const Int> values) const;

  // Canonical text, e.g. "1*x1 + 1*x2 + 11*x3 = 4*x4".
  std::string text() const;

  friend bool operator==(const LinearEquation&, const LinearEquation&) = default;

 private:
  std::vector<Term> lhs_, rhs_;
  Int shift_ = 0;
  int arity_ = 0;
  std::vector<Int> signed_;
};

LinearEquation parse_equation(std::string_view text);

// --- named constructors -----------------------------------------------------

// x1 + ... + x_{m-2} + k*x_{m-1} = ell*x_m
LinearEquation make_weighted_sum(int m, Int k, Int ell);

// x1 + ... + x_{n-1} = ell*x_n
LinearEquation make_unit_sum(int n, Int ell);

// x1 + x2 = x3
LinearEquation make_schur();

// k*x1 = x2
LinearEquation make_multiple(Int k);

// x1 + a = x2
LinearEquation make_shift(Int a);

} // namespace rado
