#include "rado/equation.hpp"

#include <algorithm>
#include <sstream>

#include "rado/errors.hpp"

namespace rado {

LinearEquation LinearEquation::make(std::vector<Term> lhs, std::vector<Term> rhs, Int shift) {
  if (lhs.empty()) fail(errc::empty_side, "left-hand side has no variable term");
  if (rhs.empty()) fail(errc::empty_side, "right-hand side has no variable term");
  if (shift < 0) fail(errc::invalid_argument, "constant term must be nonnegative");
  int m = 0;
  for (const auto& t : lhs) m = std::max(m, t.slot);
  for (const auto& t : rhs) m = std::max(m, t.slot);
  std::vector<int> seen(static_cast<size_t>(m) + 1, 0);
  auto check = [&](const Term& t) {
    if (t.coeff < 1) fail(errc::zero_coefficient, "coefficient must be >= 1 on x" + std::to_string(t.slot));
    if (t.slot < 1 || t.slot > m) fail(errc::invalid_argument, "bad slot index");
    if (seen[static_cast<size_t>(t.slot)]++) fail(errc::duplicate_slot, "slot x" + std::to_string(t.slot) + " appears twice");
  };
  for (const auto& t : lhs) check(t);
  for (const auto& t : rhs) check(t);
  for (int s = 1; s <= m; ++s)
    if (!seen[static_cast<size_t>(s)]) fail(errc::duplicate_slot, "slot x" + std::to_string(s) + " is missing; slots must form 1..m");

  LinearEquation eq;
  eq.lhs_ = std::move(lhs);
  eq.rhs_ = std::move(rhs);
  eq.shift_ = shift;
  eq.arity_ = m;
  eq.signed_.assign(static_cast<size_t>(m), 0);
  for (const auto& t : eq.lhs_) eq.signed_[static_cast<size_t>(t.slot - 1)] = t.coeff;
  for (const auto& t : eq.rhs_) eq.signed_[static_cast<size_t>(t.slot - 1)] = -t.coeff;
  return eq;
}

bool LinearEquation::is_solution(std::span<const Int> values) const {
  if (static_cast<int>(values.size()) != arity_)
    fail(errc::invalid_argument, "tuple arity mismatch");
  Int acc = shift_;
  for (int i = 0; i < arity_; ++i) {
    if (values[static_cast<size_t>(i)] < 1) return false;
    acc = checked_add(acc, checked_mul(signed_[static_cast<size_t>(i)], values[static_cast<size_t>(i)]));
  }
  return acc == 0;
}

std::string LinearEquation::text() const {
  std::ostringstream out;
  auto side = [&](const std::vector<Term>& terms, Int shift) {
    bool first = true;
    for (const auto& t : terms) {
      if (!first) out << " + ";
      out << t.coeff << "*x" << t.slot;
      first = false;
    }
    if (shift > 0) out << " + " << shift;
  };
  side(lhs_, shift_);
  out << " = ";
  side(rhs_, 0);
  return out.str();
}

LinearEquation make_weighted_sum(int m, Int k, Int ell) {
  if (m < 3) fail(errc::invalid_argument, "weighted sum needs m >= 3");
  std::vector<Term> lhs;
  for (int i = 1; i <= m - 2; ++i) lhs.push_back({1, i});
  lhs.push_back({k, m - 1});
  return LinearEquation::make(std::move(lhs), {{ell, m}});
}

LinearEquation make_unit_sum(int n, Int ell) {
  if (n < 2) fail(errc::invalid_argument, "unit sum needs n >= 2");
  std::vector<Term> lhs;
  for (int i = 1; i <= n - 1; ++i) lhs.push_back({1, i});
  return LinearEquation::make(std::move(lhs), {{ell, n}});
}

LinearEquation make_schur() { return make_unit_sum(3, 1); }

LinearEquation make_multiple(Int k) { return LinearEquation::make({{k, 1}}, {{1, 2}}); }

LinearEquation make_shift(Int a) { return LinearEquation::make({{1, 1}}, {{1, 2}}, a); }

} // namespace rado
