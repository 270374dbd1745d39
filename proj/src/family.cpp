#include "rado/family.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rado/errors.hpp"

namespace rado {

EquationFamily EquationFamily::make(std::vector<FamilyTerm> lhs, std::vector<FamilyTerm> rhs,
                                    AffineInt shift) {
  if (lhs.empty()) fail(errc::empty_side, "left-hand side has no variable term");
  if (rhs.empty()) fail(errc::empty_side, "right-hand side has no variable term");
  if (shift.a0 < 0 || shift.a1 < 0) fail(errc::invalid_argument, "constant term must be nonnegative");
  int m = 0;
  for (const auto& t : lhs) m = std::max(m, t.slot);
  for (const auto& t : rhs) m = std::max(m, t.slot);
  std::vector<int> seen(static_cast<size_t>(m) + 1, 0);
  for (const auto* side : {&lhs, &rhs})
    for (const auto& t : *side) {
      if (t.coeff.a0 < 0 || t.coeff.a1 < 0)
        fail(errc::unsupported_family_shape, "affine coefficients need nonnegative parts");
      if (t.coeff.a0 == 0 && t.coeff.a1 == 0)
        fail(errc::zero_coefficient, "coefficient vanishes identically on x" + std::to_string(t.slot));
      if (t.slot < 1) fail(errc::invalid_argument, "bad slot index");
      if (seen[static_cast<size_t>(t.slot)]++)
        fail(errc::duplicate_slot, "slot x" + std::to_string(t.slot) + " appears twice");
    }
  for (int s = 1; s <= m; ++s)
    if (!seen[static_cast<size_t>(s)])
      fail(errc::duplicate_slot, "slot x" + std::to_string(s) + " is missing; slots must form 1..m");

  EquationFamily f;
  f.lhs_ = std::move(lhs);
  f.rhs_ = std::move(rhs);
  f.shift_ = shift;
  f.arity_ = m;
  f.validity_ = 1; // nonnegative parts make every coefficient >= 1 from k=1 on
  f.signed_.assign(static_cast<size_t>(m), AffineInt{});
  for (const auto& t : f.lhs_) f.signed_[static_cast<size_t>(t.slot - 1)] = t.coeff;
  for (const auto& t : f.rhs_) f.signed_[static_cast<size_t>(t.slot - 1)] = {-t.coeff.a0, -t.coeff.a1};
  return f;
}

bool EquationFamily::parameter_free() const {
  for (const auto& c : signed_)
    if (c.a1 != 0) return false;
  return shift_.a1 == 0;
}

LinearEquation EquationFamily::instantiate(Int k) const {
  if (k < validity_)
    fail(errc::parameter_below_validity,
         "parameter " + std::to_string(k) + " below validity " + std::to_string(validity_));
  std::vector<Term> lhs, rhs;
  for (const auto& t : lhs_) lhs.push_back({t.coeff.at(k), t.slot});
  for (const auto& t : rhs_) rhs.push_back({t.coeff.at(k), t.slot});
  return LinearEquation::make(std::move(lhs), std::move(rhs), shift_.at(k));
}

namespace {

std::string affine_str(const AffineInt& c) {
  std::ostringstream out;
  if (c.a1 == 0) {
    out << c.a0;
  } else if (c.a0 == 0) {
    if (c.a1 == 1) out << "k";
    else out << c.a1 << "*k";
  } else {
    out << '(';
    if (c.a1 == 1) out << "k";
    else out << c.a1 << "*k";
    out << '+' << c.a0 << ')';
  }
  return out.str();
}

} // namespace

std::string EquationFamily::text() const {
  std::ostringstream out;
  auto side = [&](const std::vector<FamilyTerm>& terms, const AffineInt& shift) {
    bool first = true;
    for (const auto& t : terms) {
      if (!first) out << " + ";
      out << affine_str(t.coeff) << "*x" << t.slot;
      first = false;
    }
    if (shift.a0 != 0 || shift.a1 != 0) out << " + " << affine_str(shift);
  };
  side(lhs_, shift_);
  out << " = ";
  side(rhs_, {});
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser for "1*x1 + x2 + (k+1)*x3 = 4*x4" style text; '*' optional between a
// coefficient and its variable, parenthesized coefficients affine in k.

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void bail(const std::string& what) {
    fail(errc::parse_error, what + " at position " + std::to_string(pos) + " in '" + std::string(s) + "'");
  }

  Int integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) bail("expected integer");
    Int v = 0;
    for (size_t i = start; i < pos; ++i) {
      v = checked_mul(v, 10);
      v = checked_add(v, s[i] - '0');
    }
    return v;
  }

  // INT | k | INT [*] k  (one factor inside a parenthesized sum)
  AffineInt affine_atom() {
    skip();
    if (peek() == 'k') {
      ++pos;
      return {0, 1};
    }
    Int v = integer();
    skip();
    if (peek() == 'k') {
      ++pos;
      return {0, v};
    }
    if (peek() == '*') {
      size_t save = pos;
      ++pos;
      if (peek() == 'k') {
        ++pos;
        return {0, v};
      }
      pos = save;
    }
    return {v, 0};
  }

  AffineInt affine_sum() {
    AffineInt acc = affine_atom();
    while (eat('+')) {
      AffineInt b = affine_atom();
      acc = {checked_add(acc.a0, b.a0), checked_add(acc.a1, b.a1)};
    }
    return acc;
  }

  // Parses one side into variable terms plus a constant part.
  void side(std::vector<FamilyTerm>& terms, AffineInt& constant) {
    do {
      skip();
      AffineInt coeff{1, 0};
      bool have_coeff = false;
      if (eat('(')) {
        coeff = affine_sum();
        if (!eat(')')) bail("expected ')'");
        have_coeff = true;
      } else if (peek() == 'k') {
        ++pos;
        if (peek() == '*' || peek() == 'x') {
          coeff = {0, 1};
          have_coeff = true;
        } else if (peek() == 'k') {
          bail("coefficient is quadratic in k");
        } else {
          bail("bare parameter term");
        }
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Int v = integer();
        skip();
        if (peek() == 'k' || (peek() == '*' && pos + 1 < s.size() && s[pos + 1] == 'k')) {
          if (peek() == '*') ++pos;
          ++pos; // consume k
          if (peek() == 'k' || (peek() == '*' && pos + 1 < s.size() && s[pos + 1] == 'k'))
            bail("coefficient is quadratic in k");
          coeff = {0, v};
          have_coeff = true;
        } else if (peek() == '*' || peek() == 'x') {
          coeff = {v, 0};
          have_coeff = true;
        } else {
          constant = {checked_add(constant.a0, v), constant.a1};
          continue;
        }
      }
      eat('*');
      skip();
      if (peek() != 'x') {
        if (have_coeff && coeff.a0 == 0 && coeff.a1 > 0) {
          // bare k-term constant, e.g. "x1 + k = x2"
          constant = {constant.a0, checked_add(constant.a1, coeff.a1)};
          continue;
        }
        bail("expected variable");
      }
      ++pos;
      Int slot = integer();
      if (slot < 1 || slot > 64) bail("variable index out of range");
      terms.push_back({coeff, static_cast<int>(slot)});
    } while (eat('+'));
  }
};

} // namespace

EquationFamily parse_family(std::string_view text) {
  Parser p{text};
  std::vector<FamilyTerm> lhs, rhs;
  AffineInt lconst{}, rconst{};
  p.side(lhs, lconst);
  if (!p.eat('=')) p.bail("expected '='");
  p.side(rhs, rconst);
  p.skip();
  if (p.pos != text.size()) p.bail("trailing input");
  if (rconst.a0 != 0 || rconst.a1 != 0) {
    lconst = {checked_add(lconst.a0, -rconst.a0), checked_add(lconst.a1, -rconst.a1)};
    if (lconst.a0 < 0 || lconst.a1 < 0)
      fail(errc::parse_error, "net constant term must sit on the left-hand side");
  }
  return EquationFamily::make(std::move(lhs), std::move(rhs), lconst);
}

LinearEquation parse_equation(std::string_view text) {
  EquationFamily f = parse_family(text);
  if (!f.parameter_free())
    fail(errc::parse_error, "equation text contains the family parameter k");
  return f.instantiate(1);
}

EquationFamily weighted_sum_family(int m, Int ell) {
  if (m < 3) fail(errc::invalid_argument, "weighted sum needs m >= 3");
  std::vector<FamilyTerm> lhs;
  for (int i = 1; i <= m - 2; ++i) lhs.push_back({{1, 0}, i});
  lhs.push_back({{0, 1}, m - 1});
  return EquationFamily::make(std::move(lhs), {{{ell, 0}, m}});
}

EquationFamily five_var_family(Int j) {
  if (j < 1) fail(errc::invalid_argument, "five-variable family needs j >= 1");
  std::vector<FamilyTerm> lhs = {{{1, 0}, 1}, {{1, 0}, 2}, {{1, 0}, 3}, {{0, 1}, 4}};
  return EquationFamily::make(std::move(lhs), {{{j, 1}, 5}});
}

EquationFamily unit_sum_family(int n, Int ell) {
  if (n < 2) fail(errc::invalid_argument, "unit sum needs n >= 2");
  std::vector<FamilyTerm> lhs;
  for (int i = 1; i <= n - 1; ++i) lhs.push_back({{1, 0}, i});
  return EquationFamily::make(std::move(lhs), {{{ell, 0}, n}});
}

} // namespace rado
