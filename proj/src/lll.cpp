#include "rado/lll.hpp"

#include <cmath>
#include <numeric>

#include "rado/errors.hpp"

namespace rado {

Rational Rational::of(Int n, Int d) {
  if (d == 0) fail(errc::domain_error, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational{n, d};
}

Rational Rational::operator+(const Rational& o) const {
  return of(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)), checked_mul(den, o.den));
}

Rational Rational::operator*(const Rational& o) const {
  return of(checked_mul(num, o.num), checked_mul(den, o.den));
}

void EventSystem::validate() const {
  size_t n = probabilities.size();
  if (weights.size() != n) fail(errc::invalid_argument, "probabilities and weights differ in length");
  for (double p : probabilities)
    if (!(p > 0.0 && p < 1.0)) fail(errc::invalid_argument, "probabilities must lie strictly in (0,1)");
  for (double y : weights)
    if (!(y > 0.0)) fail(errc::invalid_argument, "weights must be positive");
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= static_cast<int>(n) || j >= static_cast<int>(n))
      fail(errc::invalid_argument, "edge endpoint out of range");
    if (i == j) fail(errc::invalid_argument, "dependence graph must be irreflexive");
  }
}

namespace {

constexpr double kRelTol = 1e-12;

LllCheckResult evaluate(const std::vector<double>& p, const std::vector<double>& y,
                        const std::vector<std::pair<int, int>>& edges) {
  size_t n = p.size();
  std::vector<double> rhs(n, 0.0);
  for (size_t i = 0; i < n; ++i) rhs[i] = y[i] * p[i];
  for (auto [i, j] : edges) {
    rhs[static_cast<size_t>(i)] += y[static_cast<size_t>(j)] * p[static_cast<size_t>(j)];
    rhs[static_cast<size_t>(j)] += y[static_cast<size_t>(i)] * p[static_cast<size_t>(i)];
  }
  LllCheckResult res;
  res.holds = true;
  res.margins.resize(n);
  for (size_t i = 0; i < n; ++i) {
    double lhs = std::log(y[i]);
    double margin = lhs - rhs[i];
    res.margins[i] = margin;
    double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs[i])});
    if (!(margin > kRelTol * scale)) res.holds = false;
  }
  return res;
}

} // namespace

LllCheckResult check_lll_condition(const EventSystem& sys) {
  sys.validate();
  return evaluate(sys.probabilities, sys.weights, sys.edges);
}

LllCheckResult check_lll_condition_exact(const std::vector<Rational>& probabilities,
                                         const std::vector<Rational>& weights,
                                         const std::vector<std::pair<int, int>>& edges) {
  size_t n = probabilities.size();
  if (weights.size() != n) fail(errc::invalid_argument, "probabilities and weights differ in length");
  std::vector<Rational> rhs(n, Rational{0, 1});
  for (size_t i = 0; i < n; ++i) rhs[i] = weights[i] * probabilities[i];
  for (auto [i, j] : edges) {
    if (i == j) fail(errc::invalid_argument, "dependence graph must be irreflexive");
    rhs[static_cast<size_t>(i)] = rhs[static_cast<size_t>(i)] + weights[static_cast<size_t>(j)] * probabilities[static_cast<size_t>(j)];
    rhs[static_cast<size_t>(j)] = rhs[static_cast<size_t>(j)] + weights[static_cast<size_t>(i)] * probabilities[static_cast<size_t>(i)];
  }
  LllCheckResult res;
  res.holds = true;
  res.margins.resize(n);
  for (size_t i = 0; i < n; ++i) {
    long double lhs = logl(static_cast<long double>(weights[i].num)) -
                      logl(static_cast<long double>(weights[i].den));
    long double r = static_cast<long double>(rhs[i].num) / static_cast<long double>(rhs[i].den);
    long double margin = lhs - r;
    res.margins[i] = static_cast<double>(margin);
    long double scale = std::max<long double>({1.0L, fabsl(lhs), fabsl(r)});
    if (!(margin > 1e-17L * scale)) res.holds = false;
  }
  return res;
}

CountBounds solution_count_bound(Int m, Int n) {
  if (m < 3) fail(errc::arity_too_small, "counting bounds need m >= 3");
  if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
  Int pow = checked_pow(n, m - 2);
  return CountBounds{checked_mul(m, pow), checked_mul(checked_mul(m, m), pow)};
}

PairCountBounds pair_count_bound(Int m_i, Int m_j, Int n) {
  if (m_i < 3 || m_j < 3) fail(errc::arity_too_small, "counting bounds need m >= 3");
  if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
  Int prod = checked_mul(m_i, m_j);
  return PairCountBounds{checked_mul(prod, checked_pow(n, m_j - 2)),
                         checked_mul(prod, checked_pow(n, m_i - 2))};
}

LowerBoundResult lll_lower_bound(double m_r, Int r, double c2, std::optional<double> c1,
                                 std::optional<double> c3, std::optional<double> m1) {
  if (r < 2) fail(errc::invalid_argument, "needs r >= 2");
  if (!(c2 > 0)) fail(errc::invalid_argument, "c2 must be positive");
  double x = m_r * static_cast<double>(r - 1);
  if (!(x > c2)) fail(errc::domain_error, "m_r(r-1) must exceed c2 so the logarithm is positive");
  LowerBoundResult out;
  out.value = x / (c2 * (std::log(x) - std::log(c2)));
  if (c1 && c3 && m1) {
    out.hypotheses.push_back({"c3 - c1^{m1} c2 > 0", *c3 - std::pow(*c1, *m1) * c2 > 0});
    out.hypotheses.push_back({"c3 - c1 c2 + m_r < 0", *c3 - *c1 * c2 + m_r < 0});
  }
  return out;
}

} // namespace rado
