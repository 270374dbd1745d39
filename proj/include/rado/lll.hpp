#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rado/arith.hpp"
#include "rado/closed_forms.hpp"

namespace rado {

// Exact rational with canonical sign/gcd normalization; used by the exact
// accumulation mode of the local-lemma check.
struct Rational {
  Int num = 0;
  Int den = 1;

  static Rational of(Int n, Int d = 1);
  Rational operator+(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct EventSystem {
  std::vector<double> probabilities;          // strictly inside (0,1)
  std::vector<double> weights;                // y_i > 0
  std::vector<std::pair<int, int>> edges;     // symmetric irreflexive dependence graph

  void validate() const;
};

struct LllCheckResult {
  bool holds = false;
  std::vector<double> margins; // ln(y_i) - rhs_i per event
};

// ln y_i > sum_{j ~ i} y_j p_j + y_i p_i for every i, strict at a relative
// tolerance of 1e-12.
LllCheckResult check_lll_condition(const EventSystem& sys);

// Same condition with the right-hand side accumulated in exact rationals;
// only the single logarithm comparison is floating (long double).
LllCheckResult check_lll_condition_exact(const std::vector<Rational>& probabilities,
                                         const std::vector<Rational>& weights,
                                         const std::vector<std::pair<int, int>>& edges);

struct CountBounds {
  Int through_element; // m * n^(m-2): solutions through a fixed element
  Int self_pairs;      // m^2 * n^(m-2)
};

// Counting bounds for an equation with m >= 3 variables over [1,n].
CountBounds solution_count_bound(Int m, Int n);

struct PairCountBounds {
  Int i_to_j; // m_i * m_j * n^(m_j - 2)
  Int j_to_i; // m_i * m_j * n^(m_i - 2)
};

PairCountBounds pair_count_bound(Int m_i, Int m_j, Int n);

struct LowerBoundResult {
  double value = 0;
  std::vector<HypothesisCheck> hypotheses;
};

// m_r(r-1) / (c2 (ln(m_r(r-1)) - ln c2)). The auxiliary constants are
// recorded inputs only: their sign constraints are checked when supplied,
// never derived.
LowerBoundResult lll_lower_bound(double m_r, Int r, double c2,
                                 std::optional<double> c1 = std::nullopt,
                                 std::optional<double> c3 = std::nullopt,
                                 std::optional<double> m1 = std::nullopt);

} // namespace rado
