#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rado/coloring.hpp"
#include "rado/family.hpp"

namespace rado {

// Parameter values for which a fixed coloring stops being valid. When
// always_bad is set some monochromatic tuple solves the family identically
// in k and the finite part is irrelevant.
struct BadKSet {
  std::vector<Int> finite_bad; // sorted, distinct, all >= validity
  bool always_bad = false;
  Int validity = 1;

  bool contains(Int k) const;
  Int max_finite() const { return finite_bad.empty() ? 0 : finite_bad.back(); }
};

// Symbolic analysis: every tuple drawn from one color class reduces the
// family to A + B*k = 0 with A, B integers, contributing k = -A/B when that
// quotient is an admissible integer (and "all k" when A = B = 0).
BadKSet bad_parameter_set(const EquationFamily& family, const Coloring& coloring);

// All 2-colorings of [1,n] with 1 colored 0 that are valid for cofinitely
// many k, each with its exact bad set; lexicographic order.
std::vector<std::pair<Coloring, BadKSet>> colorings_valid_cofinitely(
    const EquationFamily& family, Int n, std::uint64_t limit = std::uint64_t{1} << 24);

// Least n <= n_cap at which no coloring stays valid for this k, derived from
// the bad sets alone; agrees with the search engine wherever both run.
Int rado_from_bad_sets(const EquationFamily& family, Int k, Int n_cap);

} // namespace rado
