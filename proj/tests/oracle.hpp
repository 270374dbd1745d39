#pragma once

// Test-only oracles, independent of the engine's search path: exhaustive
// scans over all r^n colorings using solution bitmasks, plus a brute-force
// DIMACS satisfiability check. Usable up to n ~ 20.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rado/enumerate.hpp"
#include "rado/search.hpp"

namespace rado::testing {

// Bitmasks (bit v-1 = value v) of the distinct solution value sets in [1,n].
inline std::vector<std::uint32_t> solution_masks(const LinearEquation& eq, Int n) {
  std::vector<std::uint32_t> masks;
  for (Int t = 1; t <= n; ++t)
    for (const auto& set : solution_value_sets_at(eq, t)) {
      std::uint32_t m = 0;
      for (Int v : set) m |= std::uint32_t{1} << (v - 1);
      masks.push_back(m);
    }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

inline bool coloring_valid(const std::vector<std::vector<std::uint32_t>>& masks_per_color,
                           std::uint32_t blue_mask, Int n) {
  std::uint32_t full = n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  std::uint32_t red_mask = full & ~blue_mask;
  for (std::uint32_t m : masks_per_color[0])
    if ((m & red_mask) == m) return false;
  for (std::uint32_t m : masks_per_color[1])
    if ((m & blue_mask) == m) return false;
  return true;
}

// Least n in [1, n_cap] such that no valid 2-coloring of [1,n] exists, by
// scanning all 2^n colorings; nullopt when a valid coloring of [1,n_cap]
// survives.
inline std::optional<Int> exhaustive_rado(const ColorSystem& sys, Int n_cap) {
  for (Int n = 1; n <= n_cap; ++n) {
    std::vector<std::vector<std::uint32_t>> masks = {solution_masks(sys.eqs[0], n),
                                                     solution_masks(sys.eqs[1], n)};
    bool any_valid = false;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n) && !any_valid; ++bits)
      any_valid = coloring_valid(masks, static_cast<std::uint32_t>(bits), n);
    if (!any_valid) return n;
  }
  return std::nullopt;
}

// Brute-force satisfiability of a DIMACS text (n <= 20).
inline bool dimacs_satisfiable(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Int nvars = 0;
  std::vector<std::vector<Int>> clauses;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, cnf;
      Int nc;
      hs >> p >> cnf >> nvars >> nc;
      continue;
    }
    std::istringstream ls(line);
    std::vector<Int> clause;
    Int lit;
    while (ls >> lit && lit != 0) clause.push_back(lit);
    if (!clause.empty()) clauses.push_back(std::move(clause));
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nvars); ++bits) {
    bool ok = true;
    for (const auto& clause : clauses) {
      bool sat = false;
      for (Int lit : clause) {
        Int v = lit > 0 ? lit : -lit;
        bool val = (bits >> (v - 1)) & 1;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

} // namespace rado::testing
