#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rado/coloring.hpp"
#include "rado/equation.hpp"

namespace rado {

// One equation per color: color i must avoid monochromatic solutions of
// eqs[i]. The classical single-equation Rado number uses r equal entries.
struct ColorSystem {
  std::vector<LinearEquation> eqs;

  static ColorSystem uniform(LinearEquation eq, int r = 2);
  int r() const { return static_cast<int>(eqs.size()); }
  bool all_equal() const;
  std::string text() const; // equations joined by " ; "
};

ColorSystem parse_system(const std::string& text);

// Theorem-pair systems: {x+y=z, k*x=y} and {x+y=z, x+a=y}.
ColorSystem pair_sum_vs_multiple(Int k);
ColorSystem pair_sum_vs_shift(Int a);

struct SearchOptions {
  int threads = 0;      // 0 = all hardware threads, 1 = serial reference
  int split_depth = 0;  // 0 = auto; tree depth at which work is split
  // Soft wall-clock budget; zero means none. Exceeding it raises
  // errc::budget_exceeded.
  std::chrono::milliseconds budget{0};
  // Upper bound on cached solution-pattern values (Int count) before the
  // layer store refuses to grow (errc::enumeration_limit_exceeded).
  std::size_t cache_budget = std::size_t{1} << 27;
};

// Found: value is the Rado number, certificate a valid coloring of
// [1,value-1]. Unresolved: every coloring of [1,n_max] was not exhausted --
// a valid coloring of [1,n_max] exists and is retained, so the Rado number
// exceeds n_max.
struct RadoResult {
  bool found = false;
  Int value = 0; // found: the Rado number; otherwise the searched bound n_max
  Coloring certificate;

  Int searched_up_to() const { return value; }
};

RadoResult rado_number(const ColorSystem& sys, Int n_max, const SearchOptions& opts = {});
RadoResult rado_number_serial(const ColorSystem& sys, Int n_max, const SearchOptions& opts = {});
#ifdef _OPENMP
RadoResult rado_number_parallel(const ColorSystem& sys, Int n_max, const SearchOptions& opts = {});
#endif

std::optional<Coloring> find_valid_coloring(const ColorSystem& sys, Int n,
                                            const SearchOptions& opts = {});

// Path-independent re-check: re-derives the solution sets from scratch.
bool verify_certificate(const ColorSystem& sys, const Coloring& coloring);

// Sound (not complete) residue-class certificate that the Rado number is
// infinite: true when no color class can satisfy its equation modulo the
// period.
bool verify_periodic_certificate(const ColorSystem& sys, const PeriodicPattern& pattern);

std::vector<Coloring> enumerate_valid_colorings(const ColorSystem& sys, Int n,
                                                bool fix_first_color,
                                                std::uint64_t limit = std::uint64_t{1} << 24);

// DIMACS CNF whose satisfying assignments are exactly the valid 2-colorings
// of [1,n]: variable t true <=> t gets color 1; one clause per
// monochromatic-solution pattern per color.
std::string export_cnf(const ColorSystem& sys, Int n);

} // namespace rado
