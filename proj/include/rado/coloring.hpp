#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rado/equation.hpp"

namespace rado {

// Colors of [1,n], entries in 0..r-1. For r=2 color 0 prints as 'r' (red)
// and color 1 as 'b'; digits otherwise.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int r, std::vector<std::uint8_t> colors);

  int r() const { return r_; }
  Int n() const { return static_cast<Int>(colors_.size()); }
  std::uint8_t color_of(Int t) const; // t in [1,n]
  const std::vector<std::uint8_t>& colors() const { return colors_; }

  std::string str() const;        // "rbbr" / "0110..."
  std::string run_length() const; // "1-3:r,4:b"

  // Accepts both the plain string and the run-length form.
  static Coloring parse(std::string_view text, int r = 2);

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int r_ = 2;
  std::vector<std::uint8_t> colors_;
};

// Certificate file: header line "n=<N> r=<r>" then the coloring on one line.
std::string certificate_text(const Coloring& c);
Coloring parse_certificate(std::string_view text);

// Color of t is pattern[(t-1) mod p]: a finite description of a coloring of
// all positive integers.
struct PeriodicPattern {
  int r = 2;
  std::vector<std::uint8_t> pattern; // length = period p >= 1

  Int period() const { return static_cast<Int>(pattern.size()); }
  std::uint8_t color_of(Int t) const { return pattern[static_cast<size_t>((t - 1) % period())]; }
};

// Odd integers one color, even the other.
PeriodicPattern parity_pattern();

bool is_monochromatic(const Coloring& coloring, std::span<const Int> tuple);

} // namespace rado
