#include "rado/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rado/errors.hpp"

namespace rado {
namespace {

char color_char(int r, std::uint8_t c) {
  if (r == 2) return c == 0 ? 'r' : 'b';
  return static_cast<char>('0' + c);
}

int color_value(int r, char ch) {
  int v = -1;
  if (ch == 'r') v = 0;
  else if (ch == 'b') v = 1;
  else if (ch >= '0' && ch <= '9') v = ch - '0';
  if (v < 0 || v >= r) fail(errc::parse_error, std::string("bad color character '") + ch + "'");
  return v;
}

Int parse_int(std::string_view s) {
  Int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    fail(errc::parse_error, "bad integer '" + std::string(s) + "'");
  return v;
}

} // namespace

Coloring::Coloring(int r, std::vector<std::uint8_t> colors) : r_(r), colors_(std::move(colors)) {
  if (r_ < 1) fail(errc::invalid_argument, "color count must be >= 1");
  for (auto c : colors_)
    if (c >= r_) fail(errc::invalid_argument, "color entry out of range");
}

std::uint8_t Coloring::color_of(Int t) const {
  if (t < 1 || t > n()) fail(errc::out_of_range, "integer " + std::to_string(t) + " outside [1," + std::to_string(n()) + "]");
  return colors_[static_cast<size_t>(t - 1)];
}

std::string Coloring::str() const {
  std::string out;
  out.reserve(colors_.size());
  for (auto c : colors_) out.push_back(color_char(r_, c));
  return out;
}

std::string Coloring::run_length() const {
  std::ostringstream out;
  Int i = 1;
  bool first = true;
  while (i <= n()) {
    Int j = i;
    while (j + 1 <= n() && colors_[static_cast<size_t>(j)] == colors_[static_cast<size_t>(i - 1)]) ++j;
    if (!first) out << ',';
    if (j > i) out << i << '-' << j;
    else out << i;
    out << ':' << color_char(r_, colors_[static_cast<size_t>(i - 1)]);
    first = false;
    i = j + 1;
  }
  return out.str();
}

Coloring Coloring::parse(std::string_view text, int r) {
  std::vector<std::uint8_t> colors;
  if (text.find(':') != std::string_view::npos) {
    size_t pos = 0;
    Int expect = 1;
    while (pos < text.size()) {
      size_t comma = text.find(',', pos);
      std::string_view seg = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      size_t colon = seg.find(':');
      if (colon == std::string_view::npos || colon + 2 != seg.size())
        fail(errc::parse_error, "bad run-length segment '" + std::string(seg) + "'");
      std::string_view range = seg.substr(0, colon);
      int c = color_value(r, seg[colon + 1]);
      Int a, b;
      size_t dash = range.find('-');
      if (dash == std::string_view::npos) {
        a = b = parse_int(range);
      } else {
        a = parse_int(range.substr(0, dash));
        b = parse_int(range.substr(dash + 1));
      }
      if (a != expect || b < a) fail(errc::parse_error, "run-length segments must cover [1,n] in order");
      for (Int t = a; t <= b; ++t) colors.push_back(static_cast<std::uint8_t>(c));
      expect = b + 1;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (ch == ' ' || ch == '\t') continue;
      colors.push_back(static_cast<std::uint8_t>(color_value(r, ch)));
    }
  }
  for (auto c : colors)
    if (c >= r) fail(errc::parse_error, "color entry out of range for r=" + std::to_string(r));
  return Coloring(r, std::move(colors));
}

std::string certificate_text(const Coloring& c) {
  std::ostringstream out;
  out << "n=" << c.n() << " r=" << c.r() << '\n' << c.str() << '\n';
  return out.str();
}

Coloring parse_certificate(std::string_view text) {
  size_t nl = text.find('\n');
  if (nl == std::string_view::npos) fail(errc::parse_error, "certificate needs a header line");
  std::string_view header = text.substr(0, nl);
  Int n = -1, r = -1;
  std::istringstream hs{std::string(header)};
  std::string tok;
  while (hs >> tok) {
    if (tok.rfind("n=", 0) == 0) n = parse_int(tok.substr(2));
    else if (tok.rfind("r=", 0) == 0) r = parse_int(tok.substr(2));
  }
  if (n < 0 || r < 1) fail(errc::parse_error, "certificate header must be 'n=<N> r=<r>'");
  std::string body;
  for (char ch : text.substr(nl + 1))
    if (ch != '\n' && ch != '\r' && ch != ' ') body.push_back(ch);
  Coloring c = body.empty() ? Coloring(static_cast<int>(r), {}) : Coloring::parse(body, static_cast<int>(r));
  if (c.n() != n) fail(errc::parse_error, "certificate length does not match header n");
  return c;
}

PeriodicPattern parity_pattern() { return PeriodicPattern{2, {0, 1}}; }

bool is_monochromatic(const Coloring& coloring, std::span<const Int> tuple) {
  if (tuple.empty()) return true;
  auto c = coloring.color_of(tuple[0]);
  for (Int v : tuple)
    if (coloring.color_of(v) != c) return false;
  return true;
}

} // namespace rado
