#include "rado/param_analysis.hpp"

#include <algorithm>

#include "rado/errors.hpp"

namespace rado {

bool BadKSet::contains(Int k) const {
  if (k < validity) fail(errc::parameter_below_validity, "k below the family's validity");
  if (always_bad) return true;
  return std::binary_search(finite_bad.begin(), finite_bad.end(), k);
}

namespace {

// Enumerates assignments of class values to the slots, canonical within
// groups of equal affine coefficient, accumulating the constant and k parts.
struct TupleScan {
  const std::vector<Int>& cls;
  std::vector<AffineInt> coeff; // per position, group-ordered
  std::vector<int> chain;
  Int validity;
  bool always_bad = false;
  std::vector<Int>& bad;
  std::vector<Int> chosen;

  TupleScan(const EquationFamily& fam, const std::vector<Int>& values, std::vector<Int>& out)
      : cls(values), validity(fam.validity()), bad(out) {
    struct G {
      AffineInt c;
      int count;
    };
    std::vector<G> groups;
    for (const auto& c : fam.signed_coeffs()) {
      auto it = std::find_if(groups.begin(), groups.end(), [&](const G& g) { return g.c == c; });
      if (it == groups.end()) groups.push_back({c, 1});
      else ++it->count;
    }
    for (const auto& g : groups)
      for (int e = 0; e < g.count; ++e) {
        coeff.push_back(g.c);
        chain.push_back(e == 0 ? -1 : static_cast<int>(coeff.size()) - 2);
      }
    chosen.assign(coeff.size(), 0);
  }

  void run(AffineInt shift) { rec(0, shift.a0, shift.a1); }

  void rec(size_t i, Int a, Int b) {
    if (always_bad) return;
    if (i == coeff.size()) {
      if (b == 0) {
        if (a == 0) always_bad = true;
        return;
      }
      if (a % b != 0) return;
      Int k = -a / b;
      if (k >= validity) bad.push_back(k);
      return;
    }
    size_t from = 0;
    if (chain[i] >= 0) {
      Int prev = chosen[static_cast<size_t>(chain[i])];
      from = static_cast<size_t>(std::lower_bound(cls.begin(), cls.end(), prev) - cls.begin());
    }
    for (size_t v = from; v < cls.size(); ++v) {
      chosen[i] = cls[v];
      rec(i + 1, a + coeff[i].a0 * cls[v], b + coeff[i].a1 * cls[v]);
    }
  }
};

} // namespace

BadKSet bad_parameter_set(const EquationFamily& family, const Coloring& coloring) {
  BadKSet out;
  out.validity = family.validity();
  for (int c = 0; c < coloring.r() && !out.always_bad; ++c) {
    std::vector<Int> cls;
    for (Int v = 1; v <= coloring.n(); ++v)
      if (coloring.color_of(v) == c) cls.push_back(v);
    if (cls.empty()) continue;
    TupleScan scan(family, cls, out.finite_bad);
    scan.run(family.shift());
    if (scan.always_bad) out.always_bad = true;
  }
  if (out.always_bad) {
    out.finite_bad.clear();
    return out;
  }
  std::sort(out.finite_bad.begin(), out.finite_bad.end());
  out.finite_bad.erase(std::unique(out.finite_bad.begin(), out.finite_bad.end()), out.finite_bad.end());
  return out;
}

std::vector<std::pair<Coloring, BadKSet>> colorings_valid_cofinitely(const EquationFamily& family,
                                                                     Int n, std::uint64_t limit) {
  if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
  if (n > 63 || (std::uint64_t{1} << (n - 1)) > limit)
    fail(errc::enumeration_limit_exceeded, "2^(n-1) colorings exceed the enumeration limit");
  std::vector<std::pair<Coloring, BadKSet>> out;
  std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint8_t> colors(static_cast<size_t>(n), 0);
    for (Int t = 2; t <= n; ++t)
      colors[static_cast<size_t>(t - 1)] =
          static_cast<std::uint8_t>((idx >> (n - t)) & 1u); // integer 2 is the most significant bit
    Coloring coloring(2, std::move(colors));
    BadKSet bad = bad_parameter_set(family, coloring);
    if (!bad.always_bad) out.emplace_back(std::move(coloring), std::move(bad));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.str() < b.first.str(); });
  return out;
}

Int rado_from_bad_sets(const EquationFamily& family, Int k, Int n_cap) {
  if (k < family.validity()) fail(errc::parameter_below_validity, "k below the family's validity");
  if (n_cap < 1) fail(errc::invalid_argument, "n_cap must be >= 1");
  for (Int n = 1; n <= n_cap; ++n) {
    auto colorings = colorings_valid_cofinitely(family, n);
    bool any_valid = false;
    for (const auto& [coloring, bad] : colorings) {
      if (!bad.contains(k)) {
        any_valid = true;
        break;
      }
    }
    if (!any_valid) return n;
  }
  fail(errc::cap_exceeded, "a valid coloring survives up to the cap n=" + std::to_string(n_cap));
}

} // namespace rado
