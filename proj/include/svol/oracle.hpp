#pragma once

// Brute-force reference computations. These deliberately avoid the residue
// reduction used in ehn.hpp and evaluate the defining constraints directly
// on every integer point of a box.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "svol/errors.hpp"
#include "svol/exact.hpp"
#include "svol/seifert.hpp"

namespace svol::oracle {

/// B = 2 + 2g + sum a_i.
inline Integer default_window(const SeifertInvariants& inv) {
  Integer b = 2 + 2 * inv.genus();
  for (const auto& p : inv.pairs()) b += p.a;
  return b;
}

namespace detail {

inline std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if (x % y != 0 && x < 0) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t x, std::int64_t y) { return -floor_div(-x, y); }

}  // namespace detail

/// Every (sum n_i/a_i - n)^2/|e| with (n_1..n_p, n) in [-B, B]^{p+1}
/// satisfying the floor/ceiling constraints.
inline std::vector<Rational> brute_force_volume_set(const SeifertInvariants& inv, const Integer& window) {
  const auto& pairs = inv.pairs();
  if (window > 100'000 || inv.genus() > 1'000'000) throw DomainError("precondition", "oracle window too large");
  std::vector<std::int64_t> a;
  std::int64_t lcm_a = 1;
  for (const auto& p : pairs) {
    if (p.a > 1000) throw DomainError("precondition", "oracle supports fiber indices up to 1000");
    a.push_back(p.a.convert_to<std::int64_t>());
    lcm_a = std::lcm(lcm_a, a.back());
    if (lcm_a > 1'000'000'000) throw DomainError("precondition", "oracle denominator too large");
  }
  const std::int64_t b = window.convert_to<std::int64_t>();
  const std::int64_t g = inv.genus().convert_to<std::int64_t>();

  // Distinct |L * (sum n_i/a_i - n)| with L = lcm(a_i).
  std::set<std::int64_t> scaled;
  std::vector<std::int64_t> n(pairs.size() + 1, -b);
  for (;;) {
    std::int64_t floors = -n.back();
    std::int64_t ceils = -n.back();
    std::int64_t s = -n.back() * lcm_a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      floors += detail::floor_div(n[i], a[i]);
      ceils += detail::ceil_div(n[i], a[i]);
      s += n[i] * (lcm_a / a[i]);
    }
    if (floors <= 2 * g - 2 && ceils >= 2 - 2 * g) scaled.insert(std::llabs(s));

    std::size_t k = 0;
    for (; k < n.size(); ++k) {
      if (++n[k] <= b) break;
      n[k] = -b;
    }
    if (k == n.size()) break;
  }

  Rational e(0);
  for (const auto& p : pairs) e += Rational(p.b, p.a);
  std::vector<Rational> out;
  for (std::int64_t s : scaled) {
    Rational q{Integer(s), Integer(lcm_a)};
    out.push_back(q * q / e.abs());
  }
  return out;  // ascending because |s| ascending
}

}  // namespace svol::oracle
