#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "svol/errors.hpp"
#include "svol/exact.hpp"
#include "svol/seifert.hpp"

namespace svol {

/// Integer data (n_1..n_p, n) of a representation with non-zero volume into
/// Iso_e(SL2~), together with the derived central translation data.
struct VolumeWitness {
  std::vector<Integer> n_values;
  Integer n;
  Rational zeta;
  std::vector<Rational> z_values;
  Rational coeff;  // volume = coeff * 4*pi^2

  std::string to_string() const {
    std::string s = "n=(";
    for (std::size_t i = 0; i < n_values.size(); ++i) s += (i ? "," : "") + n_values[i].str();
    s += ") n=" + n.str() + " zeta=" + zeta.to_string() + " z=(";
    for (std::size_t i = 0; i < z_values.size(); ++i) s += (i ? "," : "") + z_values[i].to_string();
    return s + ")";
  }
};

/// Horizontal (PSL2R, S^1) foliation criterion on a Seifert manifold with
/// base genus g >= 1 and slopes b_i/a_i.
inline bool foliation_exists(const Integer& genus, const std::vector<Rational>& slopes) {
  if (genus < 1) throw DomainError("precondition", "foliation criterion requires base genus > 0");
  Integer floors = 0;
  Integer ceils = 0;
  for (const auto& q : slopes) {
    floors += rat_floor(q);
    ceils += rat_ceil(q);
  }
  return floors <= 2 * genus - 2 && ceils >= 2 - 2 * genus;
}

inline bool foliation_exists(const SeifertInvariants& inv) {
  std::vector<Rational> slopes;
  for (const auto& p : inv.pairs()) slopes.push_back(p.slope());
  return foliation_exists(inv.genus(), slopes);
}

/// True iff the integers satisfy
///   sum floor(n_i/a_i) - n <= 2g-2  and  sum ceil(n_i/a_i) - n >= 2-2g.
inline bool volume_constraints_hold(const SeifertInvariants& inv, const std::vector<Integer>& n_values, const Integer& n) {
  Integer floors = -n;
  Integer ceils = -n;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    Rational q(n_values[i], inv.pairs()[i].a);
    floors += rat_floor(q);
    ceils += rat_ceil(q);
  }
  return floors <= 2 * inv.genus() - 2 && ceils >= 2 - 2 * inv.genus();
}

/// coeff = (sum n_i/a_i - n)^2 / |e|
inline Rational volume_coefficient(const SeifertInvariants& inv, const std::vector<Integer>& n_values, const Integer& n) {
  Rational s = -Rational(n);
  for (std::size_t i = 0; i < n_values.size(); ++i) s += Rational(n_values[i], inv.pairs()[i].a);
  return s * s / euler_number(inv).abs();
}

namespace detail {

inline void require_volume_preconditions(const SeifertInvariants& inv) {
  inv.require_closed("volume_set");
  if (inv.genus() < 1) throw DomainError("precondition", "volume set is only described for base genus g >= 1");
  if (classify_geometry(inv) != GeometryTag::SL2R_tilde)
    throw DomainError("precondition", "manifold " + to_string(inv) + " does not carry SL2R~ geometry (need e != 0 and chi < 0)");
}

inline constexpr std::uint64_t kEnumerationLimit = 50'000'000;

/// Visits every canonical tuple: residues 0 <= r_i < a_i and
///   2-2g <= m <= 2g-2 + #{i : r_i > 0}.
/// Every integer solution is a translate (n_i + a_i k_i, n + sum k_i) of
/// exactly one canonical tuple, with the same volume.
inline void for_each_canonical(const SeifertInvariants& inv,
                               const std::function<void(const std::vector<Integer>&, const Integer&)>& visit) {
  const auto& pairs = inv.pairs();
  std::vector<std::int64_t> a;
  std::uint64_t tuples = 1;
  for (const auto& p : pairs) {
    if (p.a > 1'000'000) throw DomainError("precondition", "fiber index too large to enumerate");
    a.push_back(p.a.convert_to<std::int64_t>());
    tuples *= static_cast<std::uint64_t>(a.back());
    if (tuples > kEnumerationLimit) throw DomainError("precondition", "enumeration too large");
  }
  const Integer m_low = 2 - 2 * inv.genus();
  std::vector<Integer> residues(pairs.size(), 0);
  std::vector<std::int64_t> r(pairs.size(), 0);
  for (;;) {
    std::int64_t nonzero = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      residues[i] = r[i];
      if (r[i] > 0) ++nonzero;
    }
    const Integer m_high = 2 * inv.genus() - 2 + nonzero;
    for (Integer m = m_low; m <= m_high; ++m) visit(residues, m);
    std::size_t i = 0;
    for (; i < r.size(); ++i) {
      if (++r[i] < a[i]) break;
      r[i] = 0;
    }
    if (i == r.size()) break;
  }
}

}  // namespace detail

/// The finite set of Seifert volumes of the closed SL2R~ manifold, as
/// ascending coefficients of 4*pi^2.
inline std::vector<Rational> volume_set(const SeifertInvariants& inv) {
  detail::require_volume_preconditions(inv);
  std::set<Rational> values;
  detail::for_each_canonical(inv, [&](const std::vector<Integer>& r, const Integer& m) {
    values.insert(volume_coefficient(inv, r, m));
  });
  return {values.begin(), values.end()};
}

struct SeifertVolumeMax {
  Rational enumerated;   // max of volume_set
  Rational closed_form;  // chi^2 / |e|
};

inline SeifertVolumeMax seifert_volume_max(const SeifertInvariants& inv) {
  auto values = volume_set(inv);
  Rational chi = orbifold_chi(inv);
  SeifertVolumeMax result{values.back(), chi * chi / euler_number(inv).abs()};
  if (result.enumerated != result.closed_form)
    throw InternalError("enumerated maximum " + result.enumerated.to_string() + " differs from chi^2/|e| = " +
                        result.closed_form.to_string() + " for " + to_string(inv));
  return result;
}

inline VolumeWitness make_witness(const SeifertInvariants& inv, const std::vector<Integer>& n_values, const Integer& n) {
  VolumeWitness w;
  w.n_values = n_values;
  w.n = n;
  Rational s = -Rational(n);
  for (std::size_t i = 0; i < n_values.size(); ++i) s += Rational(n_values[i], inv.pairs()[i].a);
  Rational e = euler_number(inv);
  w.zeta = s / e;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    const auto& p = inv.pairs()[i];
    w.z_values.push_back(Rational(n_values[i], p.a) - p.slope() * w.zeta);
  }
  w.coeff = s * s / e.abs();
  return w;
}

/// All canonical witnesses realizing `coeff`, in enumeration order
/// (residues lexicographic from the first pair, then m ascending).
inline std::vector<VolumeWitness> witnesses_for(const SeifertInvariants& inv, const Rational& coeff) {
  detail::require_volume_preconditions(inv);
  std::vector<VolumeWitness> out;
  detail::for_each_canonical(inv, [&](const std::vector<Integer>& r, const Integer& m) {
    if (volume_coefficient(inv, r, m) != coeff) return;
    VolumeWitness w = make_witness(inv, r, m);
    if (!volume_constraints_hold(inv, w.n_values, w.n) || w.coeff != coeff)
      throw InternalError("canonical witness fails the volume constraints");
    out.push_back(std::move(w));
  });
  if (out.empty())
    throw DomainError("not-attained", "coefficient " + coeff.to_string() + " is not in the volume set of " + to_string(inv));
  return out;
}

}  // namespace svol
