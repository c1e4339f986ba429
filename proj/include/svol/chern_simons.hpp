#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "svol/errors.hpp"
#include "svol/exact.hpp"
#include "svol/exterior.hpp"
#include "svol/lie_algebra.hpp"
#include "svol/linalg.hpp"

namespace svol {

/// d(theta^i) = -1/2 sum_{j,k} c^i_jk theta^j ^ theta^k
///            = -sum_{j<k} c^i_jk theta^j ^ theta^k.
inline ExteriorForm mc_differential(const LieAlgebra& alg, std::size_t i) {
  if (i >= alg.dimension()) throw DomainError("precondition", "basis index out of range");
  ExteriorForm out(2);
  for (std::size_t j = 0; j < alg.dimension(); ++j)
    for (std::size_t k = j + 1; k < alg.dimension(); ++k)
      out.add_term({j, k}, PiScalar(-alg.structure(i, j, k)));
  return out;
}

/// Exterior derivative of a left-invariant form: the graded derivation
/// extending mc_differential.
inline ExteriorForm d(const LieAlgebra& alg, const ExteriorForm& form) {
  std::vector<ExteriorForm> d1;
  for (std::size_t i = 0; i < alg.dimension(); ++i) d1.push_back(mc_differential(alg, i));
  ExteriorForm out(form.degree() + 1);
  for (const auto& [mono, coeff] : form.terms()) {
    for (std::size_t r = 0; r < mono.size(); ++r) {
      ExteriorForm term = ExteriorForm::constant(r % 2 == 0 ? coeff : -coeff);
      for (std::size_t s = 0; s < mono.size(); ++s) term = term.wedge(s == r ? d1[mono[s]] : ExteriorForm::basis(mono[s]));
      out += term;
    }
  }
  return out;
}

/// A Lie-algebra-valued form sum_i alpha_i (x) X_i.
struct ValuedForm {
  std::vector<ExteriorForm> components;

  std::size_t degree() const { return components.empty() ? 0 : components.front().degree(); }
  friend bool operator==(const ValuedForm&, const ValuedForm&) = default;
};

/// omega = sum_i theta^i (x) X_i.
inline ValuedForm maurer_cartan_form(const LieAlgebra& alg) {
  ValuedForm w;
  for (std::size_t i = 0; i < alg.dimension(); ++i) w.components.push_back(ExteriorForm::basis(i));
  return w;
}

inline ValuedForm d(const LieAlgebra& alg, const ValuedForm& w) {
  ValuedForm out;
  for (const auto& c : w.components) out.components.push_back(d(alg, c));
  return out;
}

inline ValuedForm scaled(const ValuedForm& w, const PiScalar& c) {
  ValuedForm out;
  for (const auto& f : w.components) out.components.push_back(f.scaled(c));
  return out;
}

/// [alpha, beta] = sum_{a,b} alpha_a ^ beta_b (x) [X_a, X_b].
inline ValuedForm bracket_wedge(const LieAlgebra& alg, const ValuedForm& alpha, const ValuedForm& beta) {
  const std::size_t n = alg.dimension();
  ValuedForm out;
  out.components.assign(n, ExteriorForm(alpha.degree() + beta.degree()));
  for (std::size_t a = 0; a < n; ++a) {
    if (alpha.components[a].is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (beta.components[b].is_zero()) continue;
      ExteriorForm product = alpha.components[a].wedge(beta.components[b]);
      for (std::size_t i = 0; i < n; ++i)
        if (!alg.structure(i, a, b).is_zero()) out.components[i] += product.scaled(PiScalar(alg.structure(i, a, b)));
    }
  }
  return out;
}

/// f(alpha ^ beta) = sum_{a,b} f(X_a, X_b) alpha_a ^ beta_b.
inline ExteriorForm pair_wedge(const GramForm& f, const ValuedForm& alpha, const ValuedForm& beta) {
  ExteriorForm out(alpha.degree() + beta.degree());
  for (std::size_t a = 0; a < alpha.components.size(); ++a)
    for (std::size_t b = 0; b < beta.components.size(); ++b)
      if (!f(a, b).is_zero()) out += alpha.components[a].wedge(beta.components[b]).scaled(f(a, b));
  return out;
}

/// Chern-Simons 3-form of the Maurer-Cartan connection,
///   Tf(omega) = f(d omega ^ omega) + 1/3 f(omega ^ [omega, omega]).
/// Because d omega = -1/2 [omega, omega] this equals
/// -1/6 f(omega ^ [omega, omega]); both routes are evaluated and must agree.
inline ExteriorForm cs_three_form(const LieAlgebra& alg, const GramForm& f) {
  if (alg.dimension() < 3) throw DomainError("precondition", "Chern-Simons 3-form needs dimension >= 3");
  if (f.dimension() != alg.dimension()) throw DomainError("precondition", "Gram form dimension does not match the algebra");
  ValuedForm omega = maurer_cartan_form(alg);
  ValuedForm d_omega = d(alg, omega);
  ValuedForm omega_omega = bracket_wedge(alg, omega, omega);
  if (d_omega != scaled(omega_omega, PiScalar(Rational(-1, 2)))) throw InternalError("Maurer-Cartan equation fails");

  ExteriorForm full = pair_wedge(f, d_omega, omega) + pair_wedge(f, omega, omega_omega).scaled(PiScalar(Rational(1, 3)));
  ExteriorForm reduced = pair_wedge(f, omega, omega_omega).scaled(PiScalar(Rational(-1, 6)));
  if (full != reduced) throw InternalError("the two Chern-Simons expressions disagree");
  return full;
}

namespace detail {

inline std::vector<Monomial> increasing_monomials(std::size_t n, std::size_t k) {
  std::vector<Monomial> out;
  Monomial m(k);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == k) {
      out.push_back(m);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      m[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Matrix of d between two spaces of forms, in increasing-monomial bases.
inline linalg::Matrix d_matrix(const LieAlgebra& alg, const std::vector<Monomial>& domain,
                               const std::vector<Monomial>& codomain) {
  linalg::Matrix m(codomain.size(), linalg::Vector(domain.size()));
  for (std::size_t col = 0; col < domain.size(); ++col) {
    ExteriorForm image = d(alg, ExteriorForm::monomial(domain[col]));
    for (std::size_t row = 0; row < codomain.size(); ++row) {
      PiScalar c = image.coefficient(codomain[row]);
      m[row][col] = c.coefficient();
    }
  }
  return m;
}

/// Splits the coefficients of a form by power of pi.
inline std::map<int, linalg::Vector> by_pi_power(const ExteriorForm& f, const std::vector<Monomial>& basis) {
  std::map<int, linalg::Vector> out;
  for (std::size_t row = 0; row < basis.size(); ++row) {
    PiScalar c = f.coefficient(basis[row]);
    if (c.is_zero()) continue;
    auto [it, _] = out.try_emplace(c.pi_power(), linalg::Vector(basis.size()));
    it->second[row] = c.coefficient();
  }
  return out;
}

}  // namespace detail

/// Finds an invariant 2-form beta with d(beta) = form - target, or nullopt
/// when the difference is not exact. Each power of pi is solved separately;
/// free variables of the linear system are set to zero.
inline std::optional<ExteriorForm> exactness_split(const LieAlgebra& alg, const ExteriorForm& form, const ExteriorForm& target) {
  if (form.degree() != 3 || target.degree() != 3) throw DomainError("precondition", "exactness_split expects 3-forms");
  const std::size_t n = alg.dimension();
  auto lambda2 = detail::increasing_monomials(n, 2);
  auto lambda3 = detail::increasing_monomials(n, 3);
  linalg::Matrix dm = detail::d_matrix(alg, lambda2, lambda3);
  ExteriorForm diff = form - target;

  ExteriorForm beta(2);
  for (const auto& [power, rhs] : detail::by_pi_power(diff, lambda3)) {
    auto x = linalg::solve(dm, rhs);
    if (!x) return std::nullopt;
    for (std::size_t col = 0; col < lambda2.size(); ++col) beta.add_term(lambda2[col], PiScalar((*x)[col], power));
  }
  if (d(alg, beta) != diff) throw InternalError("exactness_split produced a primitive that does not verify");
  return beta;
}

/// form = c * volume + d(beta): the coefficient c and a primitive beta.
struct VolumeDecomposition {
  PiScalar coefficient;
  ExteriorForm primitive{2};
};

/// Writes a 3-form as a multiple of `volume` plus an exact form, or nullopt
/// if no such decomposition exists. The coefficient is unique whenever
/// `volume` is not itself exact.
inline std::optional<VolumeDecomposition> decompose_against(const LieAlgebra& alg, const ExteriorForm& form,
                                                            const ExteriorForm& volume) {
  const std::size_t n = alg.dimension();
  auto lambda2 = detail::increasing_monomials(n, 2);
  auto lambda3 = detail::increasing_monomials(n, 3);
  linalg::Matrix dm = detail::d_matrix(alg, lambda2, lambda3);
  // The volume column goes first so it is preferred as a pivot.
  linalg::Matrix m(lambda3.size(), linalg::Vector(lambda2.size() + 1));
  for (std::size_t row = 0; row < lambda3.size(); ++row) {
    m[row][0] = volume.coefficient(lambda3[row]).coefficient();
    if (volume.coefficient(lambda3[row]).pi_power() != 0)
      throw DomainError("precondition", "volume form must have pi-free coefficients");
    for (std::size_t col = 0; col < lambda2.size(); ++col) m[row][col + 1] = dm[row][col];
  }
  VolumeDecomposition out;
  for (const auto& [power, rhs] : detail::by_pi_power(form, lambda3)) {
    auto x = linalg::solve(m, rhs);
    if (!x) return std::nullopt;
    out.coefficient += PiScalar((*x)[0], power);
    for (std::size_t col = 0; col < lambda2.size(); ++col) out.primitive.add_term(lambda2[col], PiScalar((*x)[col + 1], power));
  }
  if (volume.scaled(out.coefficient) + d(alg, out.primitive) != form)
    throw InternalError("volume decomposition does not verify");
  return out;
}

}  // namespace svol
