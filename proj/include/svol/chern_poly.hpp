#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "svol/errors.hpp"
#include "svol/exact.hpp"
#include "svol/linalg.hpp"

namespace svol {

enum class CharacteristicClass { Chern, Pontrjagin };

/// Exact expansion of det(lambda I - s A) with s = 1/(2i pi) (Chern) or
/// s = 1/(2 pi) (Pontrjagin).
struct CharacteristicCoefficients {
  CharacteristicClass kind;
  /// coefficients[k] multiplies lambda^(n-k); coefficients[0] = 1.
  std::vector<PiScalar> coefficients;
  /// C_2 (Chern) or P_1 (Pontrjagin): the coefficient of lambda^(n-2).
  PiScalar quadratic;
  /// tr(A^2)/(8 pi^2) (Chern) or -tr(A^2)/(8 pi^2) (Pontrjagin).
  PiScalar trace_formula;
};

namespace detail {

/// Sum of the principal k x k minors of a.
inline GaussianRational elementary_symmetric(const linalg::Matrix& a, std::size_t k) {
  const std::size_t n = a.size();
  GaussianRational total;
  std::vector<std::size_t> idx(k);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == k) {
      linalg::Matrix minor(k, linalg::Vector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[idx[i]][idx[j]];
      total += linalg::determinant(minor);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return total;
}

}  // namespace detail

inline CharacteristicCoefficients chern_poly_coeffs(const linalg::Matrix& a, CharacteristicClass kind) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("precondition", "matrix must be square");
  PiScalar s;
  if (kind == CharacteristicClass::Chern) {
    if (n != 2) throw DomainError("precondition", "Chern polynomial expects a 2x2 matrix");
    if (!linalg::trace(a).is_zero()) throw DomainError("precondition", "Chern polynomial expects a traceless matrix");
    s = PiScalar(GaussianRational(Rational(0), Rational(-1, 2)), -1);  // 1/(2 i pi)
  } else {
    if (n != 3) throw DomainError("precondition", "Pontrjagin polynomial expects a 3x3 matrix");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a[i][j] != -a[j][i]) throw DomainError("precondition", "Pontrjagin polynomial expects an antisymmetric matrix");
    s = PiScalar(Rational(1, 2), -1);  // 1/(2 pi)
  }

  CharacteristicCoefficients out{kind, {}, {}, {}};
  PiScalar s_power(1);
  for (std::size_t k = 0; k <= n; ++k) {
    PiScalar c = PiScalar(detail::elementary_symmetric(a, k)) * s_power;
    out.coefficients.push_back(k % 2 == 0 ? c : -c);
    s_power *= s;
  }
  out.quadratic = out.coefficients[2];

  PiScalar tr2(linalg::trace(linalg::multiply(a, a)));
  PiScalar eighth(Rational(1, 8), -2);
  out.trace_formula = kind == CharacteristicClass::Chern ? tr2 * eighth : -(tr2 * eighth);

  if (kind == CharacteristicClass::Chern && !out.coefficients[1].is_zero())
    throw InternalError("C_1 does not vanish on a traceless matrix");
  if (kind == CharacteristicClass::Pontrjagin && (!out.coefficients[1].is_zero() || !out.coefficients[3].is_zero()))
    throw InternalError("odd Pontrjagin coefficients do not vanish on an antisymmetric matrix");
  if (out.quadratic != out.trace_formula)
    throw InternalError("quadratic coefficient " + out.quadratic.to_string() + " differs from the trace formula " +
                        out.trace_formula.to_string());
  return out;
}

}  // namespace svol
