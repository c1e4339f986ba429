#pragma once

#include <string>
#include <utility>
#include <vector>

#include "svol/exact.hpp"
#include "svol/lie_algebra.hpp"
#include "svol/linalg.hpp"

namespace svol {

namespace detail {

inline linalg::Matrix mat2(int a, int b, int c, int d) {
  return {{GaussianRational(a), GaussianRational(b)}, {GaussianRational(c), GaussianRational(d)}};
}

/// X = diag(1,-1), Y = e_21, Z = e_12.
inline std::vector<linalg::Matrix> sl2_matrices() { return {mat2(1, 0, 0, -1), mat2(0, 0, 1, 0), mat2(0, 1, 0, 0)}; }

}  // namespace detail

/// sl(2) on {X, Y, Z}: [X,Y] = -2Y, [X,Z] = 2Z, [Y,Z] = -X.
inline LieAlgebra sl2_algebra(ScalarField field = ScalarField::Gaussian) {
  LieAlgebraSpec s({"X", "Y", "Z"}, field);
  s.set_bracket("X", "Y", {{"Y", -2}});
  s.set_bracket("X", "Z", {{"Z", 2}});
  s.set_bracket("Y", "Z", {{"X", -1}});
  return LieAlgebra(std::move(s));
}

/// Lie algebra of Iso_e(SL2~) = sl(2) + R (central T) in the basis
/// {X, Y, Z, W} with W = Z - Y - T:
///   [X,Y] = -2Y, [X,Z] = 2Z, [Y,Z] = [Y,W] = [Z,W] = -X, [X,W] = 2Y + 2Z.
inline LieAlgebra iso_sl2r_algebra() {
  LieAlgebraSpec s({"X", "Y", "Z", "W"}, ScalarField::Rational);
  s.set_bracket("X", "Y", {{"Y", -2}});
  s.set_bracket("X", "Z", {{"Z", 2}});
  s.set_bracket("Y", "Z", {{"X", -1}});
  s.set_bracket("Y", "W", {{"X", -1}});
  s.set_bracket("Z", "W", {{"X", -1}});
  s.set_bracket("X", "W", {{"Y", 2}, {"Z", 2}});
  return LieAlgebra(std::move(s));
}

inline LieAlgebra abelian_algebra(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("E" + std::to_string(i + 1));
  return LieAlgebra(LieAlgebraSpec(std::move(names)));
}

/// tr(M_i M_j) on {X, Y, Z}.
inline GramForm sl2_trace_gram() {
  auto m = detail::sl2_matrices();
  std::vector<std::vector<PiScalar>> g(3, std::vector<PiScalar>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g[i][j] = PiScalar(linalg::trace(linalg::multiply(m[i], m[j])));
  return GramForm(std::move(g));
}

/// P_1 on sl(2): -1/(8 pi^2) times the 2x2 trace form.
inline GramForm pontrjagin_gram_sl2() { return sl2_trace_gram().scaled(PiScalar(Rational(-1, 8), -2)); }

/// The invariant form R(A (x) A) = Tr(X^2) + t^2 for A = X + tT, written in
/// the basis {X, Y, Z, W}. Each basis vector is a pair (matrix, t) and
/// R(u, v) = tr(u_M v_M) + u_t v_t.
inline GramForm iso_sl2r_r_gram() {
  auto m = detail::sl2_matrices();
  linalg::Matrix w(2, linalg::Vector(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) w[i][j] = m[2][i][j] - m[1][i][j];
  std::vector<std::pair<linalg::Matrix, Rational>> basis = {{m[0], 0}, {m[1], 0}, {m[2], 0}, {w, -1}};
  std::vector<std::vector<PiScalar>> g(4, std::vector<PiScalar>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      g[i][j] = PiScalar(linalg::trace(linalg::multiply(basis[i].first, basis[j].first)) +
                         GaussianRational(basis[i].second * basis[j].second));
  return GramForm(std::move(g));
}

}  // namespace svol
