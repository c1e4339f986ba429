#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svol/errors.hpp"
#include "svol/exact.hpp"

namespace svol {

enum class ScalarField { Rational, Gaussian };

using LieVector = std::vector<GaussianRational>;

/// Structure constants c^i_jk with [X_j, X_k] = sum_i c^i_jk X_i.
/// Antisymmetry is enforced by set_bracket; the Jacobi identity is not
/// assumed (see validate_jacobi and LieAlgebra).
class LieAlgebraSpec {
 public:
  LieAlgebraSpec() = default;
  explicit LieAlgebraSpec(std::vector<std::string> basis_names, ScalarField field = ScalarField::Rational)
      : names_(std::move(basis_names)), field_(field), c_(names_.size() * names_.size() * names_.size()) {}

  std::size_t dimension() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  ScalarField field() const { return field_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw DomainError("precondition", "unknown basis element '" + name + "'");
  }

  /// Sets [X_j, X_k] = value and [X_k, X_j] = -value.
  void set_bracket(std::size_t j, std::size_t k, const LieVector& value) {
    check_index(j);
    check_index(k);
    if (value.size() != dimension()) throw DomainError("precondition", "bracket vector has wrong dimension");
    if (j == k) {
      for (const auto& v : value)
        if (!v.is_zero()) throw DomainError("precondition", "[" + names_[j] + "," + names_[j] + "] must vanish");
      return;
    }
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (field_ == ScalarField::Rational && !value[i].is_real())
        throw DomainError("precondition", "complex structure constant over a rational field");
      at(i, j, k) = value[i];
      at(i, k, j) = -value[i];
    }
  }

  void set_bracket(const std::string& x, const std::string& y, const std::vector<std::pair<std::string, GaussianRational>>& value) {
    LieVector v(dimension());
    for (const auto& [name, coeff] : value) v[index_of(name)] += coeff;
    set_bracket(index_of(x), index_of(y), v);
  }

  const GaussianRational& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dimension() + j) * dimension() + k];
  }

  LieVector bracket_basis(std::size_t j, std::size_t k) const {
    LieVector out(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) out[i] = structure(i, j, k);
    return out;
  }

  LieVector bracket(const LieVector& u, const LieVector& v) const {
    LieVector out(dimension());
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (u[j].is_zero()) continue;
      for (std::size_t k = 0; k < dimension(); ++k) {
        if (v[k].is_zero()) continue;
        GaussianRational w = u[j] * v[k];
        for (std::size_t i = 0; i < dimension(); ++i)
          if (!structure(i, j, k).is_zero()) out[i] += w * structure(i, j, k);
      }
    }
    return out;
  }

  LieVector unit(std::size_t i) const {
    LieVector out(dimension());
    out.at(i) = GaussianRational(1);
    return out;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= dimension()) throw DomainError("precondition", "basis index out of range");
  }
  GaussianRational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dimension() + j) * dimension() + k]; }

  std::vector<std::string> names_;
  ScalarField field_ = ScalarField::Rational;
  std::vector<GaussianRational> c_;
};

struct JacobiReport {
  bool ok = true;
  std::array<std::size_t, 3> triple{};  // first failing (i < j < k) when !ok
  LieVector value;                      // the non-zero Jacobiator there

  std::string to_string(const LieAlgebraSpec& spec) const {
    if (ok) return "ok";
    const auto& n = spec.basis_names();
    std::string s = "Jacobi violation at (" + n[triple[0]] + "," + n[triple[1]] + "," + n[triple[2]] + "):";
    for (std::size_t i = 0; i < value.size(); ++i)
      if (!value[i].is_zero()) s += " " + n[i] + ":" + value[i].to_string();
    return s;
  }
};

/// Checks [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]] = 0 on all
/// basis triples i < j < k.
inline JacobiReport validate_jacobi(const LieAlgebraSpec& spec) {
  const std::size_t n = spec.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        LieVector sum = spec.bracket(spec.unit(i), spec.bracket_basis(j, k));
        LieVector t2 = spec.bracket(spec.unit(j), spec.bracket_basis(k, i));
        LieVector t3 = spec.bracket(spec.unit(k), spec.bracket_basis(i, j));
        bool zero = true;
        for (std::size_t l = 0; l < n; ++l) {
          sum[l] += t2[l] + t3[l];
          if (!sum[l].is_zero()) zero = false;
        }
        if (!zero) return {false, {i, j, k}, sum};
      }
  return {};
}

/// A structure-constant spec that satisfies the Jacobi identity.
class LieAlgebra {
 public:
  explicit LieAlgebra(LieAlgebraSpec spec) : spec_(std::move(spec)) {
    JacobiReport report = validate_jacobi(spec_);
    if (!report.ok) throw DomainError("precondition", report.to_string(spec_));
  }

  const LieAlgebraSpec& spec() const { return spec_; }
  std::size_t dimension() const { return spec_.dimension(); }
  const std::vector<std::string>& basis_names() const { return spec_.basis_names(); }
  const GaussianRational& structure(std::size_t i, std::size_t j, std::size_t k) const { return spec_.structure(i, j, k); }

 private:
  LieAlgebraSpec spec_;
};

/// Symmetric bilinear form on the Lie algebra given by its Gram matrix
/// entry (i, j) = f(X_i (x) X_j).
class GramForm {
 public:
  GramForm() = default;
  explicit GramForm(std::vector<std::vector<PiScalar>> matrix) : m_(std::move(matrix)) {
    for (const auto& row : m_)
      if (row.size() != m_.size()) throw DomainError("precondition", "Gram matrix must be square");
    for (std::size_t i = 0; i < m_.size(); ++i)
      for (std::size_t j = i + 1; j < m_.size(); ++j)
        if (m_[i][j] != m_[j][i]) throw DomainError("precondition", "Gram matrix must be symmetric");
  }

  std::size_t dimension() const { return m_.size(); }
  const PiScalar& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  GramForm scaled(const PiScalar& c) const {
    auto m = m_;
    for (auto& row : m)
      for (auto& v : row) v *= c;
    return GramForm(std::move(m));
  }

 private:
  std::vector<std::vector<PiScalar>> m_;
};

struct InvarianceReport {
  bool invariant = true;
  std::array<std::size_t, 3> triple{};  // (A, B, C) where f([A,B],C) + f(B,[A,C]) != 0
};

/// ad-invariance f([A,B], C) + f(B, [A,C]) = 0 on all basis triples.
inline InvarianceReport check_ad_invariance(const LieAlgebra& alg, const GramForm& f) {
  const std::size_t n = alg.dimension();
  if (f.dimension() != n) throw DomainError("precondition", "Gram form dimension does not match the algebra");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        PiScalar total;
        for (std::size_t l = 0; l < n; ++l) {
          total += PiScalar(alg.structure(l, a, b)) * f(l, c);
          total += f(b, l) * PiScalar(alg.structure(l, a, c));
        }
        if (!total.is_zero()) return {false, {a, b, c}};
      }
  return {};
}

}  // namespace svol
