#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "svol/errors.hpp"
#include "svol/exact.hpp"

namespace svol {

/// Strictly increasing list of dual-basis indices.
using Monomial = std::vector<std::size_t>;

/// A left-invariant form: a sum of c * theta^{i1} ^ ... ^ theta^{ik} with
/// strictly increasing indices. Wedge products use the determinant
/// convention, so theta^i ^ theta^j = -theta^j ^ theta^i with no
/// averaging factor. Zero coefficients are never stored.
class ExteriorForm {
 public:
  explicit ExteriorForm(std::size_t degree = 0) : degree_(degree) {}

  static ExteriorForm constant(const PiScalar& c) {
    ExteriorForm f(0);
    f.add_term({}, c);
    return f;
  }

  static ExteriorForm basis(std::size_t i) {
    ExteriorForm f(1);
    f.add_term({i}, PiScalar(1));
    return f;
  }

  /// theta^{i1} ^ ... ^ theta^{ik} in the order given (sign-normalized).
  static ExteriorForm monomial(const std::vector<std::size_t>& indices, const PiScalar& c = PiScalar(1)) {
    ExteriorForm f = constant(c);
    for (std::size_t i : indices) f = f.wedge(basis(i));
    return f;
  }

  std::size_t degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, PiScalar>& terms() const { return terms_; }

  PiScalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? PiScalar() : it->second;
  }

  /// Adds c to the coefficient of an increasing monomial.
  void add_term(const Monomial& m, const PiScalar& c) {
    if (m.size() != degree_) throw DomainError("precondition", "monomial degree does not match form degree");
    for (std::size_t i = 1; i < m.size(); ++i)
      if (m[i - 1] >= m[i]) throw DomainError("precondition", "monomial indices must be strictly increasing");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExteriorForm& operator+=(const ExteriorForm& o) {
    check_degree(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ExteriorForm& operator-=(const ExteriorForm& o) {
    check_degree(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  ExteriorForm operator-() const { return scaled(PiScalar(-1)); }

  ExteriorForm scaled(const PiScalar& c) const {
    ExteriorForm out(degree_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
  }
  friend ExteriorForm operator*(const PiScalar& c, const ExteriorForm& f) { return f.scaled(c); }

  ExteriorForm wedge(const ExteriorForm& o) const {
    ExteriorForm out(degree_ + o.degree_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Monomial merged;
        int sign = 0;
        if (!merge(ma, mb, merged, sign)) continue;
        PiScalar c = ca * cb;
        out.add_term(merged, sign > 0 ? c : -c);
      }
    }
    return out;
  }

  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// "c * phiX^phiY + ..." with the given basis names; "0" when zero.
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string coeff = c.to_string();
      bool negative = c.coefficient().is_real() && c.coefficient().re().sign() < 0;
      if (negative) coeff = (-c).to_string();
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      if (m.empty()) {
        out += coeff;
        continue;
      }
      std::string mono;
      for (std::size_t k = 0; k < m.size(); ++k) mono += (k ? "^phi" : "phi") + names.at(m[k]);
      out += (coeff == "1" ? mono : coeff + " * " + mono);
    }
    return out;
  }

 private:
  void check_degree(const ExteriorForm& o) const {
    if (o.degree_ != degree_)
      throw DomainError("precondition", "cannot add forms of degree " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
  }

  // Sorts a ++ b; sign is the parity of inversions. Returns false on a repeat.
  static bool merge(const Monomial& a, const Monomial& b, Monomial& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t inversions = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i] < b[j])) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j] < a[i]) {
        inversions += a.size() - i;
        out.push_back(b[j++]);
      } else {
        return false;
      }
    }
    sign = inversions % 2 == 0 ? 1 : -1;
    return true;
  }

  std::size_t degree_;
  std::map<Monomial, PiScalar> terms_;
};

}  // namespace svol
