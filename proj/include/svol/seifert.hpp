#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svol/errors.hpp"
#include "svol/exact.hpp"

namespace svol {

/// Exceptional fiber datum b/a: the meridian of the filling solid torus is
/// the slope a*s + b*h.
struct FiberPair {
  Integer a;
  Integer b;

  Rational slope() const { return Rational(b, a); }
  friend bool operator==(const FiberPair&, const FiberPair&) = default;
  friend bool operator<(const FiberPair& x, const FiberPair& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

/// Seifert invariants (g, boundary; b_1/a_1, ..., b_p/a_p) over an
/// orientable base. Pairs are kept in canonical (a, b) order; pairs with
/// a = 1 are retained as given.
class SeifertInvariants {
 public:
  SeifertInvariants() = default;
  SeifertInvariants(Integer genus, std::vector<FiberPair> pairs, Integer boundary_count = 0)
      : genus_(std::move(genus)), pairs_(std::move(pairs)), boundary_(std::move(boundary_count)) {
    if (genus_ < 0) throw DomainError("precondition", "genus must be non-negative");
    if (boundary_ < 0) throw DomainError("precondition", "boundary count must be non-negative");
    for (std::size_t i = 0; i < pairs_.size(); ++i) check_pair(pairs_[i], i + 1);
    std::sort(pairs_.begin(), pairs_.end());
  }

  /// Validates one (a, b) pair; `index` is 1-based and only used in messages.
  static void check_pair(const FiberPair& p, std::size_t index) {
    std::string where = "pair " + std::to_string(index) + " (" + p.b.str() + "/" + p.a.str() + "): ";
    if (p.a <= 0) throw DomainError("precondition", where + "fiber index a must be positive");
    if (gcd(p.a, p.b) != 1) throw DomainError("precondition", where + "gcd(a, |b|) must be 1");
  }

  const Integer& genus() const { return genus_; }
  const std::vector<FiberPair>& pairs() const { return pairs_; }
  const Integer& boundary_count() const { return boundary_; }
  bool closed() const { return boundary_ == 0; }

  bool is_circle_bundle() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [](const FiberPair& p) { return p.a == 1; });
  }

  void require_closed(std::string_view op) const {
    if (!closed()) throw DomainError("precondition", std::string(op) + " requires a closed Seifert manifold");
  }

  friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;

 private:
  Integer genus_ = 0;
  std::vector<FiberPair> pairs_;
  Integer boundary_ = 0;
};

enum class GeometryTag { SL2R_tilde, Other };

inline std::string to_string(GeometryTag g) { return g == GeometryTag::SL2R_tilde ? "SL2R~" : "other"; }

/// e = sum b_i/a_i.
inline Rational euler_number(const SeifertInvariants& inv) {
  inv.require_closed("euler_number");
  Rational e(0);
  for (const auto& p : inv.pairs()) e += p.slope();
  return e;
}

/// chi_O = 2 - 2g - sum (1 - 1/a_i).
inline Rational orbifold_chi(const SeifertInvariants& inv) {
  inv.require_closed("orbifold_chi");
  Rational chi = Rational(2) - Rational(2 * inv.genus());
  for (const auto& p : inv.pairs()) chi -= Rational(1) - Rational(Integer(1), p.a);
  return chi;
}

inline GeometryTag classify_geometry(const SeifertInvariants& inv) {
  return !euler_number(inv).is_zero() && orbifold_chi(inv).sign() < 0 ? GeometryTag::SL2R_tilde
                                                                       : GeometryTag::Other;
}

/// Fills `fillings.size()` of the boundary tori of a bounded Seifert piece.
/// Each filling (a, b) kills the slope a*s + b*h and becomes an exceptional
/// pair b/a.
inline SeifertInvariants dehn_fill(const SeifertInvariants& piece, const std::vector<FiberPair>& fillings) {
  if (Integer(fillings.size()) > piece.boundary_count())
    throw DomainError("precondition", "more fillings (" + std::to_string(fillings.size()) + ") than boundary tori (" +
                                          piece.boundary_count().str() + ")");
  std::vector<FiberPair> pairs = piece.pairs();
  for (std::size_t i = 0; i < fillings.size(); ++i) {
    const auto& f = fillings[i];
    if (f.a <= 0)
      throw DomainError("precondition", "filling " + std::to_string(i + 1) +
                                            ": a must be positive (a = 0 fills along the fiber, which is not a Seifert filling)");
    SeifertInvariants::check_pair(f, i + 1);
    pairs.push_back(f);
  }
  return SeifertInvariants(piece.genus(), std::move(pairs), piece.boundary_count() - Integer(fillings.size()));
}

inline SeifertInvariants dehn_fill(const Integer& genus, const Integer& open_boundary, const std::vector<FiberPair>& fillings) {
  return dehn_fill(SeifertInvariants(genus, {}, open_boundary), fillings);
}

inline SeifertInvariants circle_bundle(Integer genus, Integer euler) {
  return SeifertInvariants(std::move(genus), {FiberPair{1, std::move(euler)}});
}

/// Degree-d cover along the fiber of a circle bundle: e -> e/d.
inline SeifertInvariants fiber_cover(const SeifertInvariants& inv, const Integer& d) {
  inv.require_closed("fiber_cover");
  if (d <= 0) throw DomainError("precondition", "cover degree must be positive");
  if (!inv.is_circle_bundle()) throw DomainError("precondition", "fiber_cover requires a circle bundle (no exceptional fibers)");
  Integer e = euler_number(inv).numerator();
  if (e % d != 0) throw DomainError("precondition", "degree " + d.str() + " does not divide e = " + e.str());
  if (d == 1) return inv;
  return circle_bundle(inv.genus(), e / d);
}

/// Pullback along an unbranched degree-k cover of the base surface:
/// genus k(g-1)+1, Euler number k*e.
inline SeifertInvariants base_cover(const SeifertInvariants& inv, const Integer& k) {
  inv.require_closed("base_cover");
  if (k <= 0) throw DomainError("precondition", "cover degree must be positive");
  if (!inv.is_circle_bundle()) throw DomainError("precondition", "base_cover requires a circle bundle (no exceptional fibers)");
  if (inv.genus() == 0) throw DomainError("precondition", "base_cover requires genus >= 1");
  if (k == 1) return inv;
  Integer e = euler_number(inv).numerator();
  return circle_bundle(k * (inv.genus() - 1) + 1, k * e);
}

/// Canonical printer: "(g; b1/a1, ..., bs/as)", pairs sorted by (a, b).
inline std::string to_string(const SeifertInvariants& inv) {
  std::string s = "(" + inv.genus().str() + ";";
  for (std::size_t i = 0; i < inv.pairs().size(); ++i) {
    const auto& p = inv.pairs()[i];
    s += (i == 0 ? " " : ", ") + p.b.str() + "/" + p.a.str();
  }
  return s + ")";
}

namespace detail {

class SeifertParser {
 public:
  explicit SeifertParser(std::string_view text) : text_(text) {}

  SeifertInvariants parse() {
    skip_ws();
    expect('(');
    Integer genus = integer("genus");
    if (genus < 0) throw ParseError(last_start_, "genus must be non-negative");
    expect(';');
    std::vector<FiberPair> pairs;
    skip_ws();
    if (peek() != ')') {
      for (;;) {
        pairs.push_back(pair(pairs.size() + 1));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing input");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      try {
        SeifertInvariants::check_pair(pairs[i], i + 1);
      } catch (const DomainError& e) {
        throw ParseError(pair_starts_[i], e.what());
      }
    }
    return SeifertInvariants(std::move(genus), std::move(pairs));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer integer(std::string_view what) {
    skip_ws();
    last_start_ = pos_;
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw ParseError(start, "expected integer " + std::string(what));
    return parse_integer(text_.substr(start, pos_ - start));
  }

  FiberPair pair(std::size_t index) {
    skip_ws();
    pair_starts_.push_back(pos_);
    std::string label = "pair " + std::to_string(index);
    Integer b = integer(label + " numerator");
    skip_ws();
    if (peek() != '/') return FiberPair{1, b};
    ++pos_;
    skip_ws();
    std::size_t den_start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(den_start, label + ": expected positive integer denominator");
    Integer a = integer(label + " denominator");
    if (a <= 0) throw ParseError(den_start, label + ": denominator must be positive (" + b.str() + "/" + a.str() + ")");
    return FiberPair{a, b};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_start_ = 0;
  std::vector<std::size_t> pair_starts_;
};

}  // namespace detail

/// Parses "(g; b1/a1, ..., bs/as)"; bare integers b mean b/1.
inline SeifertInvariants parse_seifert(std::string_view text) { return detail::SeifertParser(text).parse(); }

}  // namespace svol
