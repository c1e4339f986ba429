#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "svol/errors.hpp"

namespace svol {

using Integer = boost::multiprecision::cpp_int;

inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError(i, "expected digits");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError(i, "unexpected character '" + std::string(1, text[i]) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

inline Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer l = a / gcd(a, b) * b;
  return l < 0 ? Integer(-l) : l;
}

/// Exact fraction in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(n) {}
  Rational(long long n) : value_(n) {}
  Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("precondition", "rational with zero denominator");
    // Boost rejects negative denominators here.
    value_ = den < 0 ? boost::multiprecision::cpp_rational(Integer(-num), Integer(-den))
                     : boost::multiprecision::cpp_rational(num, den);
  }

  /// Accepts "p", "-p" and "p/q" (q may be negative; the result is normalized).
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den;
    try {
      den = parse_integer(text.substr(slash + 1));
    } catch (const ParseError& e) {
      throw ParseError(slash + 1 + e.position(), "bad denominator");
    }
    if (den == 0) throw ParseError(slash + 1, "zero denominator");
    return Rational(num, den);
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const {
    if (is_zero()) throw DomainError("precondition", "reciprocal of zero");
    return Rational(denominator(), numerator());
  }
  double to_double() const { return value_.convert_to<double>(); }

  std::string to_string() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  Rational operator-() const { return from(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("precondition", "division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  static Rational from(boost::multiprecision::cpp_rational v) {
    Rational r;
    r.value_ = std::move(v);
    return r;
  }

  boost::multiprecision::cpp_rational value_;
};

/// Greatest integer <= q.
inline Integer rat_floor(const Rational& q) {
  Integer num = q.numerator();
  Integer den = q.denominator();
  Integer quot = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) quot -= 1;
  return quot;
}

/// Least integer >= q.
inline Integer rat_ceil(const Rational& q) { return -rat_floor(-q); }

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(int re) : re_(re) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("precondition", "division by zero");
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  /// "a", "bi", "a+bi", "a-bi"; a unit imaginary part prints as "i".
  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    auto imag = [](const Rational& q) {
      if (q == Rational(1)) return std::string("i");
      if (q == Rational(-1)) return std::string("-i");
      return q.to_string() + "i";
    };
    if (re_.is_zero()) return imag(im_);
    std::string s = re_.to_string();
    std::string tail = imag(im_);
    return tail.front() == '-' ? s + tail : s + "+" + tail;
  }

 private:
  Rational re_;
  Rational im_;
};

/// A scalar c * pi^k with c a Gaussian rational. Zero is stored with k = 0
/// and is the additive identity for every power; adding two non-zero values
/// with different powers is an error.
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(GaussianRational c, int pi_power = 0) : coeff_(std::move(c)), power_(pi_power) { normalize(); }
  PiScalar(Rational c, int pi_power = 0) : PiScalar(GaussianRational(std::move(c)), pi_power) {}
  PiScalar(int c) : PiScalar(GaussianRational(c), 0) {}

  const GaussianRational& coefficient() const { return coeff_; }
  int pi_power() const { return power_; }
  bool is_zero() const { return coeff_.is_zero(); }

  PiScalar operator-() const { return {-coeff_, power_}; }
  PiScalar& operator+=(const PiScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (power_ != o.power_)
      throw DomainError("precondition", "cannot add pi^" + std::to_string(power_) + " and pi^" + std::to_string(o.power_) + " terms");
    coeff_ += o.coeff_;
    normalize();
    return *this;
  }
  PiScalar& operator-=(const PiScalar& o) { return *this += -o; }
  PiScalar& operator*=(const PiScalar& o) {
    coeff_ *= o.coeff_;
    power_ += o.power_;
    normalize();
    return *this;
  }
  PiScalar& operator/=(const PiScalar& o) {
    coeff_ /= o.coeff_;
    power_ -= o.power_;
    normalize();
    return *this;
  }
  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator*(PiScalar a, const PiScalar& b) { return a *= b; }
  friend PiScalar operator/(PiScalar a, const PiScalar& b) { return a /= b; }
  friend bool operator==(const PiScalar&, const PiScalar&) = default;

  std::string to_string() const {
    std::string c = coeff_.to_string();
    if (power_ == 0) return c;
    if (!coeff_.is_real() && !coeff_.re().is_zero()) c = "(" + c + ")";
    return c + "*pi^" + std::to_string(power_);
  }

 private:
  void normalize() {
    if (coeff_.is_zero()) power_ = 0;
  }

  GaussianRational coeff_;
  int power_ = 0;
};

inline constexpr double kFourPiSquared = 4.0 * std::numbers::pi * std::numbers::pi;

inline std::string format_decimal(double value) {
  std::ostringstream os;
  os << std::setprecision(12) << value;
  return os.str();
}

/// A representation volume: either an exact rational multiple of 4*pi^2
/// (Seifert geometry) or a plain real number (hyperbolic bookkeeping).
class VolumeValue {
 public:
  struct ExactSeifert {
    Rational coeff;
  };
  struct Numeric {
    double value;
  };

  VolumeValue() : value_(ExactSeifert{Rational(0)}) {}

  static VolumeValue exact(Rational coeff) {
    if (coeff.sign() < 0) throw DomainError("precondition", "negative Seifert volume coefficient " + coeff.to_string());
    VolumeValue v;
    v.value_ = ExactSeifert{std::move(coeff)};
    return v;
  }
  static VolumeValue numeric(double value) {
    VolumeValue v;
    v.value_ = Numeric{value};
    return v;
  }

  bool is_exact() const { return std::holds_alternative<ExactSeifert>(value_); }
  const Rational& coeff() const { return std::get<ExactSeifert>(value_).coeff; }
  double to_double() const {
    if (is_exact()) return coeff().to_double() * kFourPiSquared;
    return std::get<Numeric>(value_).value;
  }

  /// Exact values render as "p/q * 4*pi^2" (zero as "0"); numeric values
  /// with 12 significant digits.
  std::string to_string() const {
    if (!is_exact()) return format_decimal(to_double());
    if (coeff().is_zero()) return "0";
    return coeff().to_string() + " * 4*pi^2";
  }

  friend VolumeValue operator+(const VolumeValue& a, const VolumeValue& b) {
    if (a.is_exact() && b.is_exact()) return exact(a.coeff() + b.coeff());
    return numeric(a.to_double() + b.to_double());
  }

  friend bool operator==(const VolumeValue& a, const VolumeValue& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.coeff() == b.coeff();
    return a.to_double() == b.to_double();
  }

 private:
  std::variant<ExactSeifert, Numeric> value_;
};

/// Exact parts are summed exactly. If any operand is numeric the result is
/// numeric: exact total * 4*pi^2 plus the numeric values added in ascending
/// order, so the result does not depend on operand order.
inline VolumeValue volume_sum(const std::vector<VolumeValue>& values) {
  Rational exact_total(0);
  std::vector<double> numeric;
  for (const auto& v : values) {
    if (v.is_exact())
      exact_total += v.coeff();
    else
      numeric.push_back(v.to_double());
  }
  if (numeric.empty()) return VolumeValue::exact(exact_total);
  std::sort(numeric.begin(), numeric.end());
  double total = exact_total.to_double() * kFourPiSquared;
  for (double x : numeric) total += x;
  return VolumeValue::numeric(total);
}

}  // namespace svol
