#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace betaz {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Rational pow(const Rational& base, std::uint64_t exponent);
Integer pow(const Integer& base, std::uint64_t exponent);
Integer lcm(const Integer& a, const Integer& b);
std::int64_t to_int64(const Integer& z);
Integer ceil(const Rational& q);
Integer floor(const Rational& q);
/// Nearest double, ties to even (mpq_class::get_d truncates).
double to_double(const Rational& q);

/// Three-way comparison; mpq_class has no spaceship operator.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Exact complex scalar a + b·i with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(int v) : re_(v), im_(0) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  /// |z|^2, always rational.
  Rational norm2() const { return Rational(re_ * re_ + im_ * im_); }
  GaussianRational conj() const { return {re_, Rational(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); the canonical order of level-form terms.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    const auto c = compare(a.re_, b.re_);
    return c != 0 ? c : compare(a.im_, b.im_);
  }

  /// "3/4", "-2 i", "1/2 + 3 i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace betaz
