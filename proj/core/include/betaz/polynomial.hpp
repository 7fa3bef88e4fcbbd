#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betaz/rational.hpp"

namespace betaz {

/// Dense univariate polynomial over Q in the variable n, coefficients stored
/// low degree first with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(long c) : Polynomial(std::vector<Rational>{Rational(c)}) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned degree);
  static Polynomial from_integers(const std::vector<Integer>& coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  Rational eval(std::int64_t n) const { return (*this)(Rational(n)); }
  long double eval_numeric(long double x) const;

  bool is_integral() const;
  /// Sum of |c_i| for i < upto.
  Rational abs_coeff_sum(std::size_t upto) const;
  Rational abs_coeff_sum() const { return abs_coeff_sum(c_.size()); }

  Polynomial monic() const;
  /// p = content · primitive, with primitive integral, coprime coefficients
  /// and positive leading coefficient. The zero polynomial yields (0, 0).
  std::pair<Rational, Polynomial> primitive_part() const;
  std::vector<Integer> integer_coefficients() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(const Polynomial& a);

  /// Euclidean division: a = quotient·b + remainder, deg remainder < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  /// "3*n^2 - 2*n + 1"; parseable by the DSL when integral.
  std::string to_string(std::string_view var = "n") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace betaz
