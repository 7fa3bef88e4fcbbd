#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "betaz/point.hpp"
#include "betaz/polynomial.hpp"
#include "betaz/rational.hpp"

namespace betaz {

/// Reduced quotient num/den over Q with den monic and gcd(num, den) = 1.
/// The zero function is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Polynomial::constant(1)) {}
  RatFunc(Polynomial num, Polynomial den);
  explicit RatFunc(Polynomial num) : RatFunc(std::move(num), Polynomial::constant(1)) {}
  static RatFunc constant(const Rational& c) { return RatFunc(Polynomial::constant(c)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// deg den - deg num; only meaningful for nonzero functions.
  int decay_order() const { return den_.degree() - num_.degree(); }

  /// Exact value; throws DomainError when den(n) = 0.
  Rational eval(std::int64_t n) const;
  long double eval_numeric(long double x) const;
  /// Limit as |n| -> inf. Requires deg num <= deg den.
  Rational limit() const;
  /// Splits a bounded function into limit + strictly proper part.
  std::pair<Rational, RatFunc> split_constant() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator*=(const Rational& s);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator*(RatFunc a, const Rational& s) { return a *= s; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
    const auto c = a.den_ <=> b.den_;
    return c != 0 ? c : a.num_ <=> b.num_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

struct RateDescending {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) > 0; }
};

/// A real function on a one-sided cell of Z of the form sum_r R_r(n) r^|n|,
/// with rational functions R_r and rates r in (0, 1]. Closed under +, * and
/// multiplication by n^d; the asymptotic class every cell of a symbolic
/// sequence falls into.
class ExpRational {
 public:
  using Terms = std::map<Rational, RatFunc, RateDescending>;

  ExpRational() = default;
  static ExpRational constant(const Rational& c);
  static ExpRational term(const Rational& rate, RatFunc f);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The rate-1 part (zero if absent).
  RatFunc polynomial_part() const;

  void add_term(const Rational& rate, const RatFunc& f);
  ExpRational& operator+=(const ExpRational& o);
  ExpRational& operator-=(const ExpRational& o);
  friend ExpRational operator+(ExpRational a, const ExpRational& b) { return a += b; }
  friend ExpRational operator-(ExpRational a, const ExpRational& b) { return a -= b; }
  friend ExpRational operator*(const ExpRational& a, const ExpRational& b);
  ExpRational scaled(const Rational& s) const;
  ExpRational times_power(unsigned d) const;

  Rational eval(std::int64_t n) const;
  /// Bounded on a cell iff the rate-1 part has deg num <= deg den.
  bool is_bounded() const;
  /// Limit as |n| -> inf; requires is_bounded().
  Rational limit() const;

 private:
  Terms terms_;
};

/// Sign of f(n) is `sign` for every n with s·n >= from.
struct EventualSign {
  int sign = 0;
  std::int64_t from = 0;
};

/// Certified eventual sign in direction `s`. The zero function has sign 0.
EventualSign eventual_sign(const ExpRational& f, Sign s);

/// Certified bound B with |f(n)| <= B for all |n| >= from (from >= 1).
/// The bound is nonincreasing in `from`. nullopt when f is unbounded.
std::optional<Rational> tail_bound(const ExpRational& f, std::int64_t from);

/// Smallest m >= 1 such that m^e r^m is nonincreasing on [m, inf); r in (0,1].
/// Throws DomainError for r = 1 and e > 0.
std::int64_t monotone_from(int e, const Rational& r);

}  // namespace betaz
