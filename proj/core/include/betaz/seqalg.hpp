#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "betaz/asymptotic.hpp"
#include "betaz/point.hpp"
#include "betaz/polynomial.hpp"
#include "betaz/rational.hpp"
#include "betaz/setalg.hpp"

namespace betaz {

/// c·1_S.
struct StepTerm {
  GaussianRational value;
  DefinableSet support;
  friend bool operator==(const StepTerm&, const StepTerm&) = default;
};

/// coeff·p(n)/q(n)·rate^|n| on `support`, zero elsewhere.
///
/// p and q have integer coefficients and q has no integer root; the term is
/// bounded (rate < 1 or deg p <= deg q). Both are checked on construction.
class TailTerm {
 public:
  enum class Decay { Rapid, Polynomial, ConvergentToConstant };

  TailTerm(DefinableSet support, Polynomial p, Polynomial q, Rational rate, GaussianRational coeff = 1);
  /// Skips the integer-root search; for denominators built from already
  /// validated ones (products and factors of them).
  struct Trusted {};
  TailTerm(Trusted, DefinableSet support, Polynomial p, Polynomial q, Rational rate, GaussianRational coeff = 1);

  const DefinableSet& support() const { return support_; }
  const Polynomial& p() const { return p_; }
  const Polynomial& q() const { return q_; }
  const Rational& rate() const { return rate_; }
  const GaussianRational& coeff() const { return coeff_; }

  Decay decay() const;
  /// Value of p/q·rate^|n|·coeff ignoring the support.
  GaussianRational formula(std::int64_t n) const;
  GaussianRational at(std::int64_t n) const { return support_.contains(n) ? formula(n) : GaussianRational(); }

  friend bool operator==(const TailTerm&, const TailTerm&) = default;

 private:
  void init(bool check_roots);
  DefinableSet support_;
  Polynomial p_;
  Polynomial q_;
  Rational rate_;
  GaussianRational coeff_;
};

/// Throws ValidationError when q has an integer root (or one cannot be ruled out).
void require_no_integer_root(const Polynomial& q);

/// An element of l^inf(Z) given by finitely many step terms and tail terms.
///
/// Normal form (see normalize()): step supports pairwise disjoint with
/// distinct nonzero constants sorted ascending; rate-1 tails strictly proper;
/// for every rate, tails live on pairwise disjoint purely periodic sets (no
/// finite exceptions) with one reduced rational function per set, real and
/// imaginary parts as separate terms. Finite corrections sit in the steps.
/// The form is unique, so structural equality is pointwise equality.
class SymbolicSequence {
 public:
  SymbolicSequence() = default;
  SymbolicSequence(std::vector<StepTerm> steps, std::vector<TailTerm> tails);

  static SymbolicSequence constant(const GaussianRational& c);
  static SymbolicSequence indicator(const DefinableSet& s);
  static SymbolicSequence step(const GaussianRational& c, const DefinableSet& s);
  static SymbolicSequence tail(TailTerm t);
  /// coeff·p/q on all of Z.
  static SymbolicSequence rational(const Polynomial& p, const Polynomial& q);
  /// rate^|n| on all of Z.
  static SymbolicSequence geometric(const Rational& rate);

  const std::vector<StepTerm>& steps() const { return steps_; }
  const std::vector<TailTerm>& tails() const { return tails_; }
  bool is_normalized() const { return normalized_; }

  bool is_zero() const;
  bool is_real() const;
  /// Largest support threshold: beyond it every support follows its rule.
  std::int64_t threshold() const;
  /// lcm of the canonical moduli of all supports.
  std::int64_t joint_modulus() const;
  /// lcm of the supports' periods in direction s.
  std::int64_t direction_period(Sign s) const;

  friend bool operator==(const SymbolicSequence&, const SymbolicSequence&) = default;

 private:
  friend SymbolicSequence normalize(const SymbolicSequence&);
  std::vector<StepTerm> steps_;
  std::vector<TailTerm> tails_;
  bool normalized_ = false;
};

SymbolicSequence normalize(const SymbolicSequence& s);

/// Exact value at n.
GaussianRational eval(const SymbolicSequence& s, std::int64_t n);
/// Double-precision value at n; for nets far out where exact evaluation is wasteful.
std::complex<double> eval_numeric(const SymbolicSequence& s, std::int64_t n);

SymbolicSequence operator+(const SymbolicSequence& a, const SymbolicSequence& b);
SymbolicSequence operator-(const SymbolicSequence& a, const SymbolicSequence& b);
SymbolicSequence operator-(const SymbolicSequence& a);
SymbolicSequence operator*(const SymbolicSequence& a, const SymbolicSequence& b);
SymbolicSequence scale(const GaussianRational& c, const SymbolicSequence& s);
SymbolicSequence conj(const SymbolicSequence& s);
/// s·1_set.
SymbolicSequence restrict_to(const SymbolicSequence& s, const DefinableSet& set);

/// Pointwise equality, decided as normalize(a - b) == 0.
bool equivalent(const SymbolicSequence& a, const SymbolicSequence& b);

/// {n : s(n) >= t} for real s and t > 0.
DefinableSet threshold_set(const SymbolicSequence& s, const Rational& t);
/// {n : s(n) >= t} for real s and any rational t.
DefinableSet at_least_set(const SymbolicSequence& s, const Rational& t);

struct SignSplit {
  SymbolicSequence positive;
  SymbolicSequence negative;
};
/// s = positive - negative with both parts >= 0 and disjoint supports.
SignSplit split_pos_neg(const SymbolicSequence& s);

/// Value of a seminorm: either infinite, or certified to lie in [lo, hi].
struct SeminormValue {
  bool infinite = false;
  Rational lo{0};
  Rational hi{0};
  /// A direction along which |n^d s(n)| is unbounded (infinite case only).
  std::optional<Direction> unbounded_at;
  bool exact() const { return !infinite && lo == hi; }
};

/// sup_n |n^d s(n)|. The interval width is at most `tolerance` (only needed
/// when the supremum is irrational, i.e. for complex-valued sequences).
SeminormValue schwartz_seminorm(const SymbolicSequence& s, unsigned d, const Rational& tolerance = Rational(1, 1000000000));
inline SeminormValue sup_norm(const SymbolicSequence& s, const Rational& tolerance = Rational(1, 1000000000)) {
  return schwartz_seminorm(s, 0, tolerance);
}

}  // namespace betaz
