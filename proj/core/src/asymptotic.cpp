#include "betaz/asymptotic.hpp"

#include <algorithm>
#include <vector>

#include "betaz/error.hpp"

namespace betaz {

namespace {

constexpr std::int64_t kSearchCap = std::int64_t{1} << 40;

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = Polynomial::divmod(a, b);
  return q;
}

Rational power_of(std::int64_t m, int e) {
  if (e >= 0) return Rational(pow(Integer(m), static_cast<std::uint64_t>(e)));
  return Rational(Integer(1), pow(Integer(m), static_cast<std::uint64_t>(-e)));
}

// |R(n)·r^|n|| <= factor·|n|^exponent·rate^|n| for |n| >= valid_from.
struct Envelope {
  Rational factor;
  int exponent = 0;
  Rational rate;
  std::int64_t valid_from = 1;
};

// Smallest B >= 1 with sum_{i<d} |c_i|·B^(i-d) < frac·|c_d|. The left side
// falls as B grows, so for |n| >= B the leading term outweighs the rest by 1/frac.
std::int64_t dominance_from(const Polynomial& p, const Rational& frac) {
  const int d = p.degree();
  if (d <= 0) return 1;
  const Rational target = frac * abs(p.leading());
  const auto holds = [&](std::int64_t b) {
    Rational total(0);
    for (int i = 0; i < d; ++i) total += abs(p.coeff(static_cast<std::size_t>(i))) * power_of(b, i - d);
    return total < target;
  };
  std::int64_t hi = 1;
  while (!holds(hi)) {
    hi *= 2;
    if (hi > kSearchCap) throw DomainError("dominance threshold out of range");
  }
  if (hi == 1) return 1;
  std::int64_t lo = hi / 2;  // fails, hi holds
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (holds(mid) ? hi : lo) = mid;
  }
  return hi;
}

Envelope envelope_of(const Rational& rate, const RatFunc& f) {
  Envelope env;
  env.rate = rate;
  env.exponent = f.num().degree() - f.den().degree();
  const Rational a = f.num().abs_coeff_sum();
  if (f.den().degree() == 0) {
    env.factor = a;
    env.valid_from = 1;
  } else {
    // den is monic: |den(n)| >= |n|^b / 2 once |n| >= 2·sum_{i<b} |den_i|.
    env.factor = 2 * a;
    env.valid_from = dominance_from(f.den(), Rational(1, 2));
  }
  return env;
}

// sup over m >= n of factor·m^e·rate^m, for n >= valid_from.
Rational envelope_value(const Envelope& env, std::int64_t n) {
  const std::int64_t m0 = monotone_from(env.exponent, env.rate);
  if (n >= m0) return env.factor * power_of(n, env.exponent) * pow(env.rate, static_cast<std::uint64_t>(n));
  return env.factor * power_of(m0, env.exponent) * pow(env.rate, static_cast<std::uint64_t>(n));
}

}  // namespace

RatFunc::RatFunc(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const Rational lc = den.leading();
  num_ = num * Rational(1 / lc);
  den_ = den.monic();
}

Rational RatFunc::eval(std::int64_t n) const {
  const Rational d = den_.eval(n);
  if (sgn(d) == 0) throw DomainError("denominator " + den_.to_string() + " vanishes at n = " + std::to_string(n));
  return num_.eval(n) / d;
}

long double RatFunc::eval_numeric(long double x) const { return num_.eval_numeric(x) / den_.eval_numeric(x); }

Rational RatFunc::limit() const {
  if (num_.is_zero() || num_.degree() < den_.degree()) return 0;
  if (num_.degree() > den_.degree()) throw DomainError("unbounded rational function has no limit");
  return num_.leading() / den_.leading();
}

std::pair<Rational, RatFunc> RatFunc::split_constant() const {
  const Rational c = limit();
  return {c, *this - RatFunc::constant(c)};
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator*=(const Rational& s) {
  num_ *= s;
  if (num_.is_zero()) den_ = Polynomial::constant(1);
  return *this;
}

ExpRational ExpRational::constant(const Rational& c) { return term(Rational(1), RatFunc::constant(c)); }

ExpRational ExpRational::term(const Rational& rate, RatFunc f) {
  ExpRational e;
  e.add_term(rate, f);
  return e;
}

RatFunc ExpRational::polynomial_part() const {
  auto it = terms_.find(Rational(1));
  return it == terms_.end() ? RatFunc() : it->second;
}

void ExpRational::add_term(const Rational& rate, const RatFunc& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(rate, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpRational& ExpRational::operator+=(const ExpRational& o) {
  for (const auto& [rate, f] : o.terms_) add_term(rate, f);
  return *this;
}

ExpRational& ExpRational::operator-=(const ExpRational& o) {
  for (const auto& [rate, f] : o.terms_) add_term(rate, -f);
  return *this;
}

ExpRational operator*(const ExpRational& a, const ExpRational& b) {
  ExpRational out;
  for (const auto& [ra, fa] : a.terms_)
    for (const auto& [rb, fb] : b.terms_) out.add_term(Rational(ra * rb), fa * fb);
  return out;
}

ExpRational ExpRational::scaled(const Rational& s) const {
  ExpRational out;
  for (const auto& [rate, f] : terms_) out.add_term(rate, f * s);
  return out;
}

ExpRational ExpRational::times_power(unsigned d) const {
  if (d == 0) return *this;
  ExpRational out;
  const Polynomial nd = Polynomial::monomial(1, d);
  for (const auto& [rate, f] : terms_) out.add_term(rate, RatFunc(f.num() * nd, f.den()));
  return out;
}

Rational ExpRational::eval(std::int64_t n) const {
  Rational acc(0);
  const std::uint64_t m = static_cast<std::uint64_t>(n < 0 ? -n : n);
  for (const auto& [rate, f] : terms_) {
    if (rate == 1) {
      acc += f.eval(n);
    } else {
      acc += f.eval(n) * pow(rate, m);
    }
  }
  return acc;
}

bool ExpRational::is_bounded() const {
  const RatFunc p = polynomial_part();
  return p.is_zero() || p.num().degree() <= p.den().degree();
}

Rational ExpRational::limit() const { return polynomial_part().limit(); }

std::int64_t monotone_from(int e, const Rational& r) {
  if (e <= 0) return 1;
  if (r >= 1) throw DomainError("m^e grows without bound for e > 0 at rate 1");
  const auto decreasing_at = [&](std::int64_t m) {
    return power_of(m + 1, e) * r <= power_of(m, e);
  };
  std::int64_t hi = 1;
  while (!decreasing_at(hi)) {
    hi *= 2;
    if (hi > kSearchCap) throw DomainError("monotonicity threshold out of range");
  }
  std::int64_t lo = hi / 2;
  if (lo < 1) return hi;
  // decreasing_at(lo) is false, decreasing_at(hi) is true.
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (decreasing_at(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::optional<Rational> tail_bound(const ExpRational& f, std::int64_t from) {
  if (!f.is_bounded()) return std::nullopt;
  from = std::max<std::int64_t>(from, 1);
  std::vector<Envelope> envs;
  std::int64_t valid = from;
  for (const auto& [rate, g] : f.terms()) {
    envs.push_back(envelope_of(rate, g));
    valid = std::max(valid, envs.back().valid_from);
  }
  Rational bound(0);
  for (const auto& env : envs) bound += envelope_value(env, valid);
  for (std::int64_t m = from; m < valid; ++m) {
    bound = std::max(bound, Rational(abs(f.eval(m))));
    bound = std::max(bound, Rational(abs(f.eval(-m))));
  }
  return bound;
}

EventualSign eventual_sign(const ExpRational& f, Sign s) {
  if (f.is_zero()) return {0, 0};
  const auto& terms = f.terms();
  auto it = terms.begin();
  const Rational& rate = it->first;
  const RatFunc& dom = it->second;
  const Polynomial& num = dom.num();
  const Polynomial& den = dom.den();
  const int a = num.degree();
  const int b = den.degree();

  int sigma = sgn(num.leading());
  if (s == Sign::Minus && (a + b) % 2 != 0) sigma = -sigma;

  // Beyond these, num(n) and den(n) carry the sign of their leading terms;
  // with further terms num must also keep half its leading size.
  const Rational lc = abs(num.leading());
  const bool single = std::next(it) == terms.end();
  const Rational frac = single ? Rational(1) : Rational(1, 2);
  std::int64_t from = std::max(dominance_from(num, frac), dominance_from(den, frac));
  if (++it == terms.end()) return {sigma, from};

  // |dom(n)| >= lower·|n|^(a-b) for |n| >= from.
  const Rational lower = lc / (2 * den.abs_coeff_sum());
  struct Ratio {
    Rational factor;
    int exponent;
    Rational rate;
  };
  std::vector<Ratio> ratios;
  for (; it != terms.end(); ++it) {
    const Envelope env = envelope_of(it->first, it->second);
    Ratio q{env.factor / lower, env.exponent - (a - b), Rational(it->first / rate)};
    from = std::max({from, env.valid_from, monotone_from(q.exponent, q.rate)});
    ratios.push_back(std::move(q));
  }
  const auto dominated_at = [&](std::int64_t m) {
    Rational total(0);
    for (const auto& q : ratios) total += q.factor * power_of(m, q.exponent) * pow(q.rate, static_cast<std::uint64_t>(m));
    return total < 1;
  };
  std::int64_t hi = from;
  while (!dominated_at(hi)) {
    hi *= 2;
    if (hi > kSearchCap) throw DomainError("cannot certify eventual sign");
  }
  std::int64_t lo = std::max(from, hi / 2);
  if (lo == hi || dominated_at(lo)) return {sigma, lo};
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (dominated_at(mid) ? hi : lo) = mid;
  }
  return {sigma, hi};
}

}  // namespace betaz
