#include "betaz/seqalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "betaz/cells.hpp"
#include "betaz/error.hpp"

namespace betaz {

namespace {

constexpr std::int64_t kRootSearchCap = 10'000'000;

std::uint64_t magnitude(std::int64_t n) {
  return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

bool is_zero(const GaussianRational& v) { return v.is_zero(); }
bool is_zero(const std::pair<RatFunc, RatFunc>& v) { return v.first.is_zero() && v.second.is_zero(); }

void accumulate(GaussianRational& acc, const GaussianRational& v) { acc += v; }
void accumulate(std::pair<RatFunc, RatFunc>& acc, const std::pair<RatFunc, RatFunc>& v) {
  acc.first += v.first;
  acc.second += v.second;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const Integer l = lcm(Integer(a), Integer(b));
  if (l > kMaxModulus) throw ValidationError("joint modulus exceeds " + std::to_string(kMaxModulus));
  return to_int64(l);
}

// Partition of Z by the value of sum_{i: n in set_i} value_i, zero class omitted.
template <class V>
std::map<V, DefinableSet> level_sets(const std::vector<std::pair<const DefinableSet*, V>>& items) {
  std::map<V, DefinableSet> out;
  if (items.empty()) return out;
  std::int64_t m = 1;
  std::int64_t w = 0;
  for (const auto& [set, v] : items) {
    m = checked_lcm(m, set->modulus());
    w = std::max(w, set->threshold());
  }
  std::vector<V> pos(static_cast<std::size_t>(m)), neg(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) {
    for (const auto& [set, v] : items) {
      if (set->rule(Sign::Plus, r)) accumulate(pos[r], v);
      if (set->rule(Sign::Minus, r)) accumulate(neg[r], v);
    }
  }
  std::map<std::int64_t, V> window;
  for (std::int64_t n = -w; n <= w; ++n) {
    V acc{};
    for (const auto& [set, v] : items)
      if (set->contains(n)) accumulate(acc, v);
    window.emplace(n, std::move(acc));
  }
  std::map<V, bool> keys;
  for (const auto& v : pos) keys.emplace(v, true);
  for (const auto& v : neg) keys.emplace(v, true);
  for (const auto& [n, v] : window) keys.emplace(v, true);
  for (const auto& [key, unused] : keys) {
    if (is_zero(key)) continue;
    out.emplace(key, assemble_set(
                         m, w,
                         [&](Sign s, std::int64_t r) { return (s == Sign::Plus ? pos : neg)[r] == key; },
                         [&](std::int64_t n) { return window.at(n) == key; }));
  }
  return out;
}

bool tail_less(const TailTerm& a, const TailTerm& b) {
  if (const auto c = compare(a.rate(), b.rate()); c != 0) return c > 0;
  if (const auto c = a.q() <=> b.q(); c != 0) return c < 0;
  if (const auto c = a.p() <=> b.p(); c != 0) return c < 0;
  if (const auto c = a.support() <=> b.support(); c != 0) return c < 0;
  return a.coeff() < b.coeff();
}

}  // namespace

void require_no_integer_root(const Polynomial& q) {
  if (q.is_zero()) throw ValidationError("denominator is the zero polynomial");
  if (q.degree() == 0) return;
  const auto [content, prim] = q.primitive_part();
  const std::vector<Integer> c = prim.integer_coefficients();
  if (c.front() == 0) throw ValidationError("denominator " + q.to_string() + " vanishes at n = 0");
  // Cauchy bound: every root has |x| < 1 + max |c_i / c_n|.
  Rational worst(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rational ratio(abs(c[i]), abs(c.back()));
    ratio.canonicalize();
    worst = std::max(worst, ratio);
  }
  const Integer bound = floor(worst) + 1;
  const Integer c0 = abs(c.front());
  const auto check = [&](const Integer& d) {
    for (const int sgn_d : {1, -1}) {
      const Integer x = sgn_d * d;
      if (sgn(prim(Rational(x))) == 0)
        throw ValidationError("denominator " + q.to_string() + " vanishes at n = " + to_string(x));
    }
  };
  std::int64_t steps = 0;
  for (Integer i = 1; i * i <= c0 && i <= bound; ++i) {
    if (++steps > kRootSearchCap) throw ValidationError("cannot certify that " + q.to_string() + " has no integer root");
    if (c0 % i != 0) continue;
    check(i);
    const Integer j = c0 / i;
    if (j <= bound) check(j);
  }
}

TailTerm::TailTerm(DefinableSet support, Polynomial p, Polynomial q, Rational rate, GaussianRational coeff)
    : support_(std::move(support)), p_(std::move(p)), q_(std::move(q)), rate_(std::move(rate)), coeff_(std::move(coeff)) {
  init(true);
}

TailTerm::TailTerm(Trusted, DefinableSet support, Polynomial p, Polynomial q, Rational rate, GaussianRational coeff)
    : support_(std::move(support)), p_(std::move(p)), q_(std::move(q)), rate_(std::move(rate)), coeff_(std::move(coeff)) {
  init(false);
}

void TailTerm::init(bool check_roots) {
  if (sgn(rate_) <= 0 || rate_ > 1) throw ValidationError("rate must be in (0,1]");
  if (q_.is_zero()) throw ValidationError("denominator is the zero polynomial");
  if (check_roots) require_no_integer_root(q_);
  const RatFunc f(p_, q_);
  if (rate_ == 1 && f.num().degree() > f.den().degree())
    throw ValidationError("unbounded tail: deg p > deg q at rate 1");
  if (f.is_zero() || coeff_.is_zero()) {
    p_ = Polynomial();
    q_ = Polynomial(1);
    coeff_ = GaussianRational();
    return;
  }
  auto [cp, pp] = f.num().primitive_part();
  auto [cq, qq] = f.den().primitive_part();
  const Rational k = cp / cq;
  coeff_ = coeff_ * GaussianRational(k);
  p_ = std::move(pp);
  q_ = std::move(qq);
}

TailTerm::Decay TailTerm::decay() const {
  if (rate_ < 1 || p_.is_zero()) return Decay::Rapid;
  if (p_.degree() == q_.degree()) return Decay::ConvergentToConstant;
  return Decay::Polynomial;
}

GaussianRational TailTerm::formula(std::int64_t n) const {
  if (p_.is_zero()) return {};
  Rational v = p_.eval(n) / q_.eval(n);
  if (rate_ != 1) v *= pow(rate_, magnitude(n));
  return coeff_ * GaussianRational(v);
}

SymbolicSequence::SymbolicSequence(std::vector<StepTerm> steps, std::vector<TailTerm> tails)
    : steps_(std::move(steps)), tails_(std::move(tails)) {}

SymbolicSequence SymbolicSequence::constant(const GaussianRational& c) { return step(c, DefinableSet::all()); }

SymbolicSequence SymbolicSequence::indicator(const DefinableSet& s) { return step(1, s); }

SymbolicSequence SymbolicSequence::step(const GaussianRational& c, const DefinableSet& s) {
  return normalize(SymbolicSequence({StepTerm{c, s}}, {}));
}

SymbolicSequence SymbolicSequence::tail(TailTerm t) { return normalize(SymbolicSequence({}, {std::move(t)})); }

SymbolicSequence SymbolicSequence::rational(const Polynomial& p, const Polynomial& q) {
  return tail(TailTerm(DefinableSet::all(), p, q, 1));
}

SymbolicSequence SymbolicSequence::geometric(const Rational& rate) {
  return tail(TailTerm(DefinableSet::all(), Polynomial(1), Polynomial(1), rate));
}

bool SymbolicSequence::is_zero() const {
  if (normalized_) return steps_.empty() && tails_.empty();
  return normalize(*this).is_zero();
}

bool SymbolicSequence::is_real() const {
  if (!normalized_) return normalize(*this).is_real();
  for (const auto& st : steps_)
    if (!st.value.is_real()) return false;
  for (const auto& t : tails_)
    if (!t.coeff().is_real()) return false;
  return true;
}

std::int64_t SymbolicSequence::threshold() const {
  std::int64_t w = 0;
  for (const auto& st : steps_) w = std::max(w, st.support.threshold());
  for (const auto& t : tails_) w = std::max(w, t.support().threshold());
  return w;
}

std::int64_t SymbolicSequence::joint_modulus() const {
  std::int64_t m = 1;
  for (const auto& st : steps_) m = checked_lcm(m, st.support.modulus());
  for (const auto& t : tails_) m = checked_lcm(m, t.support().modulus());
  return m;
}

std::int64_t SymbolicSequence::direction_period(Sign s) const {
  std::int64_t m = 1;
  for (const auto& st : steps_) m = checked_lcm(m, st.support.period(s));
  for (const auto& t : tails_) m = checked_lcm(m, t.support().period(s));
  return m;
}

SymbolicSequence normalize(const SymbolicSequence& s) {
  if (s.normalized_) return s;
  std::vector<StepTerm> steps;
  for (const auto& st : s.steps_)
    if (!st.value.is_zero() && !st.support.is_empty()) steps.push_back(st);

  using Complex = std::pair<RatFunc, RatFunc>;
  std::map<Rational, std::vector<std::pair<DefinableSet, Complex>>, RateDescending> by_rate;
  for (const auto& t : s.tails_) {
    if (t.p().is_zero() || t.support().is_empty()) continue;
    RatFunc f(t.p(), t.q());
    if (t.rate() == 1) {
      auto [c, g] = f.split_constant();
      if (sgn(c) != 0) steps.push_back({t.coeff() * GaussianRational(c), t.support()});
      f = std::move(g);
      if (f.is_zero()) continue;
    }
    if (t.support().is_finite()) {
      for (const std::int64_t n : t.support().elements()) {
        Rational v = f.eval(n);
        if (t.rate() != 1) v *= pow(t.rate(), magnitude(n));
        steps.push_back({t.coeff() * GaussianRational(v), DefinableSet::finite({n})});
      }
      continue;
    }
    by_rate[t.rate()].emplace_back(t.support(), Complex(f * t.coeff().re(), f * t.coeff().im()));
  }

  std::vector<TailTerm> tails;
  for (const auto& [rate, contribs] : by_rate) {
    std::vector<std::pair<const DefinableSet*, Complex>> items;
    for (const auto& [set, f] : contribs) items.emplace_back(&set, f);
    for (const auto& [f, piece] : level_sets(items)) {
      const auto value_at = [&, &f = f](std::int64_t n) {
        const Rational scale = rate == 1 ? Rational(1) : pow(rate, magnitude(n));
        return GaussianRational(f.first.eval(n) * scale, f.second.eval(n) * scale);
      };
      if (piece.is_finite()) {
        for (const std::int64_t n : piece.elements()) steps.push_back({value_at(n), DefinableSet::finite({n})});
        continue;
      }
      // Tails live on exception-free sets; the finite difference moves to point steps.
      DefinableSet base = DefinableSet::from_rule(piece.modulus(), piece.rule_table(Sign::Plus),
                                                  piece.rule_table(Sign::Minus), {});
      for (const std::int64_t n : piece.exceptions()) {
        const GaussianRational v = value_at(n);
        steps.push_back({piece.contains(n) ? v : -v, DefinableSet::finite({n})});
      }
      if (!f.first.is_zero())
        tails.emplace_back(TailTerm::Trusted{}, base, f.first.num(), f.first.den(), rate, GaussianRational(1));
      if (!f.second.is_zero())
        tails.emplace_back(TailTerm::Trusted{}, base, f.second.num(), f.second.den(), rate, GaussianRational::i());
    }
  }
  std::sort(tails.begin(), tails.end(), tail_less);

  std::vector<std::pair<const DefinableSet*, GaussianRational>> items;
  for (const auto& st : steps) items.emplace_back(&st.support, st.value);
  std::vector<StepTerm> levels;
  for (auto& [c, set] : level_sets(items)) levels.push_back({c, std::move(set)});

  SymbolicSequence out(std::move(levels), std::move(tails));
  out.normalized_ = true;
  return out;
}

GaussianRational eval(const SymbolicSequence& s, std::int64_t n) {
  GaussianRational acc;
  for (const auto& st : s.steps())
    if (st.support.contains(n)) acc += st.value;
  for (const auto& t : s.tails()) acc += t.at(n);
  return acc;
}

std::complex<double> eval_numeric(const SymbolicSequence& s, std::int64_t n) {
  std::complex<long double> acc;
  const long double x = static_cast<long double>(n);
  for (const auto& st : s.steps())
    if (st.support.contains(n)) acc += std::complex<long double>(to_double(st.value.re()), to_double(st.value.im()));
  for (const auto& t : s.tails()) {
    if (!t.support().contains(n) || t.p().is_zero()) continue;
    long double v = t.p().eval_numeric(x) / t.q().eval_numeric(x);
    if (t.rate() != 1) v *= std::pow(static_cast<long double>(to_double(t.rate())), std::fabs(x));
    acc += std::complex<long double>(to_double(t.coeff().re()), to_double(t.coeff().im())) * v;
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

SymbolicSequence operator+(const SymbolicSequence& a, const SymbolicSequence& b) {
  std::vector<StepTerm> steps = a.steps();
  steps.insert(steps.end(), b.steps().begin(), b.steps().end());
  std::vector<TailTerm> tails = a.tails();
  tails.insert(tails.end(), b.tails().begin(), b.tails().end());
  return normalize(SymbolicSequence(std::move(steps), std::move(tails)));
}

SymbolicSequence operator-(const SymbolicSequence& a) { return scale(-1, a); }

SymbolicSequence operator-(const SymbolicSequence& a, const SymbolicSequence& b) { return a + scale(-1, b); }

SymbolicSequence scale(const GaussianRational& c, const SymbolicSequence& s) {
  std::vector<StepTerm> steps;
  for (const auto& st : s.steps()) steps.push_back({st.value * c, st.support});
  std::vector<TailTerm> tails;
  for (const auto& t : s.tails())
    tails.emplace_back(TailTerm::Trusted{}, t.support(), t.p(), t.q(), t.rate(), t.coeff() * c);
  return normalize(SymbolicSequence(std::move(steps), std::move(tails)));
}

SymbolicSequence conj(const SymbolicSequence& s) {
  std::vector<StepTerm> steps;
  for (const auto& st : s.steps()) steps.push_back({st.value.conj(), st.support});
  std::vector<TailTerm> tails;
  for (const auto& t : s.tails())
    tails.emplace_back(TailTerm::Trusted{}, t.support(), t.p(), t.q(), t.rate(), t.coeff().conj());
  return normalize(SymbolicSequence(std::move(steps), std::move(tails)));
}

SymbolicSequence operator*(const SymbolicSequence& a, const SymbolicSequence& b) {
  std::vector<StepTerm> steps;
  std::vector<TailTerm> tails;
  for (const auto& x : a.steps()) {
    for (const auto& y : b.steps()) steps.push_back({x.value * y.value, x.support & y.support});
    for (const auto& t : b.tails())
      tails.emplace_back(TailTerm::Trusted{}, x.support & t.support(), t.p(), t.q(), t.rate(), t.coeff() * x.value);
  }
  for (const auto& t : a.tails()) {
    for (const auto& y : b.steps())
      tails.emplace_back(TailTerm::Trusted{}, t.support() & y.support, t.p(), t.q(), t.rate(), t.coeff() * y.value);
    for (const auto& u : b.tails())
      tails.emplace_back(TailTerm::Trusted{}, t.support() & u.support(), t.p() * u.p(), t.q() * u.q(),
                         Rational(t.rate() * u.rate()), t.coeff() * u.coeff());
  }
  return normalize(SymbolicSequence(std::move(steps), std::move(tails)));
}

SymbolicSequence restrict_to(const SymbolicSequence& s, const DefinableSet& set) {
  std::vector<StepTerm> steps;
  for (const auto& st : s.steps()) steps.push_back({st.value, st.support & set});
  std::vector<TailTerm> tails;
  for (const auto& t : s.tails())
    tails.emplace_back(TailTerm::Trusted{}, t.support() & set, t.p(), t.q(), t.rate(), t.coeff());
  return normalize(SymbolicSequence(std::move(steps), std::move(tails)));
}

bool equivalent(const SymbolicSequence& a, const SymbolicSequence& b) { return (a - b).is_zero(); }

DefinableSet at_least_set(const SymbolicSequence& s, const Rational& t) {
  const SymbolicSequence x = normalize(s);
  if (!x.is_real()) throw DomainError("threshold sets need a real-valued sequence");
  const std::int64_t m = x.joint_modulus();
  std::int64_t window = x.threshold();
  std::vector<bool> pos(static_cast<std::size_t>(m)), neg(static_cast<std::size_t>(m));
  for (const Sign sign : {Sign::Plus, Sign::Minus}) {
    // cells with the same active terms share a form
    std::map<std::vector<bool>, bool> seen;
    for (std::int64_t r = 0; r < m; ++r) {
      std::vector<bool> key;
      key.reserve(x.steps().size() + x.tails().size());
      for (const auto& st : x.steps()) key.push_back(st.support.rule(sign, r));
      for (const auto& tl : x.tails()) key.push_back(tl.support().rule(sign, r));
      auto it = seen.find(key);
      if (it == seen.end()) {
        const CellForm form = cell_form(x, Direction{sign, m, r});
        const EventualSign es = eventual_sign(form.re - ExpRational::constant(t), sign);
        window = std::max(window, es.from);
        it = seen.emplace(std::move(key), es.sign >= 0).first;
      }
      (sign == Sign::Plus ? pos : neg)[r] = it->second;
    }
  }
  return assemble_set(
      m, window, [&](Sign sign, std::int64_t r) { return (sign == Sign::Plus ? pos : neg)[r]; },
      [&](std::int64_t n) { return eval(x, n).re() >= t; });
}

DefinableSet threshold_set(const SymbolicSequence& s, const Rational& t) {
  if (sgn(t) <= 0) throw DomainError("threshold must be positive");
  return at_least_set(s, t);
}

SignSplit split_pos_neg(const SymbolicSequence& s) {
  const DefinableSet nonneg = at_least_set(s, 0);
  return {restrict_to(s, nonneg), -restrict_to(s, ~nonneg)};
}

}  // namespace betaz
