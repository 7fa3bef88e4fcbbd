#include "betaz/random.hpp"

#include <algorithm>

namespace betaz {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::int64_t> random_residues(Rng& rng, std::int64_t m) {
  std::vector<std::int64_t> out;
  const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  for (std::int64_t r = 0; r < m; ++r)
    if (coin(rng, p)) out.push_back(r);
  return out;
}

// Denominators with no integer root.
Polynomial random_denominator(Rng& rng) {
  switch (uniform(rng, 0, 4)) {
    case 0: return Polynomial::from_integers({uniform(rng, 1, 5), 0, 1});              // n^2 + a
    case 1: return Polynomial::from_integers({1, 2});                                  // 2n + 1
    case 2: return Polynomial::from_integers({uniform(rng, 1, 3), 0, 0, 0, 1});        // n^4 + a
    case 3: return Polynomial::from_integers({uniform(rng, 1, 4), 1, 1});              // n^2 + n + a
    default: return Polynomial::from_integers({2, 0, 0, 1});                           // n^3 + 2
  }
}

Polynomial random_poly(Rng& rng, int degree) {
  std::vector<Integer> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(rng, -3, 3));
  if (c.back() == 0) c.back() = 1;
  return Polynomial::from_integers(c);
}

Rational random_rate(Rng& rng) {
  static const std::int64_t dens[] = {2, 3, 4, 5, 8};
  const std::int64_t den = dens[uniform(rng, 0, 4)];
  Rational r(uniform(rng, 1, den - 1), den);
  r.canonicalize();
  return r;
}

GaussianRational random_scalar(Rng& rng, bool complex) {
  return complex ? GaussianRational(random_rational(rng), random_rational(rng)) : GaussianRational(random_rational(rng));
}

TailTerm random_rapid_tail(Rng& rng, bool complex) {
  const Polynomial q = random_denominator(rng);
  const Polynomial p = random_poly(rng, static_cast<int>(uniform(rng, 0, 2)));
  return TailTerm(random_set(rng), p, q, random_rate(rng), random_scalar(rng, complex));
}

TailTerm random_rate_one_tail(Rng& rng, bool complex, int min_decay) {
  const Polynomial q = random_denominator(rng);
  const int max_deg = q.degree() - min_decay;
  const Polynomial p = random_poly(rng, static_cast<int>(uniform(rng, 0, std::max(0, max_deg))));
  if (p.degree() > max_deg) return TailTerm(random_set(rng), Polynomial(1), q * q, 1, random_scalar(rng, complex));
  return TailTerm(random_set(rng), p, q, 1, random_scalar(rng, complex));
}

}  // namespace

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
  Rational r(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
  r.canonicalize();
  return r;
}

DefinableSet random_set(Rng& rng, const RandomSetOptions& opts) {
  const std::int64_t m = uniform(rng, 1, opts.max_modulus);
  DefinableSet s;
  switch (uniform(rng, 0, 5)) {
    case 0: {
      std::vector<std::int64_t> pts;
      for (int i = 0, k = static_cast<int>(uniform(rng, 0, 5)); i < k; ++i)
        pts.push_back(uniform(rng, -opts.exception_range, opts.exception_range));
      return DefinableSet::finite(pts);
    }
    case 1: {
      const std::int64_t a = uniform(rng, -opts.exception_range, opts.exception_range);
      return coin(rng) ? DefinableSet::at_least(a) : DefinableSet::at_most(a);
    }
    default:
      s = DefinableSet::periodic(m, random_residues(rng, m), coin(rng, 0.7) ? random_residues(rng, m) : std::vector<std::int64_t>{});
  }
  std::vector<std::int64_t> flips;
  for (int i = 0, k = static_cast<int>(uniform(rng, 0, opts.max_exceptions)); i < k; ++i)
    flips.push_back(uniform(rng, -opts.exception_range, opts.exception_range));
  if (flips.empty()) return s;
  const DefinableSet f = DefinableSet::finite(flips);
  return (s - f) | (f - s);
}

DefinableSet random_infinite_set(Rng& rng, const RandomSetOptions& opts) {
  for (;;) {
    DefinableSet s = random_set(rng, opts);
    if (!s.is_finite()) return s;
  }
}

Direction random_direction(Rng& rng, std::int64_t max_modulus) {
  const std::int64_t m = uniform(rng, 1, max_modulus);
  return Direction{coin(rng) ? Sign::Plus : Sign::Minus, m, uniform(rng, 0, m - 1)};
}

SymbolicSequence random_step_sequence(Rng& rng, int max_terms, bool complex) {
  std::vector<StepTerm> steps;
  for (int i = 0, k = static_cast<int>(uniform(rng, 0, max_terms)); i < k; ++i)
    steps.push_back({random_scalar(rng, complex), random_set(rng)});
  return normalize(SymbolicSequence(std::move(steps), {}));
}

SymbolicSequence random_schwartz(Rng& rng) {
  std::vector<StepTerm> steps;
  for (int i = 0, k = static_cast<int>(uniform(rng, 0, 3)); i < k; ++i) {
    std::vector<std::int64_t> pts;
    for (int j = 0, l = static_cast<int>(uniform(rng, 1, 3)); j < l; ++j) pts.push_back(uniform(rng, -15, 15));
    steps.push_back({random_scalar(rng, coin(rng, 0.3)), DefinableSet::finite(pts)});
  }
  std::vector<TailTerm> tails;
  for (int i = 0, k = static_cast<int>(uniform(rng, 1, 3)); i < k; ++i) tails.push_back(random_rapid_tail(rng, coin(rng, 0.3)));
  return normalize(SymbolicSequence(std::move(steps), std::move(tails)));
}

SymbolicSequence random_smooth(Rng& rng) {
  const bool complex = coin(rng, 0.3);
  SymbolicSequence s = random_step_sequence(rng, 3, complex);
  std::vector<TailTerm> tails;
  for (int i = 0, k = static_cast<int>(uniform(rng, 0, 2)); i < k; ++i) tails.push_back(random_rapid_tail(rng, complex));
  return s + SymbolicSequence({}, std::move(tails));
}

SymbolicSequence random_bounded(Rng& rng) {
  const bool complex = coin(rng, 0.3);
  SymbolicSequence s = random_smooth(rng);
  std::vector<TailTerm> tails;
  for (int i = 0, k = static_cast<int>(uniform(rng, 0, 2)); i < k; ++i) tails.push_back(random_rate_one_tail(rng, complex, 0));
  return s + SymbolicSequence({}, std::move(tails));
}

SymbolicSequence random_fast_limit(Rng& rng) {
  const bool complex = coin(rng, 0.3);
  SymbolicSequence s = random_smooth(rng);
  std::vector<TailTerm> tails;
  for (int i = 0, k = static_cast<int>(uniform(rng, 0, 2)); i < k; ++i) tails.push_back(random_rate_one_tail(rng, complex, 2));
  return s + SymbolicSequence({}, std::move(tails));
}

SymbolicSequence random_unit_range(Rng& rng) {
  // Pieces valued in [0, 1]: indicators, r^|n|, a/(n^2+a), n^2/(n^2+a).
  const int k = static_cast<int>(uniform(rng, 1, 4));
  std::vector<Rational> w;
  Rational total(0);
  for (int i = 0; i < k; ++i) {
    w.emplace_back(uniform(rng, 0, 8));
    total += w.back();
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  // Scale so the weights sum to s <= 1.
  Rational s(uniform(rng, 1, 8), 8);
  s.canonicalize();
  SymbolicSequence out;
  for (int i = 0; i < k; ++i) {
    const Rational wi = w[i] * s / total;
    const DefinableSet support = random_set(rng);
    SymbolicSequence piece;
    switch (uniform(rng, 0, 3)) {
      case 0: piece = SymbolicSequence::indicator(support); break;
      case 1: piece = SymbolicSequence::tail(TailTerm(support, 1, 1, random_rate(rng))); break;
      case 2: {
        const std::int64_t a = uniform(rng, 1, 5);
        piece = SymbolicSequence::tail(TailTerm(support, a, Polynomial::from_integers({a, 0, 1}), 1));
        break;
      }
      default: {
        const std::int64_t a = uniform(rng, 1, 5);
        piece = SymbolicSequence::tail(TailTerm(support, Polynomial::monomial(1, 2), Polynomial::from_integers({a, 0, 1}), 1));
      }
    }
    out = out + scale(wi, piece);
  }
  return out;
}

}  // namespace betaz
