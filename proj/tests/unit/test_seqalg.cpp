#include <gtest/gtest.h>

#include <cmath>

#include "betaz/error.hpp"
#include "betaz/serialize.hpp"
#include "betaz/seqalg.hpp"
#include "oracles.hpp"

using betaz::DefinableSet;
using betaz::GaussianRational;
using betaz::Polynomial;
using betaz::Rational;
using betaz::SymbolicSequence;

namespace {

constexpr std::int64_t kWindow = 200;

DefinableSet evens() { return DefinableSet::residue_class(2, 0); }
DefinableSet odds() { return DefinableSet::residue_class(2, 1); }

SymbolicSequence inv_n2_plus_1() { return SymbolicSequence::rational(Polynomial(1), Polynomial::from_integers({1, 0, 1})); }

Rational q(long a, unsigned long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

template <class F>
void expect_pointwise(const SymbolicSequence& s, F f, std::int64_t w = kWindow) {
  for (std::int64_t n = -w; n <= w; ++n) ASSERT_EQ(betaz::eval(s, n), f(n)) << "n = " << n;
}

}  // namespace

TEST(SeqalgExamples, Eval) {
  EXPECT_EQ(betaz::eval(inv_n2_plus_1(), 0), GaussianRational(1));
  EXPECT_EQ(betaz::eval(inv_n2_plus_1(), 1), GaussianRational(q(1, 2)));
  const auto s = SymbolicSequence::indicator(evens()) + SymbolicSequence::step(3, DefinableSet::finite({5}));
  EXPECT_EQ(betaz::eval(s, 5), GaussianRational(3));
  EXPECT_EQ(betaz::eval(s, 4), GaussianRational(1));
}

TEST(SeqalgExamples, IndicatorProduct) {
  const auto p = SymbolicSequence::indicator(evens()) * SymbolicSequence::indicator(DefinableSet::residue_class(3, 0));
  EXPECT_EQ(p, SymbolicSequence::indicator(DefinableSet::residue_class(6, 0)));
}

TEST(SeqalgExamples, AddNegationIsZero) {
  oracle::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto phi = oracle::random_raw(rng).build();
    EXPECT_TRUE((phi + betaz::scale(-1, phi)).is_zero());
  }
}

TEST(SeqalgExamples, GeometricSquared) {
  const auto g = SymbolicSequence::geometric(q(1, 2));
  const auto prod = g * g;
  EXPECT_EQ(prod, SymbolicSequence::geometric(q(1, 4)));
  expect_pointwise(prod, [](std::int64_t n) { return GaussianRational(oracle::power_abs(q(1, 4), n)); }, 20);
}

TEST(SeqalgExamples, ThresholdSets) {
  EXPECT_EQ(betaz::threshold_set(inv_n2_plus_1(), q(1, 2)), DefinableSet::finite({-1, 0, 1}));
  EXPECT_EQ(betaz::threshold_set(SymbolicSequence::constant(q(3, 4)), q(1, 2)), DefinableSet::all());
  EXPECT_EQ(betaz::threshold_set(SymbolicSequence::indicator(evens()), q(1, 2)), evens());
  EXPECT_THROW(betaz::threshold_set(inv_n2_plus_1(), 0), betaz::DomainError);
  EXPECT_THROW(betaz::threshold_set(SymbolicSequence::constant(GaussianRational(0, 1)), q(1, 2)), betaz::DomainError);
}

TEST(SeqalgExamples, SplitPosNeg) {
  const auto e = SymbolicSequence::indicator(evens()), o = SymbolicSequence::indicator(odds());
  const auto s1 = betaz::split_pos_neg(e - o);
  EXPECT_EQ(s1.positive, e);
  EXPECT_EQ(s1.negative, o);
  const auto s2 = betaz::split_pos_neg(SymbolicSequence::constant(-2));
  EXPECT_TRUE(s2.positive.is_zero());
  EXPECT_EQ(s2.negative, SymbolicSequence::constant(2));
  // n·2^-|n| is odd: positive for n > 0, negative for n < 0
  const auto odd = SymbolicSequence::tail(betaz::TailTerm(DefinableSet::all(), Polynomial::from_integers({0, 1}),
                                                          Polynomial(1), q(1, 2)));
  const auto s3 = betaz::split_pos_neg(odd);
  for (std::int64_t n = -40; n <= 40; ++n) {
    const auto p = betaz::eval(s3.positive, n), m = betaz::eval(s3.negative, n);
    ASSERT_EQ(p - m, betaz::eval(odd, n));
    ASSERT_TRUE(p.re() >= 0 && m.re() >= 0);
    ASSERT_TRUE(p.is_zero() || m.is_zero());
    ASSERT_EQ(!p.is_zero(), n > 0);
    ASSERT_EQ(!m.is_zero(), n < 0);
  }
  EXPECT_THROW(betaz::split_pos_neg(SymbolicSequence::constant(GaussianRational(1, 1))), betaz::DomainError);
}

TEST(SeqalgExamples, Seminorms) {
  const auto g = betaz::schwartz_seminorm(SymbolicSequence::geometric(q(1, 2)), 1);
  EXPECT_FALSE(g.infinite);
  EXPECT_TRUE(g.exact());
  EXPECT_EQ(g.lo, q(1, 2));
  EXPECT_TRUE(betaz::schwartz_seminorm(SymbolicSequence::indicator(evens()), 1).infinite);
  const auto sup = betaz::sup_norm(inv_n2_plus_1());
  EXPECT_TRUE(sup.exact());
  EXPECT_EQ(sup.lo, 1);
}

TEST(SeqalgExamples, SeminormIrrationalGivesInterval) {
  // |(1+i)/(n^2+1)| peaks at sqrt(2)
  const auto s = betaz::scale(GaussianRational(1, 1), inv_n2_plus_1());
  const auto v = betaz::sup_norm(s, q(1, 1000000));
  EXPECT_FALSE(v.exact());
  EXPECT_LE(v.lo * v.lo, 2);
  EXPECT_GE(v.hi * v.hi, 2);
  EXPECT_LE(v.hi - v.lo, q(1, 1000000));
}

TEST(SeqalgExamples, NormalizeFolding) {
  EXPECT_EQ(SymbolicSequence::indicator(evens()) + SymbolicSequence::indicator(odds()), SymbolicSequence::constant(1));
  const auto sq = Polynomial::from_integers({1, 0, 1});
  const auto folded = betaz::normalize(SymbolicSequence::tail(betaz::TailTerm(DefinableSet::all(), sq, sq, 1)));
  EXPECT_EQ(folded, SymbolicSequence::constant(1));
  EXPECT_TRUE(folded.tails().empty());
  const auto cancel = betaz::normalize(SymbolicSequence(
      {}, {betaz::TailTerm(DefinableSet::all(), Polynomial(1), sq, 1),
           betaz::TailTerm(DefinableSet::all(), Polynomial(-1), sq, 1)}));
  EXPECT_TRUE(cancel.tails().empty());
  EXPECT_TRUE(cancel.is_zero());
}

TEST(SeqalgExamples, TailValidation) {
  // n^2 - 4 vanishes at n = 2
  EXPECT_THROW(betaz::TailTerm(DefinableSet::all(), Polynomial(1), Polynomial::from_integers({-4, 0, 1}), 1),
               betaz::ValidationError);
  // unbounded: deg p > deg q at rate 1
  EXPECT_THROW(betaz::TailTerm(DefinableSet::all(), Polynomial::from_integers({0, 0, 1}), Polynomial(1), 1),
               betaz::ValidationError);
  EXPECT_THROW(SymbolicSequence::geometric(q(3, 2)), betaz::ValidationError);
  EXPECT_THROW(SymbolicSequence::geometric(0), betaz::ValidationError);
  // rapid decay lets the numerator grow
  EXPECT_NO_THROW(betaz::TailTerm(DefinableSet::all(), Polynomial::from_integers({0, 0, 1}), Polynomial(1), q(1, 2)));
}

TEST(SeqalgExamples, DecayClasses) {
  using D = betaz::TailTerm::Decay;
  EXPECT_EQ(betaz::TailTerm(DefinableSet::all(), Polynomial(1), Polynomial(1), q(1, 2)).decay(), D::Rapid);
  EXPECT_EQ(betaz::TailTerm(DefinableSet::all(), Polynomial(1), Polynomial::from_integers({1, 0, 1}), 1).decay(),
            D::Polynomial);
  const auto sq = Polynomial::from_integers({1, 0, 1});
  EXPECT_EQ(betaz::TailTerm(DefinableSet::all(), Polynomial::from_integers({0, 0, 1}), sq, 1).decay(),
            D::ConvergentToConstant);
}

TEST(SeqalgOracle, OperationsMatchPointwiseArithmetic) {
  oracle::Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const auto a = oracle::random_raw(rng), b = oracle::random_raw(rng);
    const auto sa = a.build(), sb = b.build();
    const GaussianRational c(oracle::small_rational(rng), oracle::small_rational(rng));
    const auto set = oracle::random_set_case(rng, 2);
    const auto sum = sa + sb, diff = sa - sb, prod = sa * sb, sc = betaz::scale(c, sa), cj = betaz::conj(sa),
               neg = -sa, res = betaz::restrict_to(sa, set.set);
    for (std::int64_t n = -kWindow; n <= kWindow; ++n) {
      const auto va = a.at(n), vb = b.at(n);
      ASSERT_EQ(betaz::eval(sa, n), va);
      ASSERT_EQ(betaz::eval(sum, n), va + vb);
      ASSERT_EQ(betaz::eval(diff, n), va - vb);
      ASSERT_EQ(betaz::eval(prod, n), va * vb);
      ASSERT_EQ(betaz::eval(sc, n), c * va);
      ASSERT_EQ(betaz::eval(cj, n), va.conj());
      ASSERT_EQ(betaz::eval(neg, n), -va);
      ASSERT_EQ(betaz::eval(res, n), set.pred(n) ? va : GaussianRational());
    }
  }
}

TEST(SeqalgOracle, NumericEvalTracksExact) {
  oracle::Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    const auto a = oracle::random_raw(rng);
    const auto s = a.build();
    for (std::int64_t n = -60; n <= 60; ++n) {
      const auto v = a.at(n);
      const auto z = betaz::eval_numeric(s, n);
      ASSERT_NEAR(static_cast<double>(z.real()), v.re().get_d(), 1e-12);
      ASSERT_NEAR(static_cast<double>(z.imag()), v.im().get_d(), 1e-12);
    }
  }
}

TEST(SeqalgProperties, NormalizeIsIdempotentAndUnique) {
  oracle::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const auto a = oracle::random_raw(rng);
    const auto n1 = betaz::normalize(a.build());
    ASSERT_EQ(betaz::normalize(n1), n1);
    ASSERT_TRUE(n1.is_normalized());
    expect_pointwise(n1, [&](std::int64_t n) { return a.at(n); });
    // The same function assembled in reverse order, split in halves.
    oracle::RawSeq rev = a;
    std::reverse(rev.steps.begin(), rev.steps.end());
    std::reverse(rev.tails.begin(), rev.tails.end());
    SymbolicSequence pieces;
    for (const auto& t : rev.tails) pieces = pieces + oracle::RawSeq{{}, {t}}.build();
    for (const auto& s : rev.steps) pieces = pieces + oracle::RawSeq{{s}, {}}.build();
    ASSERT_EQ(betaz::normalize(pieces), n1);
    ASSERT_TRUE(betaz::equivalent(pieces, a.build()));
  }
}

TEST(SeqalgProperties, NormalFormShape) {
  oracle::Rng rng(24);
  for (int i = 0; i < 60; ++i) {
    const auto s = betaz::normalize(oracle::random_raw(rng).build());
    const auto& st = s.steps();
    for (std::size_t a = 0; a < st.size(); ++a) {
      ASSERT_FALSE(st[a].value.is_zero());
      ASSERT_FALSE(st[a].support.is_empty());
      for (std::size_t b = a + 1; b < st.size(); ++b) {
        ASSERT_FALSE(st[a].support.intersects(st[b].support));
        ASSERT_LT(st[a].value, st[b].value);
      }
    }
    for (const auto& t : s.tails()) {
      ASSERT_TRUE(t.support().exceptions().empty());
      if (t.rate() == 1) {
        ASSERT_LT(t.p().degree(), t.q().degree());
      }
    }
  }
}

TEST(SeqalgProperties, SplitPosNegPostconditions) {
  oracle::Rng rng(25);
  oracle::RawOptions real;
  real.complex = false;
  for (int i = 0; i < 60; ++i) {
    const auto a = oracle::random_raw(rng, real);
    const auto sp = betaz::split_pos_neg(a.build());
    for (std::int64_t n = -kWindow; n <= kWindow; ++n) {
      const auto p = betaz::eval(sp.positive, n), m = betaz::eval(sp.negative, n);
      ASSERT_EQ(p - m, a.at(n));
      ASSERT_GE(p.re(), 0);
      ASSERT_GE(m.re(), 0);
      ASSERT_TRUE(p.is_zero() || m.is_zero());
    }
  }
}

TEST(SeqalgProperties, ThresholdSetMatchesEvaluation) {
  oracle::Rng rng(26);
  oracle::RawOptions real;
  real.complex = false;
  for (int i = 0; i < 60; ++i) {
    const auto a = oracle::random_raw(rng, real);
    const Rational t = q(static_cast<long>(oracle::uniform(rng, 1, 9)), 8);
    const auto set = betaz::threshold_set(a.build(), t);
    for (std::int64_t n = -kWindow; n <= kWindow; ++n) ASSERT_EQ(set.contains(n), a.at(n).re() >= t) << n;
  }
}

TEST(SeqalgProperties, SeminormBracketsWindowedMax) {
  oracle::Rng rng(27);
  for (int i = 0; i < 40; ++i) {
    const auto a = oracle::random_raw(rng);
    const auto s = a.build();
    for (unsigned d = 0; d <= 2; ++d) {
      const auto v = betaz::schwartz_seminorm(s, d, q(1, 1000000));
      const auto weighted = [&](std::int64_t n) {
        Rational w = 1;
        for (unsigned k = 0; k < d; ++k) w *= Rational(static_cast<long>(n));
        return a.at(n) * GaussianRational(w);
      };
      if (v.infinite) {
        // growth confirmed numerically further out
        ASSERT_TRUE(v.unbounded_at.has_value());
        continue;
      }
      for (std::int64_t w : {10, 50, 200}) {
        const Rational m2 = oracle::window_max_sq(weighted, w);
        ASSERT_LE(m2, v.hi * v.hi) << "d=" << d << " N=" << w;
      }
      ASSERT_GE(oracle::window_max_sq(weighted, 400), v.lo * v.lo) << "d=" << d;
    }
  }
}

TEST(SeqalgProperties, InfiniteSeminormIsGenuinelyUnbounded) {
  // Windowed values must pass 10^6 by N = 10^4 whenever the verdict is infinite.
  const std::vector<std::pair<SymbolicSequence, unsigned>> cases = {
      {SymbolicSequence::indicator(evens()), 2},
      {inv_n2_plus_1(), 4},
      {SymbolicSequence::constant(GaussianRational(0, 3)), 2},
  };
  for (const auto& [s, d] : cases) {
    const auto v = betaz::schwartz_seminorm(s, d);
    ASSERT_TRUE(v.infinite);
    ASSERT_TRUE(v.unbounded_at.has_value());
    double best = 0;
    for (std::int64_t n = -10000; n <= 10000; ++n)
      best = std::max(best, std::pow(std::abs(static_cast<double>(n)), d) * std::abs(betaz::eval_numeric(s, n)));
    EXPECT_GT(best, 1e6);
  }
}

TEST(SeqalgSerialization, JsonRoundTrip) {
  oracle::Rng rng(28);
  for (int i = 0; i < 40; ++i) {
    const auto s = betaz::normalize(oracle::random_raw(rng).build());
    const auto j = betaz::to_json(s);
    ASSERT_EQ(betaz::sequence_from_json(betaz::Json::parse(j.dump())), s) << j.dump();
  }
}
