#include <gtest/gtest.h>

#include "betaz/error.hpp"
#include "betaz/frontend.hpp"
#include "betaz/serialize.hpp"
#include "betaz/setalg.hpp"
#include "oracles.hpp"

using betaz::DefinableSet;
using betaz::Sign;

namespace {

DefinableSet evens() { return DefinableSet::residue_class(2, 0); }
DefinableSet odds() { return DefinableSet::residue_class(2, 1); }
DefinableSet mult3() { return DefinableSet::residue_class(3, 0); }

bool agree_on(const DefinableSet& s, const oracle::Pred& p, std::int64_t w) {
  for (std::int64_t n = -w; n <= w; ++n)
    if (s.contains(n) != p(n)) return false;
  return true;
}

std::vector<oracle::SetCase> random_cases(std::size_t k, std::uint64_t seed) {
  oracle::Rng rng(seed);
  std::vector<oracle::SetCase> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(oracle::random_set_case(rng));
  return out;
}

}  // namespace

TEST(SetalgExamples, PeriodicEvens) {
  const auto s = DefinableSet::periodic(2, {0}, {0});
  EXPECT_EQ(s, evens());
  for (std::int64_t n = -10; n <= 10; ++n) EXPECT_EQ(s.contains(n), n % 2 == 0);
}

TEST(SetalgExamples, FiniteHasEmptyPeriodicPart) {
  const auto s = DefinableSet::finite({1, 4, 9});
  EXPECT_TRUE(s.is_finite());
  EXPECT_EQ(s.cardinality(), 3);
  EXPECT_TRUE(s.residues(Sign::Plus).empty());
  EXPECT_TRUE(s.residues(Sign::Minus).empty());
  EXPECT_EQ(s.elements(), (std::vector<std::int64_t>{1, 4, 9}));
}

TEST(SetalgExamples, CofiniteIsComplementOfFinite) {
  EXPECT_EQ(DefinableSet::cofinite({0}), ~DefinableSet::finite({0}));
  EXPECT_FALSE(DefinableSet::cofinite({0}).contains(0));
  EXPECT_TRUE(DefinableSet::cofinite({0}).contains(1));
}

TEST(SetalgExamples, EvensAndMultiplesOfThree) {
  const auto s = evens() & mult3();
  EXPECT_EQ(s, DefinableSet::residue_class(6, 0));
  EXPECT_EQ(s.modulus(), 6);
  for (std::int64_t n = -30; n <= 30; ++n) EXPECT_EQ(s.contains(n), n % 6 == 0) << n;
  EXPECT_TRUE(s.contains(18));
}

TEST(SetalgExamples, Queries) {
  EXPECT_FALSE(evens().is_finite());
  EXPECT_THROW((void)evens().cardinality(), betaz::DomainError);
  EXPECT_THROW((void)evens().elements(), betaz::DomainError);
  EXPECT_TRUE(DefinableSet::empty().is_empty());
  EXPECT_TRUE((evens() & odds()).is_empty());
  EXPECT_EQ(evens().enumerate(-4, 4), (std::vector<std::int64_t>{-4, -2, 0, 2, 4}));
  EXPECT_THROW((void)evens().enumerate(3, 1), betaz::ValidationError);
}

TEST(SetalgExamples, ValidationErrors) {
  EXPECT_THROW(DefinableSet::periodic(0, {}, {}), betaz::ValidationError);
  EXPECT_THROW(DefinableSet::periodic(3, {3}, {}), betaz::ValidationError);
  EXPECT_THROW(DefinableSet::residue_class(4, -1), betaz::ValidationError);
  EXPECT_THROW(DefinableSet::interval(5, 2), betaz::ValidationError);
}

TEST(SetalgExamples, HalfLinesAndDirections) {
  const auto pos = DefinableSet::at_least(0);
  EXPECT_TRUE(pos.infinite_in(Sign::Plus));
  EXPECT_FALSE(pos.infinite_in(Sign::Minus));
  EXPECT_EQ(pos | ~pos, DefinableSet::all());
  EXPECT_EQ(DefinableSet::at_least(3).first_from(-10, Sign::Plus), 3);
  EXPECT_EQ(DefinableSet::at_most(-3).first_from(0, Sign::Minus), -3);
  EXPECT_EQ(DefinableSet::finite({-7, 4}).least_magnitude_member(), 4);
}

TEST(SetalgExamples, PeriodPerDirection) {
  const auto s = DefinableSet::periodic(6, {0, 2, 4}, {0, 3});
  EXPECT_EQ(s.period(Sign::Plus), 2);
  EXPECT_EQ(s.period(Sign::Minus), 3);
  EXPECT_EQ(s.modulus(), 6);
}

TEST(SetalgOracle, MembershipMatchesPredicateOnWindow) {
  for (const auto& c : random_cases(400, 11)) ASSERT_TRUE(agree_on(c.set, c.pred, 200)) << c.text;
}

TEST(SetalgOracle, QueriesMatchBruteForce) {
  for (const auto& c : random_cases(300, 12)) {
    // Beyond the threshold every set follows its rule, so two periods past it decide finiteness.
    const std::int64_t far = c.set.threshold() + 2 * c.set.modulus() + 40;
    bool pos_inf = false, neg_inf = false;
    for (std::int64_t n = far; n < far + c.set.modulus(); ++n) pos_inf = pos_inf || c.pred(n);
    for (std::int64_t n = -far; n > -far - c.set.modulus(); --n) neg_inf = neg_inf || c.pred(n);
    ASSERT_EQ(c.set.infinite_in(Sign::Plus), pos_inf) << c.text;
    ASSERT_EQ(c.set.infinite_in(Sign::Minus), neg_inf) << c.text;
    if (!pos_inf && !neg_inf) {
      std::vector<std::int64_t> brute;
      for (std::int64_t n = -far; n <= far; ++n)
        if (c.pred(n)) brute.push_back(n);
      ASSERT_EQ(c.set.elements(), brute) << c.text;
      ASSERT_EQ(c.set.is_empty(), brute.empty());
    }
  }
}

TEST(SetalgProperties, BooleanAlgebraLaws) {
  const auto cs = random_cases(120, 13);
  const DefinableSet all = DefinableSet::all(), none = DefinableSet::empty();
  for (std::size_t i = 0; i + 2 < cs.size(); i += 3) {
    const auto &a = cs[i].set, &b = cs[i + 1].set, &c = cs[i + 2].set;
    EXPECT_EQ((a | b) | c, a | (b | c));
    EXPECT_EQ((a & b) & c, a & (b & c));
    EXPECT_EQ(a | b, b | a);
    EXPECT_EQ(a & b, b & a);
    EXPECT_EQ(a & (b | c), (a & b) | (a & c));
    EXPECT_EQ(a | (b & c), (a | b) & (a | c));
    EXPECT_EQ(~(a | b), ~a & ~b);
    EXPECT_EQ(~(a & b), ~a | ~b);
    EXPECT_EQ(a | (a & b), a);
    EXPECT_EQ(a & (a | b), a);
    EXPECT_EQ(~~a, a);
    EXPECT_EQ(a | ~a, all);
    EXPECT_EQ(a & ~a, none);
    EXPECT_EQ(a - b, a & ~b);
    EXPECT_EQ((a & b).subset_of(a), true);
    EXPECT_EQ(a.intersects(b), !(a & b).is_empty());
  }
}

TEST(SetalgProperties, CanonicalFormIsIdempotentAndFaithful) {
  for (const auto& c : random_cases(200, 14)) {
    const auto& s = c.set;
    // Rebuild from the raw rule tables and exceptions: canonicalization again.
    const auto again = DefinableSet::from_rule(s.modulus(), s.rule_table(Sign::Plus), s.rule_table(Sign::Minus),
                                               s.exceptions());
    ASSERT_EQ(again, s) << c.text;
    // Inflate the modulus and rebuild: must come back to the same canonical form.
    const std::int64_t big = s.modulus() * 6;
    std::vector<bool> pos(big), neg(big);
    for (std::int64_t r = 0; r < big; ++r) {
      pos[r] = s.rule(Sign::Plus, r);
      neg[r] = s.rule(Sign::Minus, r);
    }
    const auto inflated = DefinableSet::from_rule(big, pos, neg, s.exceptions());
    ASSERT_EQ(inflated, s) << c.text;
    ASSERT_TRUE(agree_on(inflated, c.pred, 200));
  }
}

TEST(SetalgProperties, EqualityIffAgreementOnFiniteWindow) {
  const auto cs = random_cases(160, 15);
  int equal_pairs = 0;
  for (std::size_t i = 0; i + 1 < cs.size(); i += 2) {
    const auto &s = cs[i].set, &t = cs[i + 1].set;
    const std::int64_t w = std::max(s.threshold(), t.threshold());
    const std::int64_t m = std::lcm(s.modulus(), t.modulus());
    bool agree = true;
    for (std::int64_t n = -(w + m); n <= w + m; ++n) agree = agree && s.contains(n) == t.contains(n);
    ASSERT_EQ(s == t, agree) << cs[i].text << " vs " << cs[i + 1].text;
    equal_pairs += s == t;
    // same set, different construction
    const auto u = (s | t) - (t - s);
    ASSERT_EQ(u == s, true);
  }
  (void)equal_pairs;
}

TEST(SetalgSerialization, JsonRoundTrip) {
  for (const auto& c : random_cases(200, 16)) {
    const auto j = betaz::to_json(c.set);
    ASSERT_EQ(betaz::set_from_json(j), c.set) << j.dump();
    ASSERT_EQ(betaz::set_from_json(betaz::Json::parse(j.dump())), c.set);
  }
}

TEST(SetalgSerialization, JsonShape) {
  const auto j = betaz::to_json(evens() | DefinableSet::finite({3}));
  EXPECT_EQ(j["modulus"], 2);
  EXPECT_EQ(j["residues_pos"], betaz::Json::array({0}));
  EXPECT_EQ(j["residues_neg"], betaz::Json::array({0}));
  EXPECT_EQ(j["threshold"], 4);
  EXPECT_EQ(j["window"], betaz::Json::array({-4, -2, 0, 2, 3}));
}

TEST(SetalgSerialization, RejectsBadWindowMember) {
  EXPECT_THROW(DefinableSet::from_window(2, {0}, {0}, 2, {5}), betaz::ValidationError);
}

TEST(SetalgSerialization, DslRoundTrip) {
  for (const auto& c : random_cases(150, 17)) {
    const std::string text = c.set.to_dsl();
    ASSERT_EQ(betaz::dsl::parse_set(text), c.set) << text;
    ASSERT_EQ(betaz::dsl::parse_set(c.text), c.set) << c.text;
  }
}
