#include "betaz/decomp.hpp"

#include <algorithm>

#include "betaz/error.hpp"

namespace betaz {

namespace {

[[noreturn]] void range_violation(const SymbolicSequence& phi, std::int64_t n) {
  throw DomainError("value out of [0,1] at n = " + std::to_string(n) + " (value " + eval(phi, n).to_string() + ")");
}

}  // namespace

void require_unit_range(const SymbolicSequence& phi) {
  const SymbolicSequence x = normalize(phi);
  if (!x.is_real()) {
    // Some step or tail carries an imaginary part; find a point where it shows.
    const SymbolicSequence im = scale(GaussianRational(0, -1), x - conj(x));
    const DefinableSet nonzero = ~(at_least_set(im, 0) & at_least_set(-im, 0));
    if (const auto n = nonzero.least_magnitude_member()) range_violation(x, *n);
    throw DomainError("sequence is not real-valued");
  }
  const DefinableSet bad = ~at_least_set(x, 0) | ~at_least_set(-x, -1);
  if (const auto n = bad.least_magnitude_member()) range_violation(x, *n);
}

DyadicExpansion dyadic_decompose(const SymbolicSequence& phi, unsigned depth) {
  if (depth < 1) throw ValidationError("dyadic depth must be at least 1");
  require_unit_range(phi);
  DyadicExpansion out;
  out.depth = depth;
  SymbolicSequence rem = normalize(phi);
  Rational weight(1);
  for (unsigned q = 1; q <= depth; ++q) {
    weight /= 2;
    DefinableSet p = threshold_set(rem, weight);
    rem = rem - SymbolicSequence::step(weight, p);
    out.levels.push_back({weight, std::move(p)});
  }
  out.remainder_bound = weight;
  if (rem.tails().empty()) {
    Rational sup(0);
    for (const auto& st : rem.steps()) sup = std::max(sup, st.value.re());
    out.remainder_bound = std::min(weight, sup);
  }
  out.remainder = std::move(rem);
  return out;
}

LevelExpansion level_decompose(const SymbolicSequence& phi) {
  const SymbolicSequence x = normalize(phi);
  if (!x.tails().empty())
    throw DomainError("level form requires step function; tail part returned separately by classify");
  LevelExpansion out;
  for (const auto& st : x.steps()) out.terms.push_back({st.value, st.support});
  return out;
}

SymbolicSequence recompose(const DyadicExpansion& e) {
  std::vector<StepTerm> steps;
  for (const auto& l : e.levels) steps.push_back({l.weight, l.projection});
  return normalize(SymbolicSequence(std::move(steps), {}));
}

SymbolicSequence recompose(const LevelExpansion& e) {
  std::vector<StepTerm> steps;
  for (const auto& t : e.terms) steps.push_back({t.constant, t.projection});
  return normalize(SymbolicSequence(std::move(steps), {}));
}

}  // namespace betaz
