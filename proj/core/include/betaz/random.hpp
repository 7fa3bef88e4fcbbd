#pragma once

#include <cstdint>
#include <random>

#include "betaz/point.hpp"
#include "betaz/seqalg.hpp"
#include "betaz/setalg.hpp"

namespace betaz {

using Rng = std::mt19937_64;

struct RandomSetOptions {
  std::int64_t max_modulus = 12;
  int max_exceptions = 4;
  std::int64_t exception_range = 20;
};

DefinableSet random_set(Rng& rng, const RandomSetOptions& opts = {});
/// A random infinite set (infinite in at least one direction).
DefinableSet random_infinite_set(Rng& rng, const RandomSetOptions& opts = {});
Direction random_direction(Rng& rng, std::int64_t max_modulus = 12);

/// Small rational a/b with |a| <= num_bound, 1 <= b <= den_bound.
Rational random_rational(Rng& rng, int num_bound = 6, int den_bound = 6);

/// Step functions with up to `max_terms` terms; complex constants when `complex`.
SymbolicSequence random_step_sequence(Rng& rng, int max_terms = 4, bool complex = false);
/// Finite steps plus rapidly decaying tails.
SymbolicSequence random_schwartz(Rng& rng);
/// Arbitrary steps plus rapidly decaying tails; every such sequence is smooth.
SymbolicSequence random_smooth(Rng& rng);
/// Steps plus tails of every decay class, including rate-1 tails.
SymbolicSequence random_bounded(Rng& rng);
/// Real sequence with values in [0, 1]: a sub-convex combination of [0,1]-valued pieces.
SymbolicSequence random_unit_range(Rng& rng);
/// Steps plus tails whose rate-1 parts decay at least like n^-2.
SymbolicSequence random_fast_limit(Rng& rng);

}  // namespace betaz
