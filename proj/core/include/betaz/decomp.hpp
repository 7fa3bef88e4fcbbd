#pragma once

#include <vector>

#include "betaz/rational.hpp"
#include "betaz/seqalg.hpp"
#include "betaz/setalg.hpp"

namespace betaz {

struct DyadicLevel {
  Rational weight;  // 2^-q
  DefinableSet projection;
};

/// phi = sum_q 2^-q·1_{p_q} + remainder, with 0 <= remainder <= remainder_bound.
struct DyadicExpansion {
  std::vector<DyadicLevel> levels;
  unsigned depth = 0;
  /// 2^-depth, or the exact sup when the remainder is a pure step function.
  Rational remainder_bound;
  SymbolicSequence remainder;
};

/// phi = sum c_q·1_{p_q}: disjoint nonempty projections, distinct nonzero
/// constants sorted ascending.
struct LevelTerm {
  GaussianRational constant;
  DefinableSet projection;
};
struct LevelExpansion {
  std::vector<LevelTerm> terms;
};

/// Throws DomainError naming the least-magnitude n with phi(n) outside [0, 1]
/// (or phi not real).
void require_unit_range(const SymbolicSequence& phi);

/// Greedy binary expansion: p_q = {remainder >= 2^-q}. Requires depth >= 1.
DyadicExpansion dyadic_decompose(const SymbolicSequence& phi, unsigned depth = 16);

/// Throws DomainError when phi has tail terms.
LevelExpansion level_decompose(const SymbolicSequence& phi);

SymbolicSequence recompose(const DyadicExpansion& e);
SymbolicSequence recompose(const LevelExpansion& e);

}  // namespace betaz
