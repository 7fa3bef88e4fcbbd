#pragma once

#include <cstdint>
#include <vector>

#include "betaz/asymptotic.hpp"
#include "betaz/point.hpp"
#include "betaz/seqalg.hpp"

namespace betaz {

/// The eventual behaviour of a normalized sequence on one direction cell:
/// s(n) = re(n) + i·im(n) for s·n beyond the sequence threshold with
/// n ≡ residue (mod modulus).
struct CellForm {
  ExpRational re;
  ExpRational im;
};

/// Throws RefinePointError unless every support of `s` is decided by `pt`
/// (its period in pt.sign divides pt.modulus).
void require_compatible(const SymbolicSequence& s, const Direction& pt);
bool compatible(const DefinableSet& set, const Direction& pt);

/// Every direction cell at the sequence's joint modulus, + side first.
std::vector<Direction> direction_cells(const SymbolicSequence& normalized);

/// Eventual form of `normalized` at `pt`; pt must be compatible.
CellForm cell_form(const SymbolicSequence& normalized, const Direction& pt);

/// Set with rule given per direction cell at modulus m and exact membership
/// on [-window, window]; `member` decides the window points.
template <class RuleFn, class MemberFn>
DefinableSet assemble_set(std::int64_t m, std::int64_t window, RuleFn rule, MemberFn member) {
  std::vector<bool> pos(static_cast<std::size_t>(m)), neg(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) {
    pos[r] = rule(Sign::Plus, r);
    neg[r] = rule(Sign::Minus, r);
  }
  std::vector<std::int64_t> flips;
  for (std::int64_t n = -window; n <= window; ++n) {
    const bool base = n >= 0 ? pos[mod_floor(n, m)] : neg[mod_floor(n, m)];
    if (member(n) != base) flips.push_back(n);
  }
  return DefinableSet::from_rule(m, std::move(pos), std::move(neg), std::move(flips));
}

}  // namespace betaz
