#include "betaz/cells.hpp"

#include "betaz/error.hpp"

namespace betaz {

bool compatible(const DefinableSet& set, const Direction& pt) { return pt.modulus % set.period(pt.sign) == 0; }

void require_compatible(const SymbolicSequence& s, const Direction& pt) {
  const std::int64_t period = s.direction_period(pt.sign);
  if (pt.modulus % period == 0) return;
  const std::int64_t required = to_int64(lcm(Integer(period), Integer(pt.modulus)));
  throw RefinePointError("refine point " + to_string(pt) + " to modulus " + std::to_string(required), required);
}

std::vector<Direction> direction_cells(const SymbolicSequence& normalized) {
  const std::int64_t m = normalized.joint_modulus();
  std::vector<Direction> out;
  out.reserve(static_cast<std::size_t>(2 * m));
  for (const Sign s : {Sign::Plus, Sign::Minus})
    for (std::int64_t r = 0; r < m; ++r) out.push_back(Direction{s, m, r});
  return out;
}

CellForm cell_form(const SymbolicSequence& normalized, const Direction& pt) {
  require_compatible(normalized, pt);
  CellForm form;
  Rational re(0), im(0);
  for (const auto& st : normalized.steps()) {
    if (!st.support.rule(pt.sign, pt.residue)) continue;
    re += st.value.re();
    im += st.value.im();
  }
  form.re = ExpRational::constant(re);
  form.im = ExpRational::constant(im);
  for (const auto& t : normalized.tails()) {
    if (t.p().is_zero() || !t.support().rule(pt.sign, pt.residue)) continue;
    const RatFunc f(t.p(), t.q());
    form.re.add_term(t.rate(), f * t.coeff().re());
    form.im.add_term(t.rate(), f * t.coeff().im());
  }
  return form;
}

}  // namespace betaz
