#include <algorithm>
#include <optional>

#include "betaz/cells.hpp"
#include "betaz/error.hpp"
#include "betaz/seqalg.hpp"

namespace betaz {

namespace {

constexpr std::int64_t kWindowCap = std::int64_t{1} << 22;

struct CellSquare {
  Rational limit;           // lim |n^d s(n)|^2 on the cell
  ExpRational excess;       // |n^d s(n)|^2 - limit
  bool excess_positive;     // excess eventually > 0
};

bool is_perfect_square(const Integer& z) { return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

Integer isqrt(const Integer& z) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

Rational abs_power_sq(std::int64_t n, unsigned d, const GaussianRational& v) {
  return v.norm2() * Rational(pow(Integer(n), 2 * d));
}

}  // namespace

SeminormValue schwartz_seminorm(const SymbolicSequence& s, unsigned d, const Rational& tolerance) {
  if (sgn(tolerance) <= 0) throw ValidationError("tolerance must be positive");
  const SymbolicSequence x = normalize(s);
  SeminormValue out;
  if (x.is_zero()) return out;

  std::int64_t n_min = std::max<std::int64_t>(x.threshold(), 1);
  std::vector<CellSquare> cells;
  Rational sup_sq(0);
  for (const Direction& pt : direction_cells(x)) {
    const CellForm form = cell_form(x, pt);
    const ExpRational g = (form.re * form.re + form.im * form.im).times_power(2 * d);
    if (!g.is_bounded()) {
      out.infinite = true;
      out.unbounded_at = pt;
      return out;
    }
    CellSquare cell{g.limit(), ExpRational(), false};
    cell.excess = g - ExpRational::constant(cell.limit);
    const EventualSign es = eventual_sign(cell.excess, pt.sign);
    n_min = std::max(n_min, es.from);
    cell.excess_positive = es.sign > 0;
    // Approached from below (or attained identically): the limit itself is the sup of the tail.
    if (!cell.excess_positive) sup_sq = std::max(sup_sq, cell.limit);
    cells.push_back(std::move(cell));
  }

  // Exact maximum over a growing window until every cell whose values sit
  // above their limit is certified to stay below the window maximum.
  Rational window_max(0);
  std::int64_t covered = -1;
  std::int64_t n = n_min;
  for (;;) {
    for (std::int64_t m = covered + 1; m <= n; ++m) {
      window_max = std::max(window_max, abs_power_sq(m, d, eval(x, m)));
      if (m != 0) window_max = std::max(window_max, abs_power_sq(-m, d, eval(x, -m)));
    }
    covered = n;
    bool done = true;
    for (const auto& cell : cells) {
      if (!cell.excess_positive) continue;
      const std::optional<Rational> tb = tail_bound(cell.excess, n + 1);
      if (!tb || window_max < cell.limit + *tb) {
        done = false;
        break;
      }
    }
    if (done) break;
    if (n > kWindowCap) throw DomainError("seminorm window search did not terminate");
    n *= 2;
  }
  sup_sq = std::max(sup_sq, window_max);

  const Integer& num = sup_sq.get_num();
  const Integer& den = sup_sq.get_den();
  if (is_perfect_square(num) && is_perfect_square(den)) {
    out.lo = Rational(isqrt(num), isqrt(den));
    out.lo.canonicalize();
    out.hi = out.lo;
    return out;
  }
  // lo = floor(sqrt(S)·K)/K with 1/K <= tolerance.
  Integer k = 1;
  while (Rational(1, 1) / Rational(k) > tolerance) k *= 2;
  const Integer scaled = floor(sup_sq * Rational(k * k));
  const Integer root = isqrt(scaled);
  out.lo = Rational(root, k);
  out.lo.canonicalize();
  out.hi = Rational(root + 1, k);
  out.hi.canonicalize();
  return out;
}

}  // namespace betaz
