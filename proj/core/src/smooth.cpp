#include "betaz/smooth.hpp"

#include <algorithm>
#include <limits>
#include <variant>

#include "betaz/cells.hpp"
#include "betaz/error.hpp"
#include "betaz/filters.hpp"
#include "betaz/random.hpp"

namespace betaz {

namespace {

constexpr std::int64_t kSampleSearchCap = 1'000'000;
constexpr std::size_t kSampleCount = 3;

Rational power_sq(std::int64_t n, unsigned d) { return Rational(pow(Integer(n), 2 * static_cast<std::uint64_t>(d))); }

// Walks n along the cell of pt beyond |n| >= from.
class CellWalk {
 public:
  CellWalk(const Direction& pt, std::int64_t from) : step_(pt.sign == Sign::Plus ? pt.modulus : -pt.modulus) {
    from = std::max<std::int64_t>(from, 1);
    n_ = pt.sign == Sign::Plus ? from + mod_floor(pt.residue - from, pt.modulus)
                               : -from - mod_floor(-from - pt.residue, pt.modulus);
  }
  std::int64_t next() {
    const std::int64_t n = n_;
    n_ += step_;
    return n;
  }

 private:
  std::int64_t step_;
  std::int64_t n_;
};

Rational leading_ratio(const RatFunc& f) { return f.num().leading() / f.den().leading(); }

Direction compatible_point(const SymbolicSequence& x, const Direction& pt) {
  const std::int64_t period = x.direction_period(pt.sign);
  return pt.modulus % period == 0 ? pt : auto_extend(pt, period);
}

}  // namespace

bool verify_witness(const SymbolicSequence& s, const SmoothnessWitness& w) {
  if (sgn(w.bound_sq) <= 0 || w.samples.size() != w.sample_values_sq.size() || w.samples.empty()) return false;
  const auto in_cell = [&](std::int64_t n) {
    return (w.point.sign == Sign::Plus ? n > 0 : n < 0) && mod_floor(n, w.point.modulus) == w.point.residue;
  };
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    const std::int64_t n = w.samples[i];
    const Rational v = (eval(s, n) - w.value).norm2() * power_sq(n, w.degree);
    if (!in_cell(n) || v != w.sample_values_sq[i] || v < w.bound_sq) return false;
  }
  for (const std::int64_t n : w.unbounded_samples) {
    if (!in_cell(n) || (eval(s, n) - w.value).norm2() * power_sq(n, w.degree + 1) < 1) return false;
  }
  return true;
}

SmoothnessVerdict smooth_at_value(const SymbolicSequence& s, const Direction& pt_in, const GaussianRational& value) {
  const SymbolicSequence x = normalize(s);
  const Direction pt = compatible_point(x, pt_in);
  const CellForm form = cell_form(x, pt);
  const ExpRational re = form.re - ExpRational::constant(value.re());
  const ExpRational im = form.im - ExpRational::constant(value.im());
  SmoothnessVerdict verdict;
  if (re.is_zero() && im.is_zero()) return verdict;

  SmoothnessWitness w;
  w.point = pt;
  w.value = value;
  w.kind = Divergence::NonzeroLimit;
  const GaussianRational lim(re.limit(), im.limit());
  if (!lim.is_zero()) {
    w.degree = 0;
    w.limit = lim;
  } else {
    const RatFunc pr = re.polynomial_part();
    const RatFunc pi = im.polynomial_part();
    if (pr.is_zero() && pi.is_zero()) return verdict;  // only exponentially small terms remain
    int k = std::numeric_limits<int>::max();
    if (!pr.is_zero()) k = std::min(k, pr.decay_order());
    if (!pi.is_zero()) k = std::min(k, pi.decay_order());
    w.degree = static_cast<unsigned>(k);
    w.limit = GaussianRational(!pr.is_zero() && pr.decay_order() == k ? leading_ratio(pr) : Rational(0),
                               !pi.is_zero() && pi.decay_order() == k ? leading_ratio(pi) : Rational(0));
  }
  w.bound_sq = std::min(Rational(1), Rational(w.limit.norm2() / 4));

  CellWalk walk(pt, x.threshold() + 1);
  for (std::int64_t i = 0; i < kSampleSearchCap && w.samples.size() < kSampleCount; ++i) {
    const std::int64_t n = walk.next();
    const Rational v = (eval(x, n) - value).norm2() * power_sq(n, w.degree);
    if (v >= w.bound_sq) {
      w.samples.push_back(n);
      w.sample_values_sq.push_back(v);
    }
  }
  CellWalk far(pt, x.threshold() + 1);
  for (std::int64_t i = 0; i < kSampleSearchCap && w.unbounded_samples.size() < kSampleCount; ++i) {
    const std::int64_t n = far.next();
    if ((eval(x, n) - value).norm2() * power_sq(n, w.degree + 1) >= 1) w.unbounded_samples.push_back(n);
  }
  if (w.samples.size() < kSampleCount || w.unbounded_samples.size() < kSampleCount)
    throw DomainError("could not locate witness samples at " + to_string(pt));
  verdict.smooth = false;
  verdict.witness = std::move(w);
  return verdict;
}

SmoothnessVerdict smooth_at(const SymbolicSequence& s, const UltrafilterSpec& pt) {
  if (std::holds_alternative<Principal>(pt)) return {};
  const SymbolicSequence x = normalize(s);
  const Direction d = compatible_point(x, std::get<Direction>(pt));
  return smooth_at_value(x, d, limit_at(x, d));
}

SmoothnessVerdict is_smooth(const SymbolicSequence& s) {
  const SymbolicSequence x = normalize(s);
  // Steps are eventually constant on every cell and rapid tails beat every
  // power, so only cells met by a slowly decaying tail can fail.
  bool all_rapid = true;
  for (const TailTerm& t : x.tails()) {
    if (t.decay() == TailTerm::Decay::Rapid) continue;
    all_rapid = false;
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const auto res = t.support().residues(sign);
      if (res.empty()) continue;
      SmoothnessVerdict v = smooth_at(x, make_direction(sign, t.support().modulus(), res.front()));
      if (!v.smooth) return v;
    }
  }
  if (all_rapid) return {};
  for (const Direction& pt : direction_cells(x)) {
    SmoothnessVerdict v = smooth_at(x, pt);
    if (!v.smooth) return v;
  }
  return {};
}

bool HierarchyReport::consistent() const {
  const auto implies = [](bool a, bool b) { return !a || b; };
  return implies(cc, schwartz) && implies(schwartz, c0) && implies(cc, linf_c) &&
         implies(schwartz, linf_c_plus_schwartz) && implies(linf_c, linf_c_plus_schwartz) &&
         implies(linf_c_plus_schwartz, smooth) && implies(smooth, linf);
}

HierarchyReport classify(const SymbolicSequence& s) {
  const SymbolicSequence x = normalize(s);
  const bool finite_steps =
      std::all_of(x.steps().begin(), x.steps().end(), [](const StepTerm& t) { return t.support.is_finite(); });
  const bool rapid_tails = std::all_of(x.tails().begin(), x.tails().end(),
                                       [](const TailTerm& t) { return t.decay() == TailTerm::Decay::Rapid; });
  HierarchyReport r;
  r.linf_c = x.tails().empty();
  r.cc = r.linf_c && finite_steps;
  // Normalized rate-1 tails are strictly proper, so tails always vanish at infinity.
  r.c0 = finite_steps;
  r.schwartz = finite_steps && rapid_tails;
  r.linf_c_plus_schwartz = rapid_tails;
  SmoothnessVerdict v = is_smooth(x);
  r.smooth = v.smooth;
  r.witness = std::move(v.witness);
  r.linf = true;
  return r;
}

LevelChainCertificate level_chain_certificate(const std::vector<LevelChainTerm>& spec, const Rational& c0,
                                              unsigned d_max) {
  if (spec.empty()) throw ValidationError("certificate spec is empty");
  const std::size_t k = spec.size();
  for (std::size_t q = 0; q < k; ++q) {
    const std::string name = "S_" + std::to_string(q + 1);
    if (spec[q].set.is_finite()) throw ValidationError(name + " is finite; every set must be infinite");
    if (spec[q].c == c0) throw ValidationError("c_" + std::to_string(q + 1) + " equals c0");
    for (std::size_t p = 0; p < q; ++p) {
      if (spec[p].set.intersects(spec[q].set))
        throw ValidationError("S_" + std::to_string(p + 1) + " and " + name + " are not disjoint");
      if (spec[p].c == spec[q].c)
        throw ValidationError("c_" + std::to_string(p + 1) + " and c_" + std::to_string(q + 1) +
                              " are equal; constants must be distinct");
    }
    if (q > 0 && abs(spec[q].c - c0) > abs(spec[q - 1].c - c0))
      throw ValidationError("|c_q - c0| must be nonincreasing; it grows at q = " + std::to_string(q + 1));
  }

  LevelChainCertificate cert;
  cert.c0 = c0;
  std::vector<StepTerm> steps;
  for (const auto& t : spec) steps.push_back({t.c, t.set});
  cert.sequence = normalize(SymbolicSequence(std::move(steps), {}));

  const auto cutoff = [&](std::size_t q) {
    return to_int64(ceil(Rational(1) / Rational(abs(spec[q].c - c0))));
  };
  cert.chain.resize(k);
  DefinableSet acc;
  for (std::size_t q = k; q-- > 0;) {
    acc = acc | (spec[q].set & DefinableSet::at_least(cutoff(q)));
    cert.chain[q] = acc;
  }
  for (std::size_t q = 0; q < k; ++q) {
    const std::string name = "U_" + std::to_string(q + 1);
    if (cert.chain[q].is_empty()) throw ValidationError(name + " is empty");
    if (!cert.chain[q].infinite_in(Sign::Plus)) throw ValidationError(name + " is finite");
    if (q + 1 < k && (cert.chain[q] == cert.chain[q + 1] || !cert.chain[q + 1].subset_of(cert.chain[q])))
      throw ValidationError(name + " does not strictly contain U_" + std::to_string(q + 2));
  }

  for (unsigned d = 2; d <= d_max; ++d) {
    const DefinableSet& u = cert.chain[std::min<std::size_t>(d + 1, k) - 1];
    const std::int64_t n = *u.first_from(1, Sign::Plus);
    std::size_t q = 0;
    while (!spec[q].set.contains(n)) ++q;
    ChainWitness w;
    w.degree = d;
    w.term = q + 1;
    w.n = n;
    w.value = abs(Rational(pow(Integer(n), d)) * (spec[q].c - c0));
    w.lower = Rational(pow(Integer(n), d - 1));
    if (w.value < w.lower || w.lower < 1) throw DomainError("witness inequality failed at n = " + std::to_string(n));
    cert.witnesses.push_back(std::move(w));
  }

  const DefinableSet& last = cert.chain.back();
  const std::int64_t period = last.period(Sign::Plus);
  std::int64_t r = 0;
  while (!last.rule(Sign::Plus, r)) ++r;
  cert.point = compatible_point(cert.sequence, Direction{Sign::Plus, period, r});
  cert.verdict = smooth_at_value(cert.sequence, cert.point, c0);
  cert.classified_smooth = is_smooth(cert.sequence).smooth;
  return cert;
}

StructureReport check_schwartz_ideal(std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("samples must be at least 1");
  Rng rng(seed);
  StructureReport rep;
  rep.kind = "schwartz_ideal";
  for (std::size_t i = 0; i < samples; ++i) {
    const SymbolicSequence psi = random_schwartz(rng);
    const SymbolicSequence phi = random_smooth(rng);
    ++rep.samples;
    const HierarchyReport rp = classify(psi * phi);
    if (rp.schwartz && rp.consistent()) {
      ++rep.passed;
    } else if (!rep.counterexample) {
      rep.counterexample = "sample " + std::to_string(i) + ": product not rapidly decaying";
    }
  }
  return rep;
}

StructureReport check_unital_not_ideal() {
  StructureReport rep;
  rep.kind = "unital_not_ideal";
  rep.samples = 1;
  const SymbolicSequence one = SymbolicSequence::constant(1);
  const SymbolicSequence psi = SymbolicSequence::rational(Polynomial(1), Polynomial::from_integers({1, 0, 1}));
  const HierarchyReport c_one = classify(one);
  const HierarchyReport c_psi = classify(psi);
  const SymbolicSequence prod = one * psi;
  const HierarchyReport c_prod = classify(prod);
  rep.notes.push_back(std::string("1 finitely valued: ") + (c_one.linf_c ? "yes" : "no"));
  rep.notes.push_back(std::string("1 smooth: ") + (c_one.smooth ? "yes" : "no"));
  rep.notes.push_back(std::string("1/(n^2+1) bounded: ") + (c_psi.linf ? "yes" : "no"));
  rep.notes.push_back(std::string("1*1/(n^2+1) == 1/(n^2+1): ") + (prod == psi ? "yes" : "no"));
  rep.notes.push_back(std::string("product finitely valued: ") + (c_prod.linf_c ? "yes" : "no"));
  rep.notes.push_back(std::string("product smooth: ") + (c_prod.smooth ? "yes" : "no"));
  const bool ok = c_one.linf_c && c_one.smooth && c_psi.linf && prod == psi && !c_prod.linf_c && !c_prod.smooth;
  if (ok) {
    rep.passed = 1;
  } else {
    rep.counterexample = "expected non-ideal witness did not verify";
  }
  return rep;
}

}  // namespace betaz
