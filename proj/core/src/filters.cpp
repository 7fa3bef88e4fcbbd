#include "betaz/filters.hpp"

#include <memory>
#include <variant>

#include "betaz/cells.hpp"
#include "betaz/error.hpp"
#include "betaz/random.hpp"

namespace betaz {

namespace {

DefinableSet intersection_of(const std::vector<DefinableSet>& family, const std::vector<std::size_t>& idx) {
  DefinableSet acc = DefinableSet::all();
  for (const std::size_t i : idx) acc = acc & family[i];
  return acc;
}

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string out;
  for (const std::size_t i : idx) out += (out.empty() ? "#" : ", #") + std::to_string(i);
  return out;
}

}  // namespace

std::vector<std::size_t> empty_intersection_witness(const std::vector<DefinableSet>& family) {
  std::vector<std::size_t> idx;
  DefinableSet acc = DefinableSet::all();
  for (std::size_t i = 0; i < family.size(); ++i) {
    acc = acc & family[i];
    idx.push_back(i);
    if (acc.is_empty()) break;
  }
  if (!acc.is_empty()) return {};
  for (std::size_t k = 0; k < idx.size();) {
    std::vector<std::size_t> fewer = idx;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
    if (!fewer.empty() && intersection_of(family, fewer).is_empty()) {
      idx = std::move(fewer);
    } else {
      ++k;
    }
  }
  return idx;
}

FilterBase::FilterBase(std::vector<DefinableSet> base) : base_(std::move(base)), core_(DefinableSet::all()) {
  if (base_.empty()) throw ValidationError("filter base must be nonempty");
  for (const auto& s : base_) core_ = core_ & s;
  if (core_.is_empty()) {
    auto w = empty_intersection_witness(base_);
    throw InconsistentError("not a filter base: empty intersection of sets " + index_list(w), std::move(w));
  }
}

bool point_contains(const UltrafilterSpec& pt, const DefinableSet& s) {
  if (const auto* p = std::get_if<Principal>(&pt)) return s.contains(p->n);
  const auto& d = std::get<Direction>(pt);
  if (!compatible(s, d)) {
    const std::int64_t required = to_int64(lcm(Integer(d.modulus), Integer(s.period(d.sign))));
    throw RefinePointError("refine point " + to_string(d) + " to modulus " + std::to_string(required), required);
  }
  return s.rule(d.sign, d.residue);
}

Direction auto_extend(const Direction& pt, std::int64_t period) {
  const std::int64_t m = to_int64(lcm(Integer(pt.modulus), Integer(period)));
  return extend_point(pt, m, pt.residue);
}

bool PointTrace::admits(const UltrafilterSpec& pt) const { return point_contains(pt, admissible); }

PointTrace point_from_trace(const std::vector<Decision>& decisions) {
  std::vector<DefinableSet> chosen;
  std::int64_t m = 1;
  for (const auto& d : decisions) {
    chosen.push_back(d.member ? d.set : ~d.set);
    m = to_int64(lcm(Integer(m), Integer(d.set.modulus())));
  }
  PointTrace out;
  out.admissible = DefinableSet::all();
  for (const auto& s : chosen) out.admissible = out.admissible & s;
  if (out.admissible.is_empty()) {
    auto w = empty_intersection_witness(chosen);
    throw InconsistentError("inconsistent decisions " + index_list(w), std::move(w));
  }
  out.modulus = m;
  for (const Sign s : {Sign::Plus, Sign::Minus})
    for (std::int64_t r = 0; r < m; ++r)
      if (out.admissible.rule(s, r)) out.completions.push_back(Direction{s, m, r});
  if (out.admissible.is_finite() && out.admissible.cardinality() == 1) out.forced = Principal{out.admissible.elements()[0]};
  return out;
}

std::vector<Decision> trace_of(const UltrafilterSpec& pt, const std::vector<DefinableSet>& family) {
  std::vector<Decision> out;
  for (const auto& s : family) out.push_back({s, point_contains(pt, s)});
  return out;
}

GaussianRational limit_at(const SymbolicSequence& s, const UltrafilterSpec& pt) {
  if (const auto* p = std::get_if<Principal>(&pt)) return eval(s, p->n);
  const SymbolicSequence x = normalize(s);
  const CellForm form = cell_form(x, std::get<Direction>(pt));
  return {form.re.limit(), form.im.limit()};
}

std::vector<AxiomReport> check_filter_axioms(const Membership& member, bool ultra, std::size_t samples,
                                             std::uint64_t seed) {
  if (samples < 1) throw ValidationError("samples must be at least 1");
  Rng rng(seed);
  AxiomReport inter{"intersection", 0, 0, std::nullopt};
  AxiomReport super{"superset", 0, 0, std::nullopt};
  AxiomReport dich{"dichotomy", 0, 0, std::nullopt};

  // A member drawn from random sets or their complements; nullopt if neither is a member.
  const auto draw_member = [&]() -> std::optional<DefinableSet> {
    for (int attempt = 0; attempt < 8; ++attempt) {
      DefinableSet x = random_set(rng);
      if (member(x)) return x;
      if (member(~x)) return ~x;
    }
    return std::nullopt;
  };

  if (member(DefinableSet::empty())) inter.counterexample = "the empty set is a member";
  if (!member(DefinableSet::all())) super.counterexample = "Z is not a member";

  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = draw_member();
    const auto b = draw_member();
    ++inter.samples;
    ++super.samples;
    if (a && b) {
      if (member(*a & *b)) {
        ++inter.passed;
      } else if (!inter.counterexample) {
        inter.counterexample = "A = " + a->to_dsl() + ", B = " + b->to_dsl() + ": A & B is not a member";
      }
    } else {
      ++inter.passed;  // nothing to intersect
    }
    if (a) {
      const DefinableSet bigger = *a | random_set(rng);
      if (member(bigger)) {
        ++super.passed;
      } else if (!super.counterexample) {
        super.counterexample = "A = " + a->to_dsl() + " is a member but its superset " + bigger.to_dsl() + " is not";
      }
    } else {
      ++super.passed;
    }
    if (ultra) {
      ++dich.samples;
      const DefinableSet s = random_set(rng);
      const bool in = member(s);
      const bool out = member(~s);
      if (in != out) {
        ++dich.passed;
      } else if (!dich.counterexample) {
        dich.counterexample = "S = " + s.to_dsl() + (in ? ": both S and its complement are members" : ": neither S nor its complement is a member");
      }
    }
  }
  std::vector<AxiomReport> out{inter, super};
  if (ultra) out.push_back(dich);
  return out;
}

std::vector<AxiomReport> check_filter_axioms(const FilterBase& f, std::size_t samples, std::uint64_t seed) {
  // Random sets rarely contain the core, so also sample supersets of it.
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto reports = check_filter_axioms([&](const DefinableSet& s) { return f.contains(s); }, false, samples, seed);
  AxiomReport& inter = reports[0];
  AxiomReport& super = reports[1];
  for (std::size_t i = 0; i < samples; ++i) {
    const DefinableSet a = f.core() | random_set(rng);
    const DefinableSet b = f.core() | random_set(rng);
    ++inter.samples;
    ++super.samples;
    if (f.contains(a & b)) {
      ++inter.passed;
    } else if (!inter.counterexample) {
      inter.counterexample = "A = " + a.to_dsl() + ", B = " + b.to_dsl() + ": A & B is not a member";
    }
    const DefinableSet c = a | random_set(rng);
    if (f.contains(c)) {
      ++super.passed;
    } else if (!super.counterexample) {
      super.counterexample = "superset " + c.to_dsl() + " of member " + a.to_dsl() + " is not a member";
    }
  }
  return reports;
}

std::vector<AxiomReport> check_filter_axioms(const UltrafilterSpec& pt, std::size_t samples, std::uint64_t seed) {
  if (std::holds_alternative<Principal>(pt))
    return check_filter_axioms([&](const DefinableSet& s) { return point_contains(pt, s); }, true, samples, seed);
  auto current = std::make_shared<Direction>(std::get<Direction>(pt));
  const Membership member = [current](const DefinableSet& s) {
    if (!compatible(s, *current)) *current = auto_extend(*current, s.period(current->sign));
    return point_contains(*current, s);
  };
  return check_filter_axioms(member, true, samples, seed);
}

}  // namespace betaz
