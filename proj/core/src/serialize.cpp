#include "betaz/serialize.hpp"

#include <variant>

#include "betaz/error.hpp"

namespace betaz {

namespace {

Json poly_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const Integer& c : p.integer_coefficients()) out.push_back(to_string(c));
  return out;
}

Polynomial poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(x.is_string() ? parse_integer(x.get<std::string>()) : Integer(x.get<long>()));
  return Polynomial::from_integers(c);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::vector<std::int64_t> int_list(const Json& j) {
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(x.get<std::int64_t>());
  return out;
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return {{"num", to_string(Integer(q.get_num()))}, {"den", to_string(Integer(q.get_den()))}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  const Integer num = parse_integer(field(j, "num").get<std::string>());
  const Integer den = parse_integer(field(j, "den").get<std::string>());
  if (den == 0) throw ValidationError("zero denominator in JSON rational");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Json gaussian_to_json(const GaussianRational& z) { return {{"re", rational_to_json(z.re())}, {"im", rational_to_json(z.im())}}; }

GaussianRational gaussian_from_json(const Json& j) {
  return {rational_from_json(field(j, "re")), rational_from_json(field(j, "im"))};
}

Json to_json(const DefinableSet& s) {
  return {{"modulus", s.modulus()},
          {"residues_pos", s.residues(Sign::Plus)},
          {"residues_neg", s.residues(Sign::Minus)},
          {"threshold", s.threshold()},
          {"window", s.window_members()}};
}

DefinableSet set_from_json(const Json& j) {
  return DefinableSet::from_window(field(j, "modulus").get<std::int64_t>(), int_list(field(j, "residues_pos")),
                                   int_list(field(j, "residues_neg")), field(j, "threshold").get<std::int64_t>(),
                                   int_list(field(j, "window")));
}

Json to_json(const SymbolicSequence& s) {
  Json steps = Json::array();
  for (const auto& st : s.steps())
    steps.push_back({{"re", rational_to_json(st.value.re())}, {"im", rational_to_json(st.value.im())}, {"set", to_json(st.support)}});
  Json tails = Json::array();
  for (const auto& t : s.tails())
    tails.push_back({{"coeff", gaussian_to_json(t.coeff())},
                     {"p", poly_to_json(t.p())},
                     {"q", poly_to_json(t.q())},
                     {"r", rational_to_json(t.rate())},
                     {"set", to_json(t.support())}});
  return {{"steps", steps}, {"tails", tails}};
}

SymbolicSequence sequence_from_json(const Json& j) {
  std::vector<StepTerm> steps;
  for (const auto& st : field(j, "steps"))
    steps.push_back({GaussianRational(rational_from_json(field(st, "re")), rational_from_json(field(st, "im"))),
                     set_from_json(field(st, "set"))});
  std::vector<TailTerm> tails;
  for (const auto& t : field(j, "tails"))
    tails.emplace_back(set_from_json(field(t, "set")), poly_from_json(field(t, "p")),
                       poly_from_json(field(t, "q")), rational_from_json(field(t, "r")),
                       gaussian_from_json(field(t, "coeff")));
  return normalize(SymbolicSequence(std::move(steps), std::move(tails)));
}

Json to_json(const UltrafilterSpec& pt) {
  if (const auto* p = std::get_if<Principal>(&pt)) return {{"kind", "principal"}, {"n", p->n}, {"text", to_string(pt)}};
  const auto& d = std::get<Direction>(pt);
  return {{"kind", "direction"},
          {"sign", d.sign == Sign::Plus ? "+inf" : "-inf"},
          {"modulus", d.modulus},
          {"residue", d.residue},
          {"text", to_string(d)}};
}

Json to_json(const DyadicExpansion& e) {
  Json levels = Json::array();
  for (const auto& l : e.levels)
    levels.push_back({{"weight", to_string(l.weight)}, {"set", to_json(l.projection)}, {"dsl", l.projection.to_dsl()}});
  return {{"depth", e.depth}, {"levels", levels}, {"remainder_bound", to_string(e.remainder_bound)}};
}

Json to_json(const LevelExpansion& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms)
    terms.push_back({{"constant", t.constant.to_string()}, {"set", to_json(t.projection)}, {"dsl", t.projection.to_dsl()}});
  return {{"terms", terms}};
}

Json to_json(const SeminormValue& v) {
  if (v.infinite) {
    Json j = {{"infinite", true}};
    if (v.unbounded_at) j["unbounded_at"] = to_string(*v.unbounded_at);
    return j;
  }
  return {{"infinite", false}, {"exact", v.exact()}, {"lo", to_string(v.lo)}, {"hi", to_string(v.hi)}};
}

Json to_json(const SmoothnessWitness& w) {
  Json values = Json::array();
  for (const auto& v : w.sample_values_sq) values.push_back(to_string(v));
  return {{"point", to_string(w.point)},
          {"value", w.value.to_string()},
          {"degree", w.degree},
          {"kind", w.kind == Divergence::NonzeroLimit ? "nonzero-limit" : "unbounded"},
          {"limit", w.limit.to_string()},
          {"bound_sq", to_string(w.bound_sq)},
          {"samples", w.samples},
          {"sample_values_sq", values},
          {"unbounded_samples", w.unbounded_samples}};
}

Json to_json(const SmoothnessVerdict& v) {
  Json j = {{"smooth", v.smooth}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const HierarchyReport& r) {
  Json j = {{"cc", r.cc},
            {"schwartz", r.schwartz},
            {"c0", r.c0},
            {"linf_c", r.linf_c},
            {"linf_c_plus_schwartz", r.linf_c_plus_schwartz},
            {"smooth", r.smooth},
            {"linf", r.linf},
            {"consistent", r.consistent()}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json to_json(const LevelChainCertificate& c) {
  Json chain = Json::array();
  for (const auto& u : c.chain) chain.push_back(u.to_dsl());
  Json wit = Json::array();
  for (const auto& w : c.witnesses)
    wit.push_back({{"d", w.degree}, {"q", w.term}, {"n", w.n}, {"value", to_string(w.value)}, {"lower", to_string(w.lower)}});
  return {{"c0", to_string(c.c0)},
          {"chain", chain},
          {"witnesses", wit},
          {"point", to_string(c.point)},
          {"verdict", to_json(c.verdict)},
          {"classified_smooth", c.classified_smooth}};
}

Json to_json(const AxiomReport& r) {
  Json j = {{"axiom", r.axiom}, {"samples", r.samples}, {"passed", r.passed}, {"ok", r.ok()}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

Json to_json(const StructureReport& r) {
  Json j = {{"kind", r.kind}, {"samples", r.samples}, {"passed", r.passed}, {"ok", r.ok()}, {"notes", r.notes}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

Json to_json(const PointTrace& t) {
  Json completions = Json::array();
  for (const auto& d : t.completions) completions.push_back(to_string(d));
  Json j = {{"admissible", t.admissible.to_dsl()}, {"modulus", t.modulus}, {"completions", completions}, {"unique", t.unique()}};
  if (t.forced) j["point"] = to_string(UltrafilterSpec(*t.forced));
  return j;
}

Json to_json(const WindowSequence& w) {
  Json values = Json::array();
  for (std::int64_t n = -w.half_width; n <= w.half_width; ++n)
    values.push_back({{"n", n}, {"value_re", w.at(n).real()}, {"value_im", w.at(n).imag()}});
  return {{"N", w.half_width}, {"provenance", w.provenance}, {"values", values}};
}

Json to_json(const Profile& p) {
  Json j = {{"direction", p.direction == Sign::Plus ? "+inf" : "-inf"},
            {"d", p.degree},
            {"limit", {{"re", p.limit.real()}, {"im", p.limit.imag()}}},
            {"n", p.n},
            {"values", p.values},
            {"trend", to_string(p.trend)},
            {"last_value", p.last_value},
            {"note", "diagnostic only; a finite window certifies nothing at infinity"}};
  if (p.modulus) {
    j["modulus"] = *p.modulus;
    j["residue"] = *p.residue;
  }
  return j;
}

Json to_json(const dsl::Node& n) {
  Json j = {{"kind", std::string(dsl::kind_name(n.kind))},
            {"span", {{"line", n.span.line}, {"column", n.span.column}, {"offset", n.span.offset}, {"length", n.span.length}}}};
  if (!n.ints.empty()) j["ints"] = n.ints;
  if (!n.op.empty()) j["op"] = n.op;
  if (n.kind == dsl::NodeKind::SeqNumber || n.kind == dsl::NodeKind::SeqGeo) j["value"] = n.number.to_string();
  if (n.kind == dsl::NodeKind::SeqRat) {
    j["p"] = n.p.to_string();
    j["q"] = n.q.to_string();
  }
  if (!n.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : n.children) kids.push_back(to_json(c));
    j["children"] = kids;
  }
  return j;
}

}  // namespace betaz
