#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "betaz/decomp.hpp"
#include "betaz/filters.hpp"
#include "betaz/frontend.hpp"
#include "betaz/serialize.hpp"
#include "betaz/smooth.hpp"
#include "betaz/windows.hpp"

namespace {

using betaz::Json;

/// Missing or conflicting inputs that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::string expr;
  std::string file;
  std::string source;  // text actually parsed, for error carets
};

Globals g;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw betaz::ValidationError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string input_text() {
  if (!g.expr.empty() && !g.file.empty()) throw UsageError("--expr and --file are mutually exclusive");
  if (!g.file.empty()) return g.source = read_file(g.file);
  if (g.expr.empty()) throw UsageError("an expression is required (--expr or --file)");
  return g.source = g.expr;
}

betaz::dsl::Node input_sequence_node() { return betaz::dsl::parse(input_text(), betaz::dsl::Grammar::Sequence); }

betaz::SymbolicSequence input_sequence() { return betaz::dsl::lower_sequence(input_sequence_node()); }

betaz::UltrafilterSpec point_arg(const std::string& text) {
  g.source = text;
  return betaz::dsl::parse_point(text);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string sequence_text(const betaz::SymbolicSequence& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& st : s.steps()) {
    if (!out.empty()) out += " + ";
    out += "(" + st.value.to_string() + ") on " + st.support.to_dsl();
  }
  for (const auto& t : s.tails()) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff().to_string() + ")*(" + t.p().to_string() + ")/(" + t.q().to_string() + ")";
    if (t.rate() != 1) out += "*(" + betaz::to_string(t.rate()) + ")^|n|";
    out += " on " + t.support().to_dsl();
  }
  return out;
}

void print_witness(const betaz::SmoothnessWitness& w) {
  std::cout << "witness:\n"
            << "  point     " << betaz::to_string(w.point) << '\n'
            << "  against   " << w.value.to_string() << '\n'
            << "  degree    " << w.degree << '\n'
            << "  limit     " << w.limit.to_string() << '\n'
            << "  bound     |n^d*delta|^2 >= " << betaz::to_string(w.bound_sq) << '\n';
  for (std::size_t i = 0; i < w.samples.size(); ++i)
    std::cout << "  n = " << std::setw(8) << w.samples[i] << "  |n^d*delta|^2 = " << betaz::to_string(w.sample_values_sq[i])
              << '\n';
  if (!w.unbounded_samples.empty()) {
    std::cout << "  degree " << w.degree + 1 << " samples with |n^d*delta| >= 1:";
    for (auto n : w.unbounded_samples) std::cout << ' ' << n;
    std::cout << '\n';
  }
}

void print_verdict(const betaz::SmoothnessVerdict& v) {
  std::cout << "smooth: " << yes_no(v.smooth) << '\n';
  if (v.witness) print_witness(*v.witness);
}

// ---- verbs ----

void run_parse(const std::string& grammar) {
  const std::string text = input_text();
  betaz::dsl::Node node;
  if (grammar == "auto") node = betaz::dsl::parse_any(text);
  else if (grammar == "set") node = betaz::dsl::parse(text, betaz::dsl::Grammar::Set);
  else if (grammar == "seq") node = betaz::dsl::parse(text, betaz::dsl::Grammar::Sequence);
  else node = betaz::dsl::parse(text, betaz::dsl::Grammar::Point);

  const bool is_point =
      node.kind == betaz::dsl::NodeKind::PointPrincipal || node.kind == betaz::dsl::NodeKind::PointDirection;
  const std::string sort = betaz::dsl::is_set_kind(node.kind) ? "set" : is_point ? "point" : "sequence";
  Json lowered;
  if (sort == "set") lowered = betaz::to_json(betaz::dsl::lower_set(node));
  else if (sort == "point") lowered = betaz::to_json(betaz::dsl::lower_point(node));
  else if (betaz::dsl::is_exact(node)) lowered = betaz::to_json(betaz::dsl::lower_sequence(node));
  else {
    betaz::dsl::numeric_sequence(node);  // validates numeric-only trees
    lowered = nullptr;
  }

  if (g.json) {
    emit({{"sort", sort}, {"printed", betaz::dsl::print(node)}, {"ast", betaz::to_json(node)}, {"value", lowered}});
    return;
  }
  std::cout << "sort:    " << sort << '\n' << "printed: " << betaz::dsl::print(node) << '\n';
  if (sort == "set") std::cout << "value:   " << betaz::dsl::lower_set(node).to_dsl() << '\n';
  else if (sort == "point") std::cout << "value:   " << betaz::to_string(betaz::dsl::lower_point(node)) << '\n';
  else if (lowered.is_null()) std::cout << "value:   numeric only\n";
  else std::cout << "value:   " << sequence_text(betaz::dsl::lower_sequence(node)) << '\n';
}

void run_classify() {
  const auto s = input_sequence();
  const auto r = betaz::classify(s);
  if (g.json) return emit(betaz::to_json(r));
  const std::pair<const char*, bool> rows[] = {
      {"finite support (cc)", r.cc},     {"rapid decay (S)", r.schwartz},
      {"vanishing at infinity (c0)", r.c0}, {"finitely valued (linf_c)", r.linf_c},
      {"linf_c + S", r.linf_c_plus_schwartz}, {"smooth", r.smooth},
      {"bounded (linf)", r.linf},
  };
  for (const auto& [name, v] : rows) std::cout << std::left << std::setw(28) << name << yes_no(v) << '\n';
  if (r.witness) print_witness(*r.witness);
}

void run_decompose(std::optional<unsigned> dyadic, bool levels) {
  if (dyadic.has_value() == levels) throw UsageError("decompose needs exactly one of --dyadic N or --levels");
  const auto s = input_sequence();
  if (dyadic) {
    const auto e = betaz::dyadic_decompose(s, *dyadic);
    if (g.json) return emit(betaz::to_json(e));
    std::cout << std::left << std::setw(12) << "weight" << "projection\n";
    for (const auto& l : e.levels)
      std::cout << std::setw(12) << betaz::to_string(l.weight) << l.projection.to_dsl() << '\n';
    std::cout << "remainder <= " << betaz::to_string(e.remainder_bound) << '\n';
    return;
  }
  const auto e = betaz::level_decompose(s);
  if (g.json) return emit(betaz::to_json(e));
  std::cout << std::left << std::setw(12) << "constant" << "projection\n";
  for (const auto& t : e.terms) std::cout << std::setw(12) << t.constant.to_string() << t.projection.to_dsl() << '\n';
}

void run_limit(const std::string& at) {
  const auto s = input_sequence();
  const auto pt = point_arg(at);
  const auto v = betaz::limit_at(s, pt);
  if (g.json) return emit({{"point", betaz::to_string(pt)}, {"value", v.to_string()}, {"exact", betaz::gaussian_to_json(v)}});
  std::cout << v.to_string() << '\n';
}

void run_smoothcheck(const std::string& at) {
  const auto s = input_sequence();
  const auto v = at.empty() ? betaz::is_smooth(s) : betaz::smooth_at(s, point_arg(at));
  if (g.json) return emit(betaz::to_json(v));
  print_verdict(v);
}

void run_seminorm(unsigned d, const std::string& tol) {
  const auto s = input_sequence();
  const betaz::Rational t = betaz::rational_from_json(Json(tol));
  if (t <= 0) throw betaz::ValidationError("tolerance must be positive");
  const auto v = betaz::schwartz_seminorm(s, d, t);
  if (g.json) return emit(betaz::to_json(v));
  if (v.infinite) {
    std::cout << "infinite";
    if (v.unbounded_at) std::cout << " (unbounded at " << betaz::to_string(*v.unbounded_at) << ")";
    std::cout << '\n';
  } else if (v.exact()) {
    std::cout << betaz::to_string(v.lo) << '\n';
  } else {
    std::cout << "[" << betaz::to_string(v.lo) << ", " << betaz::to_string(v.hi) << "]\n";
  }
}

void run_cert(const std::string& spec_path, const std::string& c0_text, unsigned dmax) {
  Json spec;
  try {
    spec = Json::parse(read_file(spec_path));
  } catch (const Json::exception& e) {
    throw betaz::ValidationError("spec file is not valid JSON: " + std::string(e.what()));
  }
  if (!spec.is_array()) throw betaz::ValidationError("spec must be a JSON array of {c, set}");
  std::vector<betaz::LevelChainTerm> terms;
  for (const auto& item : spec) {
    if (!item.is_object() || !item.contains("c") || !item.contains("set"))
      throw betaz::ValidationError("spec entries need fields c and set");
    betaz::DefinableSet set = betaz::DefinableSet::empty();
    if (item["set"].is_string()) {
      g.source = item["set"].get<std::string>();
      set = betaz::dsl::parse_set(g.source);
    } else {
      set = betaz::set_from_json(item["set"]);
    }
    terms.push_back({betaz::rational_from_json(item["c"]), set});
  }
  const auto c = betaz::level_chain_certificate(terms, betaz::rational_from_json(Json(c0_text)), dmax);
  if (g.json) return emit(betaz::to_json(c));
  std::cout << "c0: " << betaz::to_string(c.c0) << '\n';
  for (std::size_t k = 0; k < c.chain.size(); ++k) std::cout << "U_" << k + 1 << " = " << c.chain[k].to_dsl() << '\n';
  for (const auto& w : c.witnesses)
    std::cout << "d = " << w.degree << ": n = " << w.n << " in S_" << w.term << ", |n^d(c_q - c0)| = "
              << betaz::to_string(w.value) << " >= " << betaz::to_string(w.lower) << " >= 1\n";
  std::cout << "direction: " << betaz::to_string(c.point) << '\n';
  print_verdict(c.verdict);
  std::cout << "plain classify smooth: " << yes_no(c.classified_smooth) << '\n';
}

void print_structure(const betaz::StructureReport& r) {
  std::cout << r.kind << ": " << r.passed << "/" << r.samples << " passed\n";
  if (r.counterexample) std::cout << "counterexample: " << *r.counterexample << '\n';
  for (const auto& n : r.notes) std::cout << "  " << n << '\n';
}

int run_check_ideals(std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw betaz::ValidationError("samples must be at least 1");
  const auto ideal = betaz::check_schwartz_ideal(samples, seed);
  const auto unital = betaz::check_unital_not_ideal();
  if (g.json) emit(Json::array({betaz::to_json(ideal), betaz::to_json(unital)}));
  else {
    print_structure(ideal);
    print_structure(unital);
  }
  return ideal.ok() && unital.ok() ? 0 : 1;
}

int run_check_filters(std::size_t samples, std::uint64_t seed, const std::string& at,
                      const std::vector<std::string>& base) {
  if (samples < 1) throw betaz::ValidationError("samples must be at least 1");
  if (at.empty() == base.empty()) throw UsageError("check filters needs exactly one of --at or --base");
  std::vector<betaz::AxiomReport> reports;
  if (!at.empty()) {
    reports = betaz::check_filter_axioms(point_arg(at), samples, seed);
  } else {
    std::vector<betaz::DefinableSet> sets;
    for (const auto& b : base) {
      g.source = b;
      sets.push_back(betaz::dsl::parse_set(b));
    }
    reports = betaz::check_filter_axioms(betaz::FilterBase(std::move(sets)), samples, seed);
  }
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    out.push_back(betaz::to_json(r));
    if (!g.json) {
      std::cout << std::left << std::setw(14) << r.axiom << r.passed << "/" << r.samples;
      if (r.counterexample) std::cout << "  counterexample: " << *r.counterexample;
      std::cout << '\n';
    }
  }
  if (g.json) emit(out);
  return ok ? 0 : 1;
}

betaz::WindowSequence input_window(std::int64_t half_width) {
  if (half_width < 1) throw betaz::ValidationError("--N must be at least 1");
  const auto node = input_sequence_node();
  if (betaz::dsl::is_exact(node)) return betaz::window_eval(betaz::dsl::lower_sequence(node), half_width);
  return betaz::window_custom(betaz::dsl::numeric_sequence(node), half_width, "numeric");
}

void run_window_eval(std::int64_t half_width, bool csv) {
  const auto w = input_window(half_width);
  if (csv) std::cout << betaz::to_csv(w);
  else if (g.json) emit(betaz::to_json(w));
  else std::cout << betaz::to_csv(w);
}

void run_window_profile(std::int64_t half_width, unsigned d, const std::string& limit_text, const std::string& dir,
                        std::optional<std::int64_t> mod, std::optional<std::int64_t> residue, bool csv) {
  if (mod.has_value() != residue.has_value()) throw UsageError("--mod and --residue go together");
  const auto w = input_window(half_width);
  g.source = limit_text;
  const auto limit_node = betaz::dsl::parse(limit_text, betaz::dsl::Grammar::Sequence);
  const std::complex<double> limit = betaz::dsl::numeric_sequence(limit_node)(0);
  const betaz::Sign sign = dir == "minus" ? betaz::Sign::Minus : betaz::Sign::Plus;
  const auto p = betaz::empirical_profile(w, sign, d, limit, mod, residue);
  if (csv) std::cout << betaz::to_csv(p);
  else if (g.json) emit(betaz::to_json(p));
  else std::cout << "trend: " << betaz::to_string(p.trend) << " (last value " << p.last_value << ")\n";
}

// ---- errors ----

Json error_json(const std::string& kind, const std::string& message, std::optional<betaz::dsl::Span> span,
                const std::string& expected = {}) {
  Json e = {{"kind", kind}, {"message", message}, {"line", nullptr}, {"column", nullptr}};
  if (span) {
    e["line"] = span->line;
    e["column"] = span->column;
    e["offset"] = span->offset;
    e["length"] = span->length;
  }
  if (!expected.empty()) e["expected"] = expected;
  return {{"error", e}};
}

void report_error(const Json& j) {
  if (g.json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  const Json& e = j["error"];
  std::cerr << "error (" << e["kind"].get<std::string>() << "): " << e["message"].get<std::string>() << '\n';
}

void show_caret(const betaz::dsl::DslError& e) {
  if (g.json || g.source.empty()) return;
  std::istringstream in(g.source);
  std::string line;
  for (int i = 0; i < e.line() && std::getline(in, line); ++i) {
  }
  std::cerr << "  " << line << '\n'
            << "  " << std::string(static_cast<std::size_t>(std::max(0, e.column() - 1)), ' ')
            << std::string(std::max<std::size_t>(1, e.span().length), '^') << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of bounded sequences on the integers"};
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--expr", g.expr, "Expression in the DSL");
  app.add_option("--file", g.file, "File holding the expression")->check(CLI::ExistingFile);

  const auto verb = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  std::string grammar = "auto";
  auto* parse = verb("parse", "Parse and pretty-print an expression");
  parse->add_option("--grammar", grammar, "auto, set, seq or point")->check(CLI::IsMember({"auto", "set", "seq", "point"}));

  auto* classify = verb("classify", "Membership in the function-space hierarchy");

  std::optional<unsigned> dyadic;
  bool levels = false;
  auto* decompose = verb("decompose", "Dyadic or level-set decomposition");
  auto* dy = decompose->add_option("--dyadic", dyadic, "Dyadic depth N")->check(CLI::Range(1u, 4096u));
  decompose->add_flag("--levels", levels, "Level-set form of a step function")->excludes(dy);

  std::string at;
  auto* limit = verb("limit", "Value of the extension at a point");
  limit->add_option("--at", at, "Point, e.g. \"n=5\" or \"+inf mod 6 == 5\"")->required();

  std::string smooth_at;
  auto* smoothcheck = verb("smoothcheck", "Decide smoothness, globally or at one point");
  smoothcheck->add_option("--at", smooth_at, "Point");

  unsigned degree = 0;
  std::string tol = "1/1000000000";
  auto* seminorm = verb("seminorm", "sup |n^d s(n)|");
  seminorm->add_option("--d", degree, "Degree")->check(CLI::Range(0u, 64u));
  seminorm->add_option("--tol", tol, "Tolerance for irrational values, e.g. 1/1000000");

  std::string spec_path, c0 = "0";
  unsigned dmax = 5;
  auto* cert = verb("cert", "Certificates");
  cert->require_subcommand(1);
  auto* prop26 = cert->add_subcommand("prop26", "Level-chain certificate for a step function");
  prop26->fallthrough();
  prop26->add_option("--spec", spec_path, "JSON array of {c, set}")->required()->check(CLI::ExistingFile);
  prop26->add_option("--c0", c0, "Accumulation value");
  prop26->add_option("--dmax", dmax, "Largest witnessed degree")->check(CLI::Range(2u, 64u));

  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string filter_at;
  std::vector<std::string> base;
  auto* check = verb("check", "Randomised structural checks");
  check->require_subcommand(1);
  auto* ideals = check->add_subcommand("ideals", "Ideal structure of the rapid-decay sequences");
  auto* filters = check->add_subcommand("filters", "Filter and ultrafilter axioms");
  for (auto* s : {ideals, filters}) {
    s->fallthrough();
    s->add_option("--samples", samples, "Number of random samples");
    s->add_option("--seed", seed, "Random seed");
  }
  filters->add_option("--at", filter_at, "Point whose ultrafilter is checked");
  filters->add_option("--base", base, "Sets generating a filter (repeatable)");

  std::int64_t half_width = 100;
  bool csv = false;
  unsigned prof_d = 0;
  std::string prof_limit = "0", direction = "plus";
  std::optional<std::int64_t> mod, residue;
  auto* window = verb("window", "Numeric windows on [-N, N]");
  window->require_subcommand(1);
  auto* weval = window->add_subcommand("eval", "Values on the window");
  auto* wprof = window->add_subcommand("profile", "|n^d (s(n) - limit)| along one end");
  for (auto* s : {weval, wprof}) {
    s->fallthrough();
    s->add_option("--N", half_width, "Half width")->required();
    s->add_flag("--csv", csv, "CSV output");
  }
  wprof->add_option("--d", prof_d, "Degree")->check(CLI::Range(0u, 64u));
  wprof->add_option("--limit", prof_limit, "Limit value (DSL number)");
  wprof->add_option("--direction", direction, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  wprof->add_option("--mod", mod, "Restrict to a residue class")->check(CLI::PositiveNumber);
  wprof->add_option("--residue", residue, "Residue");

  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--json") g.json = true;

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (g.json) {
      report_error(error_json("usage", e.what(), std::nullopt));
      return 2;
    }
    app.exit(e);
    return 2;
  }

  try {
    int status = 0;
    if (*parse) run_parse(grammar);
    else if (*classify) run_classify();
    else if (*decompose) run_decompose(dyadic, levels);
    else if (*limit) run_limit(at);
    else if (*smoothcheck) run_smoothcheck(smooth_at);
    else if (*seminorm) run_seminorm(degree, tol);
    else if (*prop26) run_cert(spec_path, c0, dmax);
    else if (*ideals) status = run_check_ideals(samples, seed);
    else if (*filters) status = run_check_filters(samples, seed, filter_at, base);
    else if (*weval) run_window_eval(half_width, csv);
    else if (*wprof) run_window_profile(half_width, prof_d, prof_limit, direction, mod, residue, csv);
    return status;
  } catch (const UsageError& e) {
    report_error(error_json("usage", e.what(), std::nullopt));
    return 2;
  } catch (const betaz::dsl::DslError& e) {
    report_error(error_json(e.kind(), e.what(), e.span(), e.expected()));
    show_caret(e);
    return 1;
  } catch (const betaz::RefinePointError& e) {
    Json j = error_json(e.kind(), e.what(), std::nullopt);
    j["error"]["required_modulus"] = e.required_modulus();
    report_error(j);
    return 1;
  } catch (const betaz::InconsistentError& e) {
    Json j = error_json(e.kind(), e.what(), std::nullopt);
    j["error"]["witness"] = e.witness();
    report_error(j);
    return 1;
  } catch (const betaz::Error& e) {
    report_error(error_json(e.kind(), e.what(), std::nullopt));
    return 1;
  } catch (const std::exception& e) {
    report_error(error_json("error", e.what(), std::nullopt));
    return 1;
  }
}
