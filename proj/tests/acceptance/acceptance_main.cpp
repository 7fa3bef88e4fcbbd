#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "betaz/cells.hpp"
#include "betaz/decomp.hpp"
#include "betaz/error.hpp"
#include "betaz/filters.hpp"
#include "betaz/frontend.hpp"
#include "betaz/random.hpp"
#include "betaz/serialize.hpp"
#include "betaz/smooth.hpp"
#include "betaz/windows.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using betaz::Decision;
using betaz::DefinableSet;
using betaz::Direction;
using betaz::GaussianRational;
using betaz::Polynomial;
using betaz::Principal;
using betaz::Rational;
using betaz::Sign;
using betaz::SymbolicSequence;
using betaz::UltrafilterSpec;

namespace {

// Thrown on the first violated check; the message becomes the FAIL detail.
struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Rational q(long a, unsigned long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Rational two_pow_neg(unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r /= 2;
  return r;
}

Direction refine_for(Direction pt, const std::vector<DefinableSet>& family) {
  for (const auto& s : family)
    if (!betaz::compatible(s, pt)) pt = betaz::auto_extend(pt, s.period(pt.sign));
  return pt;
}

Direction refine_for(Direction pt, const SymbolicSequence& s) {
  const std::int64_t period = betaz::normalize(s).direction_period(pt.sign);
  return pt.modulus % period == 0 ? pt : betaz::auto_extend(pt, period);
}

std::string dyadic_rate() {
  const auto start = std::chrono::steady_clock::now();
  betaz::Rng rng(1001);
  std::size_t comparisons = 0;
  for (int i = 0; i < 100; ++i) {
    const auto phi = betaz::random_unit_range(rng);
    std::vector<Rational> values;
    for (std::int64_t n = -200; n <= 200; ++n) {
      const auto v = betaz::eval(phi, n);
      require(v.is_real(), "phi " + std::to_string(i) + " is not real");
      values.push_back(v.re());
    }
    for (unsigned depth = 1; depth <= 12; ++depth) {
      const auto rec = betaz::recompose(betaz::dyadic_decompose(phi, depth));
      const Rational bound = two_pow_neg(depth);
      Rational worst(0);
      for (std::int64_t n = -200; n <= 200; ++n) {
        const auto r = betaz::eval(rec, n);
        require(r.is_real(), "recomposition is not real");
        const Rational diff = abs(values[static_cast<std::size_t>(n + 200)] - r.re());
        worst = std::max(worst, diff);
        ++comparisons;
      }
      require(worst <= bound, "phi " + std::to_string(i) + " N=" + std::to_string(depth) + " sup " + worst.get_str() +
                                  " > " + bound.get_str());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << comparisons << " exact comparisons, " << secs << " s";
  require(secs < 10.0, os.str() + " exceeds 10 s");
  return os.str();
}

std::string level_form() {
  betaz::Rng rng(1002);
  for (int i = 0; i < 100; ++i) {
    const auto phi = betaz::random_step_sequence(rng, 5, i % 2 == 1);
    const auto e = betaz::level_decompose(phi);
    for (std::size_t a = 0; a < e.terms.size(); ++a) {
      require(!e.terms[a].projection.is_empty(), "empty projection");
      for (std::size_t b = a + 1; b < e.terms.size(); ++b) {
        require(!e.terms[a].projection.intersects(e.terms[b].projection), "overlapping projections");
        require(e.terms[a].constant != e.terms[b].constant, "repeated constant");
      }
    }
    require(betaz::recompose(e) == betaz::normalize(phi), "round trip differs at sample " + std::to_string(i));
  }
  oracle::Rng orng(1003);
  for (int i = 0; i < 100; ++i) {
    oracle::RawOptions o;
    o.max_tails = 0;
    o.max_steps = 5;
    auto raw = oracle::random_raw(orng, o);
    const auto ref = betaz::to_json(betaz::level_decompose(raw.build())).dump();
    for (int k = 0; k < 3; ++k) {
      std::shuffle(raw.steps.begin(), raw.steps.end(), orng);
      require(betaz::to_json(betaz::level_decompose(raw.build())).dump() == ref, "permutation changed the output");
    }
  }
  return "100 step functions disjoint/distinct/round-trip, 100 permutation-invariant";
}

std::string hierarchy() {
  const auto s = SymbolicSequence::rational(Polynomial(1), Polynomial::from_integers({1, 0, 1}));
  const auto r = betaz::classify(s);
  require(r.c0 && !r.schwartz && !r.smooth, "flags c0/schwartz/smooth wrong");
  require(r.consistent(), "inconsistent flags");
  require(r.witness.has_value(), "no witness");
  const auto& w = *r.witness;
  require(w.degree == 2, "witness degree " + std::to_string(w.degree));
  require(betaz::verify_witness(s, w), "witness does not verify");
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    const std::int64_t n = w.samples[i];
    const GaussianRational lhs = betaz::eval(s, n) * GaussianRational(Rational(n) * Rational(n));
    require(lhs.norm2() == w.sample_values_sq[i] && lhs.norm2() >= w.bound_sq, "sample " + std::to_string(n));
  }

  const auto psi = SymbolicSequence::geometric(q(1, 2));
  const auto win = betaz::window_exp_i(psi, 1000);
  for (unsigned d = 0; d <= 5; ++d)
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      const auto p = betaz::empirical_profile(win, sg, d, 1.0);
      require(p.trend == betaz::Trend::DecreasingToZero, "e^{i psi} profile at d=" + std::to_string(d) + " is " +
                                                             betaz::to_string(p.trend));
    }
  std::ostringstream os;
  os << "witness d=2 on " << w.samples.size() << " exact samples; e^{i psi} decreasing for d<=5";
  return os.str();
}

std::string smoothness_closure() {
  betaz::Rng rng(1004);
  for (int i = 0; i < 1000; ++i) {
    const auto a = betaz::random_smooth(rng);
    const auto b = betaz::random_smooth(rng);
    require(betaz::is_smooth(a * b).smooth, "product " + std::to_string(i));
    require(betaz::is_smooth(a + b).smooth, "sum " + std::to_string(i));
    require(betaz::is_smooth(betaz::conj(a)).smooth, "conjugate " + std::to_string(i));
  }
  return "1000 pairs, 0 failures";
}

std::string filter_axioms() {
  betaz::Rng rng(1005);
  auto check = [](const std::vector<betaz::AxiomReport>& reports, const std::string& who) {
    for (const auto& r : reports)
      require(r.ok() && r.passed == r.samples && r.samples >= 1000,
              who + " " + r.axiom + ": " + r.counterexample.value_or("short run"));
  };
  for (int i = 0; i < 8; ++i) {
    const Direction pt = betaz::random_direction(rng, 6);
    const auto reports = betaz::check_filter_axioms(UltrafilterSpec(pt), 1000, 2000 + i);
    require(reports.size() == 3 && reports[2].axiom == "dichotomy", "dichotomy not checked");
    check(reports, betaz::to_string(UltrafilterSpec(pt)));
  }
  for (std::int64_t n : {-7, 0, 12}) check(betaz::check_filter_axioms(UltrafilterSpec(Principal{n}), 1000, 3000 + n), "n=" + std::to_string(n));
  for (int i = 0; i < 4; ++i) {
    std::vector<DefinableSet> base;
    for (int k = 0; k < 3; ++k) base.push_back(betaz::random_infinite_set(rng) | DefinableSet::residue_class(4, 1));
    check(betaz::check_filter_axioms(betaz::FilterBase(base), 1000, 4000 + i), "filter base");
  }

  // UF then FU: the trace of a point admits the point
  oracle::Rng orng(1006);
  for (int i = 0; i < 100; ++i) {
    std::vector<DefinableSet> family;
    for (int k = 0; k < 4; ++k) family.push_back(oracle::random_set_case(orng).set);
    UltrafilterSpec pt;
    if (i % 4 == 0) {
      pt = Principal{oracle::uniform(orng, -30, 30)};
    } else {
      pt = refine_for(betaz::random_direction(rng), family);
    }
    const auto trace = betaz::point_from_trace(betaz::trace_of(pt, family));
    if (const auto* d = std::get_if<Direction>(&pt)) {
      const Direction fine = refine_for(*d, {trace.admissible});
      require(trace.admits(fine), "trace does not admit its point");
      const Direction ext = betaz::extend_point(fine, std::lcm(fine.modulus, trace.modulus), fine.residue);
      require(std::any_of(trace.completions.begin(), trace.completions.end(),
                          [&](const Direction& c) { return betaz::refines(ext, c); }),
              "point missing from completions");
    } else {
      require(trace.admits(pt), "trace does not admit its principal point");
    }
  }
  // FU then UF: every completion reproduces the decisions
  int families = 0;
  while (families < 100) {
    std::vector<Decision> decisions;
    std::vector<DefinableSet> sets;
    for (int k = 0; k < 3; ++k) {
      sets.push_back(oracle::random_set_case(orng).set);
      decisions.push_back({sets.back(), oracle::uniform(orng, 0, 1) == 1});
    }
    betaz::PointTrace trace;
    try {
      trace = betaz::point_from_trace(decisions);
    } catch (const betaz::InconsistentError&) {
      continue;
    }
    ++families;
    std::vector<UltrafilterSpec> points(trace.completions.begin(), trace.completions.end());
    if (trace.admissible.is_finite())
      for (std::int64_t n : trace.admissible.elements()) points.emplace_back(Principal{n});
    require(!points.empty(), "consistent trace with no points");
    for (const auto& p : points) {
      const auto back = betaz::trace_of(p, sets);
      for (std::size_t k = 0; k < sets.size(); ++k) require(back[k].member == decisions[k].member, "round trip changed a decision");
    }
  }
  return "15 points/filters x 1000 samples, UF/FU round trips on 100+100 families";
}

std::string limits() {
  betaz::Rng rng(1007);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const auto s = betaz::random_fast_limit(rng);
    const Direction pt = refine_for(betaz::random_direction(rng), s);
    const auto lim = betaz::limit_at(s, pt);
    const std::complex<double> target(betaz::to_double(lim.re()), betaz::to_double(lim.im()));
    const std::int64_t sg = pt.sign == Sign::Plus ? 1 : -1;
    const double err = std::abs(betaz::eval_numeric(s, pt.residue + sg * pt.modulus * 10000) - target);
    worst = std::max(worst, err);
    require(err <= 1e-6, "net value off by " + std::to_string(err) + " at sample " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const auto a = betaz::random_bounded(rng);
    const auto b = betaz::random_bounded(rng);
    const GaussianRational c(betaz::random_rational(rng), betaz::random_rational(rng));
    const Direction pt = refine_for(refine_for(betaz::random_direction(rng), a), b);
    const auto la = betaz::limit_at(a, pt), lb = betaz::limit_at(b, pt);
    require(betaz::limit_at(a * b, pt) == la * lb, "not multiplicative");
    require(betaz::limit_at(betaz::scale(c, a) + b, pt) == c * la + lb, "not linear");
  }
  std::ostringstream os;
  os << "max net error " << worst << " at t=10^4; exact linearity/multiplicativity on 100 pairs";
  return os.str();
}

std::string certificate() {
  std::vector<betaz::LevelChainTerm> spec;
  for (unsigned k = 1; k <= 5; ++k) {
    const std::int64_t m = std::int64_t{1} << k;
    spec.push_back({q(1, k), DefinableSet::residue_class(m, m / 2)});
  }
  const auto cert = betaz::level_chain_certificate(spec, 0);
  require(cert.chain.size() == 5, "chain length");
  for (std::size_t k = 0; k < cert.chain.size(); ++k) {
    require(!cert.chain[k].is_empty(), "empty U_" + std::to_string(k + 1));
    if (k + 1 < cert.chain.size())
      require(cert.chain[k + 1].subset_of(cert.chain[k]) && cert.chain[k + 1] != cert.chain[k], "chain not strictly decreasing");
  }
  std::vector<unsigned> degrees;
  for (const auto& w : cert.witnesses) {
    require(w.term >= 1 && w.term <= spec.size() && spec[w.term - 1].set.contains(w.n), "witness outside its level");
    Rational lhs = spec[w.term - 1].c - cert.c0;
    for (unsigned i = 0; i < w.degree; ++i) lhs *= Rational(w.n);
    require(abs(lhs) == w.value && abs(lhs) >= 1, "witness inequality fails at d=" + std::to_string(w.degree));
    require(betaz::eval(cert.sequence, w.n) == GaussianRational(spec[w.term - 1].c), "sequence value at witness");
    degrees.push_back(w.degree);
  }
  require(degrees == std::vector<unsigned>{2, 3, 4, 5}, "witness degrees");
  // independent verdict at the chain's direction
  const auto v = betaz::smooth_at_value(cert.sequence, cert.point, GaussianRational(cert.c0));
  require(!v.smooth && v.witness && betaz::verify_witness(cert.sequence, *v.witness), "sequence not shown non-smooth");
  require(betaz::point_contains(cert.point, cert.chain.back()), "point not in last U");
  std::ostringstream os;
  os << "chain of 5, witnesses n=";
  for (const auto& w : cert.witnesses) os << w.n << (w.degree < 5 ? "," : "");
  os << " for d=2..5, non-smooth at " << betaz::to_string(UltrafilterSpec(cert.point));
  return os.str();
}

std::string schwartz_ideal() {
  const auto rep = betaz::check_schwartz_ideal(1000, 1008);
  require(rep.ok() && rep.samples == 1000, "ideal: " + rep.counterexample.value_or("short run"));
  const auto unital = betaz::check_unital_not_ideal();
  require(unital.ok(), "unital: " + unital.counterexample.value_or(""));
  const auto one = SymbolicSequence::constant(1);
  const auto psi = SymbolicSequence::rational(Polynomial(1), Polynomial::from_integers({1, 0, 1}));
  const auto c1 = betaz::classify(one);
  const auto cp = betaz::classify(one * psi);
  require(c1.linf_c && c1.smooth, "1 misclassified");
  require(!cp.linf_c && !cp.smooth && cp.linf, "1*psi misclassified");
  return "1000 samples; 1 in linf_c and smooth, 1/(n^2+1) in neither";
}

struct CliResult {
  int code = -1;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = BETAZ_CLI;
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string frontend() {
  namespace dsl = betaz::dsl;
  const auto& items = corpus::items();
  require(items.size() >= 50, "corpus too small");
  for (const auto& item : items) {
    const auto node = dsl::parse(item.text, item.grammar);
    const auto again = dsl::parse(dsl::print(node), item.grammar);
    require(dsl::structurally_equal(node, again) && dsl::print(again) == dsl::print(node), std::string("round trip: ") + item.text);
    require(corpus::same(corpus::lower(node, item.grammar), corpus::lower(again, item.grammar)), std::string("value: ") + item.text);
  }
  std::mt19937_64 rng(1009);
  for (std::size_t v = 0; v < 1000; ++v) {
    const auto& item = items[v % items.size()];
    const auto node = dsl::parse(item.text, item.grammar);
    const std::string fuzzed = dsl::print_fuzzed(node, rng);
    require(corpus::same(corpus::lower(node, item.grammar), corpus::lower(dsl::parse(fuzzed, item.grammar), item.grammar)),
            "fuzzed variant changed value: " + fuzzed);
  }

  const std::vector<std::vector<std::string>> dsl_errors = {
      {"parse", "--expr", "mod 2 == 0 &"},
      {"parse", "--expr", "ind(mod 2 == 0"},
      {"classify", "--expr", "geo(3/2)"},
      {"classify", "--expr", "ind(geo(1/2))"},
      {"classify", "--expr", "rat(1 ; n^2 - 1)"},
      {"classify", "--expr", "3 $ 4"},
      {"limit", "--expr", "1", "--at", "+inf mod 0 == 0"},
      {"limit", "--expr", "1", "--at", "sideways"},
      {"seminorm", "--expr", "1 +", "--d", "1"},
      {"window", "eval", "--expr", "rat(1 ; ", "--N", "3"},
  };
  std::size_t checked = 0;
  for (const auto& args : dsl_errors) {
    std::vector<std::string> full{"--json"};
    full.insert(full.end(), args.begin(), args.end());
    const auto r = run_cli(full);
    require(r.code == 1, "exit " + std::to_string(r.code) + " for " + args.back());
    const auto j = betaz::Json::parse(r.out);
    require(j["error"]["line"].is_number() && j["error"]["column"].is_number(), "no position for " + args.back());
    ++checked;
  }
  const std::vector<std::vector<std::string>> other_errors = {
      {"bogus"},
      {"classify", "--expr", "1", "--nope"},
      {"classify"},
      {"limit", "--expr", "ind(mod 3 == 0)", "--at", "+inf mod 2 == 0"},
      {"decompose", "--dyadic", "3", "--expr", "2"},
  };
  for (const auto& args : other_errors) {
    const auto r = run_cli(args);
    require(r.code != 0, "exit 0 for " + args.front());
    ++checked;
  }
  std::ostringstream os;
  os << items.size() << " corpus items, 1000 fuzzed variants, " << checked << " CLI error paths";
  return os.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"dyadic_rate", dyadic_rate},
      {"level_form", level_form},
      {"hierarchy", hierarchy},
      {"smoothness_closure", smoothness_closure},
      {"filter_axioms", filter_axioms},
      {"limits", limits},
      {"level_chain_certificate", certificate},
      {"schwartz_ideal", schwartz_ideal},
      {"frontend", frontend},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    std::string status = "PASS";
    std::string detail;
    try {
      detail = run();
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    if (status == "FAIL") ++failed;
    std::cout << status << " " << name << ": " << detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
