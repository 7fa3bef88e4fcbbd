#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "betaz/frontend.hpp"

namespace corpus {

namespace dsl = betaz::dsl;
using betaz::DefinableSet;
using betaz::SymbolicSequence;
using dsl::Grammar;

struct Item {
  const char* text;
  Grammar grammar;
};

inline const std::vector<Item>& items() {
  static const std::vector<Item> items = {
      {"mod 2 == 0", Grammar::Set},
      {"(mod 2 == 0) & (mod 3 == 0)", Grammar::Set},
      {"mod 2 == 0 | mod 3 == 1", Grammar::Set},
      {"~mod 5 == 4", Grammar::Set},
      {"~(mod 2 == 0 | {3})", Grammar::Set},
      {"{1, 4, 9}", Grammar::Set},
      {"{}", Grammar::Set},
      {"{-3}", Grammar::Set},
      {"[2 .. 7]", Grammar::Set},
      {"[-10 .. -1] | [1 .. 10]", Grammar::Set},
      {"n >= 0", Grammar::Set},
      {"n > 3", Grammar::Set},
      {"n <= -2", Grammar::Set},
      {"n < 0 & mod 4 == 1", Grammar::Set},
      {"all", Grammar::Set},
      {"empty", Grammar::Set},
      {"all \\ {0}", Grammar::Set},
      {"mod 6 == 0 \\ mod 4 == 0", Grammar::Set},
      {"(mod 2 == 0 \\ {8}) | {3}", Grammar::Set},
      {"mod 2 == 0 & n >= 0 | mod 3 == 0 & n < 0", Grammar::Set},
      {"~~mod 7 == 3", Grammar::Set},
      {"mod 2 == 0 & (mod 3 == 0 | mod 5 == 0)", Grammar::Set},
      {"(mod 2 == 0 | mod 3 == 0) \\ (mod 6 == 0 | [0 .. 5])", Grammar::Set},
      {"3/4", Grammar::Sequence},
      {"-2", Grammar::Sequence},
      {"1/2 + 3/4 i", Grammar::Sequence},
      {"i", Grammar::Sequence},
      {"2 i", Grammar::Sequence},
      {"ind(mod 2 == 0)", Grammar::Sequence},
      {"ind(mod 2 == 0) + rat(1 ; n^2+1)", Grammar::Sequence},
      {"rat(1 ; n^2 + 1)", Grammar::Sequence},
      {"rat(n ; n^3 + 2)", Grammar::Sequence},
      {"rat(n^2 ; n^2 + 1)", Grammar::Sequence},
      {"rat(2n - 1 ; 3n^2 + n + 1)", Grammar::Sequence},
      {"rat(-n + 4 ; (n^2 + 1) * (n^2 + 3))", Grammar::Sequence},
      {"geo(1/2)", Grammar::Sequence},
      {"geo(1)", Grammar::Sequence},
      {"geo(2/3) * rat(n ; n^2 + 1)", Grammar::Sequence},
      {"ind(mod 2 == 0) + 3 * ind({7})", Grammar::Sequence},
      {"ind(mod 2 == 0) + geo(1/2)", Grammar::Sequence},
      {"2 * ind(mod 2 == 0) + 2 * ind({3}) + 5 * ind({8})", Grammar::Sequence},
      {"geo(1/2) on mod 2 == 1", Grammar::Sequence},
      {"rat(1 ; n^2 + 1) on n >= 0 + 1", Grammar::Sequence},
      {"(geo(1/3) + 1) on ~{0}", Grammar::Sequence},
      {"conj(1/2 + i) * ind(mod 3 == 1)", Grammar::Sequence},
      {"-geo(1/2)", Grammar::Sequence},
      {"-(ind(all) - 1)", Grammar::Sequence},
      {"1 - ind(mod 2 == 0) * ind(mod 3 == 0)", Grammar::Sequence},
      {"(1 + i) * rat(1 ; n^2 + 1)", Grammar::Sequence},
      {"ind(n >= 0) - ind(n < 0)", Grammar::Sequence},
      {"1/3 * geo(1/2) - 2/5 * geo(1/4) + 7", Grammar::Sequence},
      {"expi(geo(1/2))", Grammar::Sequence},
      {"expi(pi * geo(1/2))", Grammar::Sequence},
      {"pi * ind({0})", Grammar::Sequence},
      {"conj(conj(i))", Grammar::Sequence},
      {"n=5", Grammar::Point},
      {"n=-12", Grammar::Point},
      {"+inf", Grammar::Point},
      {"-inf", Grammar::Point},
      {"+inf mod 6 == 5", Grammar::Point},
      {"-inf mod 2 == 1", Grammar::Point},
  };
  return items;
}

// Lowered value as something comparable: set, exact sequence, point, or a numeric window.
struct Lowered {
  std::optional<DefinableSet> set;
  std::optional<SymbolicSequence> seq;
  std::optional<betaz::UltrafilterSpec> point;
  std::vector<std::complex<double>> window;
};

inline Lowered lower(const dsl::Node& n, Grammar g) {
  Lowered out;
  if (g == Grammar::Set) {
    out.set = dsl::lower_set(n);
  } else if (g == Grammar::Point) {
    out.point = dsl::lower_point(n);
  } else if (dsl::is_exact(n)) {
    out.seq = dsl::lower_sequence(n);
  } else {
    const auto f = dsl::numeric_sequence(n);
    for (std::int64_t k = -30; k <= 30; ++k) out.window.push_back(f(k));
  }
  return out;
}

inline bool same(const Lowered& a, const Lowered& b) {
  return a.set == b.set && a.seq == b.seq && a.point == b.point && a.window == b.window;
}

}  // namespace corpus
