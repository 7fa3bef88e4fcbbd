#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "betaz/error.hpp"
#include "betaz/point.hpp"
#include "betaz/polynomial.hpp"
#include "betaz/rational.hpp"
#include "betaz/seqalg.hpp"
#include "betaz/setalg.hpp"

namespace betaz::dsl {

/// 1-based line/column of the first character plus byte offset and length.
struct Span {
  int line = 1;
  int column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// A positioned DSL error. kind() is "syntax", "type" or "validation".
class DslError : public Error {
 public:
  DslError(std::string kind, const std::string& message, const Span& span, std::string expected = {});
  const char* kind() const noexcept override { return kind_.c_str(); }
  const Span& span() const noexcept { return span_; }
  int line() const noexcept { return span_.line; }
  int column() const noexcept { return span_.column; }
  /// What the parser would have accepted, e.g. "')'" or "set expression".
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string kind_;
  Span span_;
  std::string expected_;
};

enum class Grammar { Set, Sequence, Point };

enum class NodeKind {
  // sets
  SetResidue,     // ints = {M, r}
  SetFinite,      // ints = members
  SetInterval,    // ints = {a, b}
  SetCompare,     // op in {">=", ">", "<=", "<"}, ints = {k}
  SetAll,
  SetEmpty,
  SetUnion,       // children = {a, b}
  SetIntersect,
  SetDifference,
  SetComplement,  // children = {a}
  // sequences
  SeqNumber,      // number (a/b, c/d i)
  SeqInd,         // children = {set}
  SeqRat,         // p, q
  SeqGeo,         // number = rate
  SeqAdd,
  SeqSub,
  SeqMul,
  SeqNeg,
  SeqOn,          // children = {seq, set}
  SeqConj,
  SeqPi,          // numeric only
  SeqExpI,        // numeric only, children = {seq}
  // points
  PointPrincipal, // ints = {n}
  PointDirection, // ints = {sign, M, r}
};

std::string_view kind_name(NodeKind k);
bool is_set_kind(NodeKind k);

struct Node {
  NodeKind kind = NodeKind::SetEmpty;
  Span span;
  std::vector<Node> children;
  std::vector<std::int64_t> ints;
  std::string op;
  GaussianRational number;
  Polynomial p;
  Polynomial q;
};

/// Equality of everything except spans.
bool structurally_equal(const Node& a, const Node& b);

Node parse(std::string_view text, Grammar g);
/// Tries sequence, then set, then point; reports the error of the attempt
/// that got furthest.
Node parse_any(std::string_view text);

/// Fewest parentheses that preserve the tree.
std::string print(const Node& n);
/// Same tree, random whitespace and redundant parentheses.
std::string print_fuzzed(const Node& n, std::mt19937_64& rng);

DefinableSet lower_set(const Node& n);
/// Throws DslError for the numeric-only constructs pi and expi.
SymbolicSequence lower_sequence(const Node& n);
UltrafilterSpec lower_point(const Node& n);

/// True when the tree lowers exactly (no pi / expi).
bool is_exact(const Node& n);
/// Double-precision evaluator of any sequence tree, numeric-only constructs included.
std::function<std::complex<double>(std::int64_t)> numeric_sequence(const Node& n);

inline DefinableSet parse_set(std::string_view text) { return lower_set(parse(text, Grammar::Set)); }
inline SymbolicSequence parse_sequence(std::string_view text) { return lower_sequence(parse(text, Grammar::Sequence)); }
inline UltrafilterSpec parse_point(std::string_view text) { return lower_point(parse(text, Grammar::Point)); }

}  // namespace betaz::dsl
