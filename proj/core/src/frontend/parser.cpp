#include <algorithm>
#include <limits>

#include "betaz/frontend.hpp"
#include "lexer.hpp"

namespace betaz::dsl {

namespace {

constexpr unsigned kMaxExponent = 64;

bool is_cmp(const Token& t) {
  return t.kind == TokenKind::Punct && (t.text == ">=" || t.text == ">" || t.text == "<=" || t.text == "<");
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Node parse(Grammar g) {
    Node n;
    switch (g) {
      case Grammar::Set: n = set_expr(); break;
      case Grammar::Sequence: n = seq_expr(); break;
      case Grammar::Point: n = point(); break;
    }
    if (peek().kind != TokenKind::End) fail("unexpected " + describe(peek()), peek(), expected_after(g));
    return n;
  }

 private:
  static std::string expected_after(Grammar g) {
    switch (g) {
      case Grammar::Set: return "'|', '&', '\\' or end of input";
      case Grammar::Sequence: return "'+', '-', '*', 'on' or end of input";
      default: return "end of input";
    }
  }

  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool punct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::Punct && peek(k).text == p;
  }
  bool ident(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::Ident && peek(k).text == p;
  }

  [[noreturn]] void fail(const std::string& msg, const Token& at, const std::string& expected = {}) const {
    throw DslError("syntax", msg, at.span, expected);
  }
  [[noreturn]] void type_error(const std::string& msg, const Token& at, const std::string& expected) const {
    throw DslError("type", msg, at.span, expected);
  }

  const Token& expect_punct(std::string_view p) {
    if (!punct(p)) fail("unexpected " + describe(peek()), peek(), "'" + std::string(p) + "'");
    return take();
  }
  const Token& expect_ident(std::string_view p) {
    if (!ident(p)) fail("unexpected " + describe(peek()), peek(), "'" + std::string(p) + "'");
    return take();
  }

  Span span_from(const Token& start) const {
    const Token& last = tokens_[pos_ == 0 ? 0 : pos_ - 1];
    Span s = start.span;
    s.length = last.span.offset + last.span.length - start.span.offset;
    return s;
  }

  Integer unsigned_int() {
    if (peek().kind != TokenKind::Int) fail("unexpected " + describe(peek()), peek(), "integer");
    return Integer(take().text);
  }

  std::int64_t to_small(const Integer& z, const Token& at) const {
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
      throw DslError("validation", "integer out of range", at.span);
    return to_int64(z);
  }

  std::int64_t signed_int() {
    const Token& start = peek();
    bool neg = false;
    if (punct("-")) {
      take();
      neg = true;
    }
    Integer z = unsigned_int();
    return to_small(neg ? Integer(-z) : z, start);
  }

  // ---- sets -------------------------------------------------------------

  bool starts_sequence_only() const {
    const Token& t = peek();
    if (t.kind == TokenKind::Int) return true;
    if (t.kind == TokenKind::Ident)
      return t.text == "rat" || t.text == "geo" || t.text == "ind" || t.text == "conj" || t.text == "i" ||
             t.text == "pi" || t.text == "expi";
    return punct("-");
  }

  bool starts_set_only() const {
    if (punct("{") || punct("[") || punct("~")) return true;
    if (ident("mod") || ident("all") || ident("empty")) return true;
    return ident("n") && is_cmp(peek(1));
  }

  Node set_expr() {
    const Token& start = peek();
    Node left = set_inter();
    while (punct("|") || punct("\\")) {
      const NodeKind k = take().text == "|" ? NodeKind::SetUnion : NodeKind::SetDifference;
      Node right = set_inter();
      Node n;
      n.kind = k;
      n.children = {std::move(left), std::move(right)};
      n.span = span_from(start);
      left = std::move(n);
    }
    return left;
  }

  Node set_inter() {
    const Token& start = peek();
    Node left = set_unary();
    while (punct("&")) {
      take();
      Node right = set_unary();
      Node n;
      n.kind = NodeKind::SetIntersect;
      n.children = {std::move(left), std::move(right)};
      n.span = span_from(start);
      left = std::move(n);
    }
    return left;
  }

  Node set_unary() {
    const Token& start = peek();
    if (punct("~")) {
      take();
      Node n;
      n.kind = NodeKind::SetComplement;
      n.children = {set_unary()};
      n.span = span_from(start);
      return n;
    }
    return set_atom();
  }

  Node set_atom() {
    const Token& start = peek();
    Node n;
    if (ident("mod")) {
      take();
      const Token& mt = peek();
      const std::int64_t m = to_small(unsigned_int(), mt);
      expect_punct("==");
      const Token& rt = peek();
      const std::int64_t r = to_small(unsigned_int(), rt);
      if (m < 1) throw DslError("validation", "modulus must be at least 1", mt.span);
      if (r >= m) throw DslError("validation", "residue must be in [0, " + std::to_string(m - 1) + "]", rt.span);
      n.kind = NodeKind::SetResidue;
      n.ints = {m, r};
    } else if (punct("{")) {
      take();
      n.kind = NodeKind::SetFinite;
      if (!punct("}")) {
        n.ints.push_back(signed_int());
        while (punct(",")) {
          take();
          n.ints.push_back(signed_int());
        }
      }
      expect_punct("}");
    } else if (punct("[")) {
      take();
      const std::int64_t a = signed_int();
      expect_punct("..");
      const std::int64_t b = signed_int();
      expect_punct("]");
      if (a > b) throw DslError("validation", "interval [a..b] needs a <= b", start.span);
      n.kind = NodeKind::SetInterval;
      n.ints = {a, b};
    } else if (ident("n") && is_cmp(peek(1))) {
      take();
      n.kind = NodeKind::SetCompare;
      n.op = take().text;
      n.ints = {signed_int()};
    } else if (ident("all")) {
      take();
      n.kind = NodeKind::SetAll;
    } else if (ident("empty")) {
      take();
      n.kind = NodeKind::SetEmpty;
    } else if (punct("(")) {
      take();
      if (starts_sequence_only()) type_error("sequence expression in set context", peek(), "set expression");
      Node inner = set_expr();
      expect_punct(")");
      return inner;
    } else if (starts_sequence_only()) {
      type_error("sequence expression in set context", peek(), "set expression");
    } else {
      fail("unexpected " + describe(peek()), peek(), "set expression");
    }
    n.span = span_from(start);
    return n;
  }

  // ---- polynomials ------------------------------------------------------

  Polynomial poly_sum() {
    Polynomial acc = poly_prod();
    while (punct("+") || punct("-")) {
      const bool minus = take().text == "-";
      Polynomial rhs = poly_prod();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  bool starts_poly_atom() const { return peek().kind == TokenKind::Int || ident("n") || punct("("); }

  Polynomial poly_prod() {
    Polynomial acc = poly_unary();
    for (;;) {
      if (punct("*")) {
        take();
      } else if (!starts_poly_atom()) {
        break;  // otherwise implicit product, e.g. 2n
      }
      acc = acc * poly_unary();
    }
    return acc;
  }

  Polynomial poly_unary() {
    if (punct("-")) {
      take();
      return -poly_unary();
    }
    if (punct("+")) {
      take();
      return poly_unary();
    }
    return poly_pow();
  }

  Polynomial poly_pow() {
    Polynomial base = poly_atom();
    if (punct("^")) {
      take();
      const Token& et = peek();
      const Integer e = unsigned_int();
      if (e > kMaxExponent) throw DslError("validation", "exponent too large", et.span);
      Polynomial out(1);
      for (unsigned i = 0; i < e.get_ui(); ++i) out = out * base;
      return out;
    }
    return base;
  }

  Polynomial poly_atom() {
    if (peek().kind == TokenKind::Int) return Polynomial::constant(Rational(unsigned_int()));
    if (ident("n")) {
      take();
      return Polynomial::monomial(1, 1);
    }
    if (punct("(")) {
      take();
      Polynomial p = poly_sum();
      expect_punct(")");
      return p;
    }
    fail("unexpected " + describe(peek()), peek(), "polynomial in n");
  }

  // ---- sequences --------------------------------------------------------

  Node binary(NodeKind k, Node a, Node b, const Token& start) {
    Node n;
    n.kind = k;
    n.children = {std::move(a), std::move(b)};
    n.span = span_from(start);
    return n;
  }

  Node seq_expr() {
    const Token& start = peek();
    Node left = seq_term();
    while (punct("+") || punct("-")) {
      const NodeKind k = take().text == "+" ? NodeKind::SeqAdd : NodeKind::SeqSub;
      Node right = seq_term();
      left = binary(k, std::move(left), std::move(right), start);
    }
    return left;
  }

  Node seq_term() {
    const Token& start = peek();
    Node left = seq_unary();
    while (punct("*")) {
      take();
      Node right = seq_unary();
      left = binary(NodeKind::SeqMul, std::move(left), std::move(right), start);
    }
    return left;
  }

  Node seq_unary() {
    const Token& start = peek();
    if (punct("-")) {
      take();
      Node n;
      n.kind = NodeKind::SeqNeg;
      n.children = {seq_unary()};
      n.span = span_from(start);
      return n;
    }
    return seq_postfix();
  }

  Node seq_postfix() {
    const Token& start = peek();
    Node x = seq_primary();
    while (ident("on")) {
      take();
      Node s = set_expr();
      x = binary(NodeKind::SeqOn, std::move(x), std::move(s), start);
    }
    return x;
  }

  Rational rational_literal() {
    const Token& start = peek();
    const Integer a = unsigned_int();
    Integer b = 1;
    if (punct("/")) {
      take();
      b = unsigned_int();
      if (b == 0) throw DslError("validation", "division by zero in rational literal", span_from(start));
    }
    Rational r(a, b);
    r.canonicalize();
    return r;
  }

  Node call_with_sequence(NodeKind k, const Token& start) {
    take();
    expect_punct("(");
    Node n;
    n.kind = k;
    n.children = {seq_expr()};
    expect_punct(")");
    n.span = span_from(start);
    return n;
  }

  Node seq_primary() {
    const Token& start = peek();
    Node n;
    if (peek().kind == TokenKind::Int) {
      const Rational r = rational_literal();
      n.kind = NodeKind::SeqNumber;
      if (ident("i")) {
        take();
        n.number = GaussianRational(0, r);
      } else {
        n.number = GaussianRational(r);
      }
    } else if (ident("i")) {
      take();
      n.kind = NodeKind::SeqNumber;
      n.number = GaussianRational::i();
    } else if (ident("ind")) {
      take();
      expect_punct("(");
      if (starts_sequence_only()) type_error("ind( applied to a sequence", peek(), "set expression");
      n.kind = NodeKind::SeqInd;
      n.children = {set_expr()};
      expect_punct(")");
    } else if (ident("rat")) {
      take();
      expect_punct("(");
      n.kind = NodeKind::SeqRat;
      n.p = poly_sum();
      expect_punct(";");
      const Token& qt = peek();
      n.q = poly_sum();
      expect_punct(")");
      if (n.q.is_zero()) throw DslError("validation", "denominator is the zero polynomial", span_from(qt));
    } else if (ident("geo")) {
      take();
      expect_punct("(");
      const Token& rt = peek();
      const Rational r = rational_literal();
      if (sgn(r) <= 0 || r > 1) throw DslError("validation", "rate must be in (0,1]", span_from(rt));
      expect_punct(")");
      n.kind = NodeKind::SeqGeo;
      n.number = GaussianRational(r);
    } else if (ident("conj")) {
      return call_with_sequence(NodeKind::SeqConj, start);
    } else if (ident("expi")) {
      return call_with_sequence(NodeKind::SeqExpI, start);
    } else if (ident("pi")) {
      take();
      n.kind = NodeKind::SeqPi;
    } else if (punct("(")) {
      take();
      if (starts_set_only()) type_error("set expression in sequence context", peek(), "sequence expression");
      Node inner = seq_expr();
      expect_punct(")");
      return inner;
    } else if (starts_set_only()) {
      type_error("set expression in sequence context", peek(), "sequence expression");
    } else if (ident("n")) {
      fail("bare n is unbounded; write rat(p ; q)", peek(), "sequence expression");
    } else {
      fail("unexpected " + describe(peek()), peek(), "sequence expression");
    }
    n.span = span_from(start);
    return n;
  }

  // ---- points -----------------------------------------------------------

  Node point() {
    const Token& start = peek();
    Node n;
    if (ident("n")) {
      take();
      expect_punct("=");
      n.kind = NodeKind::PointPrincipal;
      n.ints = {signed_int()};
    } else if (punct("+") || punct("-")) {
      const std::int64_t sign = take().text == "+" ? 1 : -1;
      expect_ident("inf");
      std::int64_t m = 1;
      std::int64_t r = 0;
      if (ident("mod")) {
        take();
        const Token& mt = peek();
        m = to_small(unsigned_int(), mt);
        expect_punct("==");
        const Token& rt = peek();
        r = to_small(unsigned_int(), rt);
        if (m < 1) throw DslError("validation", "modulus must be at least 1", mt.span);
        if (r >= m) throw DslError("validation", "residue must be in [0, " + std::to_string(m - 1) + "]", rt.span);
      }
      n.kind = NodeKind::PointDirection;
      n.ints = {sign, m, r};
    } else {
      fail("unexpected " + describe(peek()), peek(), "'n=<int>' or '+inf'/'-inf'");
    }
    n.span = span_from(start);
    return n;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::SetResidue: return "set_residue";
    case NodeKind::SetFinite: return "set_finite";
    case NodeKind::SetInterval: return "set_interval";
    case NodeKind::SetCompare: return "set_compare";
    case NodeKind::SetAll: return "set_all";
    case NodeKind::SetEmpty: return "set_empty";
    case NodeKind::SetUnion: return "set_union";
    case NodeKind::SetIntersect: return "set_intersect";
    case NodeKind::SetDifference: return "set_difference";
    case NodeKind::SetComplement: return "set_complement";
    case NodeKind::SeqNumber: return "number";
    case NodeKind::SeqInd: return "ind";
    case NodeKind::SeqRat: return "rat";
    case NodeKind::SeqGeo: return "geo";
    case NodeKind::SeqAdd: return "add";
    case NodeKind::SeqSub: return "sub";
    case NodeKind::SeqMul: return "mul";
    case NodeKind::SeqNeg: return "neg";
    case NodeKind::SeqOn: return "on";
    case NodeKind::SeqConj: return "conj";
    case NodeKind::SeqPi: return "pi";
    case NodeKind::SeqExpI: return "expi";
    case NodeKind::PointPrincipal: return "point_principal";
    case NodeKind::PointDirection: return "point_direction";
  }
  return "unknown";
}

bool is_set_kind(NodeKind k) { return k <= NodeKind::SetComplement; }

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.ints != b.ints || a.op != b.op || !(a.number == b.number) || !(a.p == b.p) ||
      !(a.q == b.q) || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(a.children[i], b.children[i])) return false;
  return true;
}

Node parse(std::string_view text, Grammar g) { return Parser(text).parse(g); }

Node parse_any(std::string_view text) {
  std::optional<DslError> best;
  for (const Grammar g : {Grammar::Sequence, Grammar::Set, Grammar::Point}) {
    try {
      return parse(text, g);
    } catch (const DslError& e) {
      if (!best || e.span().offset > best->span().offset) best = e;
    }
  }
  throw *best;
}

}  // namespace betaz::dsl
