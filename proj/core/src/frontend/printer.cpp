#include <string>

#include "betaz/frontend.hpp"

namespace betaz::dsl {

namespace {

class Printer {
 public:
  explicit Printer(std::mt19937_64* rng) : rng_(rng) {}

  std::string node(const Node& n, int min_prec = 0) {
    std::string body = raw(n);
    const int p = prec(n.kind);
    if (p < min_prec) return "(" + opt() + body + opt() + ")";
    if (rng_ && wrappable(n.kind) && coin(0.25)) return "(" + opt() + body + opt() + ")";
    return body;
  }

 private:
  static int prec(NodeKind k) {
    switch (k) {
      case NodeKind::SetUnion:
      case NodeKind::SetDifference: return 1;
      case NodeKind::SetIntersect: return 2;
      case NodeKind::SetComplement: return 3;
      case NodeKind::SeqAdd:
      case NodeKind::SeqSub: return 1;
      case NodeKind::SeqMul: return 2;
      case NodeKind::SeqNeg: return 3;
      case NodeKind::SeqOn: return 4;
      default: return 5;
    }
  }

  static bool wrappable(NodeKind k) { return k != NodeKind::PointPrincipal && k != NodeKind::PointDirection; }

  bool coin(double p) { return std::bernoulli_distribution(p)(*rng_); }

  // Whitespace where none is required.
  std::string opt() {
    if (!rng_) return "";
    static const char* choices[] = {"", "", " ", "  ", "\n", "\t", " \n "};
    return choices[std::uniform_int_distribution<int>(0, 6)(*rng_)];
  }
  // Whitespace that must be present (or conventional).
  std::string sp() {
    if (!rng_) return " ";
    static const char* choices[] = {" ", "  ", "\n", "\t", " \n\t"};
    return choices[std::uniform_int_distribution<int>(0, 4)(*rng_)];
  }
  // Conventional single space around binary operators.
  std::string pad() { return rng_ ? opt() : " "; }

  std::string integer(std::int64_t v) {
    if (v < 0) return "-" + opt() + std::to_string(-v);
    return std::to_string(v);
  }

  std::string rational(const Rational& r) {
    if (r.get_den() == 1) return to_string(Integer(r.get_num()));
    return to_string(Integer(r.get_num())) + opt() + "/" + opt() + to_string(Integer(r.get_den()));
  }

  std::string number(const GaussianRational& z) {
    if (z.is_real()) return rational(z.re());
    if (sgn(z.re()) == 0) {
      if (z.im() == 1) return "i";
      return rational(z.im()) + sp() + "i";
    }
    return "(" + rational(z.re()) + pad() + "+" + pad() + rational(z.im()) + sp() + "i)";
  }

  std::string polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
      const Rational c = p.coeff(static_cast<std::size_t>(k));
      if (sgn(c) == 0) continue;
      const Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) out += "-" + opt();
      } else {
        out += pad() + (sgn(c) < 0 ? "-" : "+") + pad();
      }
      first = false;
      std::string term;
      if (k == 0 || mag != 1) term = to_string(Integer(mag.get_num()));
      if (k > 0) {
        if (!term.empty()) term += opt() + "*" + opt();
        term += "n";
        if (k > 1) term += opt() + "^" + opt() + std::to_string(k);
      }
      out += term;
    }
    if (rng_ && coin(0.2)) return "(" + opt() + out + opt() + ")";
    return out;
  }

  std::string call(const char* name, const std::string& inner) { return name + opt() + "(" + opt() + inner + opt() + ")"; }

  std::string raw(const Node& n) {
    const auto child = [&](std::size_t i, int min_prec) { return node(n.children[i], min_prec); };
    switch (n.kind) {
      case NodeKind::SetResidue:
        return "mod" + sp() + std::to_string(n.ints[0]) + pad() + "==" + pad() + std::to_string(n.ints[1]);
      case NodeKind::SetFinite: {
        std::string out = "{" + opt();
        for (std::size_t i = 0; i < n.ints.size(); ++i) out += (i ? opt() + "," + pad() : "") + integer(n.ints[i]);
        return out + opt() + "}";
      }
      case NodeKind::SetInterval:
        return "[" + opt() + integer(n.ints[0]) + opt() + ".." + opt() + integer(n.ints[1]) + opt() + "]";
      case NodeKind::SetCompare: return "n" + pad() + n.op + pad() + integer(n.ints[0]);
      case NodeKind::SetAll: return "all";
      case NodeKind::SetEmpty: return "empty";
      case NodeKind::SetUnion: return child(0, 1) + pad() + "|" + pad() + child(1, 2);
      case NodeKind::SetDifference: return child(0, 1) + pad() + "\\" + pad() + child(1, 2);
      case NodeKind::SetIntersect: return child(0, 2) + pad() + "&" + pad() + child(1, 3);
      case NodeKind::SetComplement: return "~" + opt() + child(0, 3);
      case NodeKind::SeqNumber: return number(n.number);
      case NodeKind::SeqInd: return call("ind", child(0, 0));
      case NodeKind::SeqRat: return call("rat", polynomial(n.p) + pad() + ";" + pad() + polynomial(n.q));
      case NodeKind::SeqGeo: return call("geo", rational(n.number.re()));
      case NodeKind::SeqAdd: return child(0, 1) + pad() + "+" + pad() + child(1, 2);
      case NodeKind::SeqSub: return child(0, 1) + pad() + "-" + pad() + child(1, 2);
      case NodeKind::SeqMul: return child(0, 2) + pad() + "*" + pad() + child(1, 3);
      case NodeKind::SeqNeg: return "-" + opt() + child(0, 3);
      case NodeKind::SeqOn: return child(0, 4) + sp() + "on" + sp() + child(1, 0);
      case NodeKind::SeqConj: return call("conj", child(0, 0));
      case NodeKind::SeqPi: return "pi";
      case NodeKind::SeqExpI: return call("expi", child(0, 0));
      case NodeKind::PointPrincipal: return "n" + opt() + "=" + opt() + integer(n.ints[0]);
      case NodeKind::PointDirection: {
        std::string out = std::string(n.ints[0] > 0 ? "+" : "-") + opt() + "inf";
        if (n.ints[1] != 1 || n.ints[2] != 0)
          out += sp() + "mod" + sp() + std::to_string(n.ints[1]) + pad() + "==" + pad() + std::to_string(n.ints[2]);
        return out;
      }
    }
    return {};
  }

  std::mt19937_64* rng_;
};

}  // namespace

std::string print(const Node& n) { return Printer(nullptr).node(n); }

std::string print_fuzzed(const Node& n, std::mt19937_64& rng) { return Printer(&rng).node(n); }

}  // namespace betaz::dsl
