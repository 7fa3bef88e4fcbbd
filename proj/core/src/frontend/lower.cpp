#include <cmath>
#include <numbers>

#include "betaz/frontend.hpp"

namespace betaz::dsl {

namespace {

using NumericFn = std::function<std::complex<double>(std::int64_t)>;

template <class F>
auto with_span(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DslError&) {
    throw;
  } catch (const Error& e) {
    throw DslError("validation", e.what(), n.span);
  }
}

[[noreturn]] void wrong_sort(const Node& n, const char* expected) {
  throw DslError("type", std::string("expected ") + expected + ", found " + std::string(kind_name(n.kind)), n.span,
                 expected);
}

DefinableSet lower_set_impl(const Node& n) {
  const auto kid = [&](std::size_t i) { return lower_set_impl(n.children[i]); };
  switch (n.kind) {
    case NodeKind::SetResidue: return DefinableSet::residue_class(n.ints[0], n.ints[1]);
    case NodeKind::SetFinite: return DefinableSet::finite(n.ints);
    case NodeKind::SetInterval: return DefinableSet::interval(n.ints[0], n.ints[1]);
    case NodeKind::SetCompare:
      if (n.op == ">=") return DefinableSet::at_least(n.ints[0]);
      if (n.op == ">") return DefinableSet::at_least(n.ints[0] + 1);
      if (n.op == "<=") return DefinableSet::at_most(n.ints[0]);
      return DefinableSet::at_most(n.ints[0] - 1);
    case NodeKind::SetAll: return DefinableSet::all();
    case NodeKind::SetEmpty: return DefinableSet::empty();
    case NodeKind::SetUnion: return kid(0) | kid(1);
    case NodeKind::SetIntersect: return kid(0) & kid(1);
    case NodeKind::SetDifference: return kid(0) - kid(1);
    case NodeKind::SetComplement: return ~kid(0);
    default: wrong_sort(n, "set expression");
  }
}

SymbolicSequence lower_seq_impl(const Node& n) {
  const auto kid = [&](std::size_t i) { return lower_seq_impl(n.children[i]); };
  switch (n.kind) {
    case NodeKind::SeqNumber: return SymbolicSequence::constant(n.number);
    case NodeKind::SeqInd: return SymbolicSequence::indicator(lower_set(n.children[0]));
    case NodeKind::SeqRat: return SymbolicSequence::rational(n.p, n.q);
    case NodeKind::SeqGeo: return SymbolicSequence::geometric(n.number.re());
    case NodeKind::SeqAdd: return kid(0) + kid(1);
    case NodeKind::SeqSub: return kid(0) - kid(1);
    case NodeKind::SeqMul: return kid(0) * kid(1);
    case NodeKind::SeqNeg: return -kid(0);
    case NodeKind::SeqOn: return restrict_to(kid(0), lower_set(n.children[1]));
    case NodeKind::SeqConj: return conj(kid(0));
    case NodeKind::SeqPi:
    case NodeKind::SeqExpI:
      throw DslError("validation", std::string(kind_name(n.kind)) + " is numeric-only; use it with window commands",
                     n.span);
    default:
      if (is_set_kind(n.kind))
        throw DslError("type", "set expression in sequence context", n.span, "sequence expression");
      wrong_sort(n, "sequence expression");
  }
}

NumericFn numeric_impl(const Node& n) {
  switch (n.kind) {
    case NodeKind::SeqNumber: {
      const std::complex<double> c(to_double(n.number.re()), to_double(n.number.im()));
      return [c](std::int64_t) { return c; };
    }
    case NodeKind::SeqInd: {
      const DefinableSet s = lower_set(n.children[0]);
      return [s](std::int64_t k) { return std::complex<double>(s.contains(k) ? 1.0 : 0.0, 0.0); };
    }
    case NodeKind::SeqRat: {
      const Polynomial p = n.p, q = n.q;
      with_span(n, [&] {
        require_no_integer_root(q);
        return 0;
      });
      return [p, q](std::int64_t k) {
        const long double x = static_cast<long double>(k);
        return std::complex<double>(static_cast<double>(p.eval_numeric(x) / q.eval_numeric(x)), 0.0);
      };
    }
    case NodeKind::SeqGeo: {
      const double r = to_double(n.number.re());
      return [r](std::int64_t k) { return std::complex<double>(std::pow(r, std::fabs(static_cast<double>(k))), 0.0); };
    }
    case NodeKind::SeqAdd:
    case NodeKind::SeqSub:
    case NodeKind::SeqMul: {
      NumericFn a = numeric_impl(n.children[0]);
      NumericFn b = numeric_impl(n.children[1]);
      if (n.kind == NodeKind::SeqAdd) return [a, b](std::int64_t k) { return a(k) + b(k); };
      if (n.kind == NodeKind::SeqSub) return [a, b](std::int64_t k) { return a(k) - b(k); };
      return [a, b](std::int64_t k) { return a(k) * b(k); };
    }
    case NodeKind::SeqNeg: {
      NumericFn a = numeric_impl(n.children[0]);
      return [a](std::int64_t k) { return -a(k); };
    }
    case NodeKind::SeqOn: {
      NumericFn a = numeric_impl(n.children[0]);
      const DefinableSet s = lower_set(n.children[1]);
      return [a, s](std::int64_t k) { return s.contains(k) ? a(k) : std::complex<double>(0.0, 0.0); };
    }
    case NodeKind::SeqConj: {
      NumericFn a = numeric_impl(n.children[0]);
      return [a](std::int64_t k) { return std::conj(a(k)); };
    }
    case NodeKind::SeqPi: return [](std::int64_t) { return std::complex<double>(std::numbers::pi, 0.0); };
    case NodeKind::SeqExpI: {
      NumericFn a = numeric_impl(n.children[0]);
      return [a](std::int64_t k) { return std::exp(std::complex<double>(0.0, 1.0) * a(k)); };
    }
    default:
      if (is_set_kind(n.kind))
        throw DslError("type", "set expression in sequence context", n.span, "sequence expression");
      wrong_sort(n, "sequence expression");
  }
}

}  // namespace

DefinableSet lower_set(const Node& n) {
  return with_span(n, [&] { return lower_set_impl(n); });
}

SymbolicSequence lower_sequence(const Node& n) {
  return with_span(n, [&] { return lower_seq_impl(n); });
}

UltrafilterSpec lower_point(const Node& n) {
  return with_span(n, [&]() -> UltrafilterSpec {
    if (n.kind == NodeKind::PointPrincipal) return Principal{n.ints[0]};
    if (n.kind == NodeKind::PointDirection)
      return make_direction(n.ints[0] > 0 ? Sign::Plus : Sign::Minus, n.ints[1], n.ints[2]);
    wrong_sort(n, "point");
  });
}

bool is_exact(const Node& n) {
  if (n.kind == NodeKind::SeqPi || n.kind == NodeKind::SeqExpI) return false;
  for (const auto& c : n.children)
    if (!is_exact(c)) return false;
  return true;
}

std::function<std::complex<double>(std::int64_t)> numeric_sequence(const Node& n) {
  return with_span(n, [&] { return numeric_impl(n); });
}

}  // namespace betaz::dsl
