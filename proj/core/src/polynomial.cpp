#include "betaz/polynomial.hpp"

#include <algorithm>

#include "betaz/error.hpp"

namespace betaz {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<Integer>& coefficients) {
  std::vector<Rational> v;
  v.reserve(coefficients.size());
  for (const auto& z : coefficients) v.emplace_back(z);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

long double Polynomial::eval_numeric(long double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

bool Polynomial::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Rational Polynomial::abs_coeff_sum(std::size_t upto) const {
  Rational s(0);
  for (std::size_t i = 0; i < std::min(upto, c_.size()); ++i) s += abs(c_[i]);
  return s;
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  Polynomial r = *this;
  const Rational lc = leading();
  for (auto& c : r.c_) c /= lc;
  return r;
}

std::pair<Rational, Polynomial> Polynomial::primitive_part() const {
  if (c_.empty()) return {Rational(0), Polynomial()};
  Integer den_lcm(1);
  for (const auto& c : c_) den_lcm = lcm(den_lcm, Integer(c.get_den()));
  std::vector<Integer> ints;
  ints.reserve(c_.size());
  Integer g(0);
  for (const auto& c : c_) {
    Integer z = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(std::move(z));
  }
  if (sgn(ints.back()) < 0) g = -g;
  for (auto& z : ints) z /= g;
  Rational content(g, den_lcm);
  content.canonicalize();
  return {content, from_integers(ints)};
}

std::vector<Integer> Polynomial::integer_coefficients() const {
  if (!is_integral()) throw DomainError("polynomial " + to_string() + " has non-integer coefficients");
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.emplace_back(c.get_num());
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial rem = a;
  if (a.degree() < b.degree()) return {Polynomial(), rem};
  std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
  const Rational lb = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational factor = rem.leading() / lb;
    quot[shift] = factor;
    for (int i = 0; i <= b.degree(); ++i) rem.c_[i + shift] -= factor * b.c_[i];
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = Polynomial::divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    const auto c = compare(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0) {
      out += betaz::to_string(mag);
      continue;
    }
    if (!unit) out += betaz::to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace betaz
