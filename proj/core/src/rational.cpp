#include "betaz/rational.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "betaz/error.hpp"

namespace betaz {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ValidationError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ValidationError("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ValidationError("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Integer num = pow(Integer(base.get_num()), exponent);
  Integer den = pow(Integer(base.get_den()), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("integer " + z.get_str() + " exceeds 64-bit range");
  return z.get_si();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm2();
  if (sgn(n) == 0) throw DomainError("division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return betaz::to_string(re_);
  std::string imag = betaz::to_string(Rational(abs(im_))) + " i";
  if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + imag : imag;
  return betaz::to_string(re_) + (sgn(im_) < 0 ? " - " : " + ") + imag;
}

double to_double(const Rational& q) {
  const double t = q.get_d();
  if (!std::isfinite(t) || sgn(q) == 0) return t;
  const double away = std::nextafter(t, sgn(q) > 0 ? std::numeric_limits<double>::infinity()
                                                    : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return t;
  const Rational et = abs(q - Rational(t));
  const Rational ea = abs(q - Rational(away));
  if (ea < et) return away;
  if (ea == et && (std::bit_cast<std::uint64_t>(t) & 1U) != 0) return away;
  return t;
}

}  // namespace betaz
