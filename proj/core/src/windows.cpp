#include "betaz/windows.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "betaz/error.hpp"

namespace betaz {

namespace {

constexpr double kZeroLevel = 1e-6;
constexpr double kJitter = 1.1;
// rises below this are underflow noise, not growth
constexpr double kNoiseFloor = 1e-12;

void require_width(std::int64_t n) {
  if (n < 1) throw ValidationError("window half-width must be at least 1");
}

}  // namespace

WindowSequence window_custom(const std::function<std::complex<double>(std::int64_t)>& f, std::int64_t half_width,
                             const std::string& provenance) {
  require_width(half_width);
  WindowSequence w;
  w.half_width = half_width;
  w.provenance = provenance;
  w.values.reserve(static_cast<std::size_t>(2 * half_width + 1));
  for (std::int64_t n = -half_width; n <= half_width; ++n) {
    const std::complex<double> v = f(n);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("non-finite window value at n = " + std::to_string(n));
    w.values.push_back(v);
  }
  return w;
}

WindowSequence window_eval(const SymbolicSequence& s, std::int64_t half_width) {
  const SymbolicSequence x = normalize(s);
  return window_custom(
      [&](std::int64_t n) {
        const GaussianRational v = eval(x, n);
        return std::complex<double>(to_double(v.re()), to_double(v.im()));
      },
      half_width, "symbolic");
}

WindowSequence window_exp_i(const SymbolicSequence& psi, std::int64_t half_width, double scale) {
  const SymbolicSequence x = normalize(psi);
  if (!x.is_real()) throw DomainError("exp_i needs a real-valued sequence");
  return window_custom(
      [&](std::int64_t n) { return std::polar(1.0, scale * eval_numeric(x, n).real()); }, half_width,
      "builtin:exp_i_schwartz");
}

WindowSequence window_inv_n2_plus_1(std::int64_t half_width) {
  return window_custom(
      [](std::int64_t n) {
        const double x = static_cast<double>(n);
        return std::complex<double>(1.0 / (x * x + 1.0), 0.0);
      },
      half_width, "builtin:inv_n2_plus_1");
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::DecreasingToZero: return "decreasing-to-zero";
    case Trend::Growing: return "growing";
    default: return "bounded";
  }
}

Profile empirical_profile(const WindowSequence& w, Sign direction, unsigned d, std::complex<double> limit,
                          std::optional<std::int64_t> modulus, std::optional<std::int64_t> residue) {
  if (modulus.has_value() != residue.has_value()) throw ValidationError("residue filter needs both modulus and residue");
  if (modulus && (*modulus < 1 || *residue < 0 || *residue >= *modulus))
    throw ValidationError("residue filter out of range");
  Profile p;
  p.direction = direction;
  p.modulus = modulus;
  p.residue = residue;
  p.degree = d;
  p.limit = limit;
  for (std::int64_t m = 1; m <= w.half_width; ++m) {
    const std::int64_t n = direction == Sign::Plus ? m : -m;
    if (modulus && mod_floor(n, *modulus) != *residue) continue;
    p.n.push_back(n);
    p.values.push_back(std::pow(static_cast<double>(m), static_cast<int>(d)) * std::abs(w.at(n) - limit));
  }
  if (p.values.empty()) return p;
  p.last_value = p.values.back();
  const std::size_t len = p.values.size();
  const std::size_t quarter = std::max<std::size_t>(1, len / 4);
  const auto first_begin = p.values.begin();
  const auto last_begin = p.values.end() - static_cast<std::ptrdiff_t>(quarter);
  const double first_max = *std::max_element(first_begin, first_begin + static_cast<std::ptrdiff_t>(quarter));
  const double last_min = *std::min_element(last_begin, p.values.end());
  const double last_max = *std::max_element(last_begin, p.values.end());
  bool monotone = true;
  for (auto it = last_begin; it + 1 != p.values.end(); ++it)
    if (*(it + 1) > kJitter * *it && *(it + 1) > kNoiseFloor) monotone = false;
  if (last_max < kZeroLevel && monotone) {
    p.trend = Trend::DecreasingToZero;
  } else if (len >= 2 && last_min > first_max) {
    p.trend = Trend::Growing;
  } else {
    p.trend = Trend::Bounded;
  }
  return p;
}

double empirical_seminorm(const WindowSequence& w, unsigned d) {
  double best = 0;
  for (std::int64_t n = -w.half_width; n <= w.half_width; ++n)
    best = std::max(best, std::pow(std::abs(static_cast<double>(n)), static_cast<int>(d)) * std::abs(w.at(n)));
  return best;
}

std::string to_csv(const WindowSequence& w) {
  std::ostringstream out;
  out << std::setprecision(17) << "n,value_re,value_im\n";
  for (std::int64_t n = -w.half_width; n <= w.half_width; ++n)
    out << n << ',' << w.at(n).real() << ',' << w.at(n).imag() << '\n';
  return out.str();
}

std::string to_csv(const Profile& p) {
  std::ostringstream out;
  out << std::setprecision(17) << "n,value\n";
  for (std::size_t i = 0; i < p.n.size(); ++i) out << p.n[i] << ',' << p.values[i] << '\n';
  return out.str();
}

}  // namespace betaz
