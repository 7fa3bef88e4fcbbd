#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "betaz/point.hpp"
#include "betaz/seqalg.hpp"

namespace betaz {

/// Double-precision values on [-N, N]. Diagnostic only: a window says
/// nothing certain about behaviour at infinity.
struct WindowSequence {
  std::int64_t half_width = 0;
  std::vector<std::complex<double>> values;  // values[n + N]
  std::string provenance;                    // "symbolic", "external", "builtin:<name>"

  std::complex<double> at(std::int64_t n) const { return values.at(static_cast<std::size_t>(n + half_width)); }
};

/// Exact evaluation rounded to double.
WindowSequence window_eval(const SymbolicSequence& s, std::int64_t half_width);
/// e^{i·scale·psi(n)} for real psi. Throws DomainError on complex psi.
WindowSequence window_exp_i(const SymbolicSequence& psi, std::int64_t half_width, double scale = 1.0);
WindowSequence window_inv_n2_plus_1(std::int64_t half_width);
/// Throws DomainError when f produces a non-finite value.
WindowSequence window_custom(const std::function<std::complex<double>(std::int64_t)>& f, std::int64_t half_width,
                             const std::string& provenance);

enum class Trend { DecreasingToZero, Bounded, Growing };
std::string to_string(Trend t);

struct Profile {
  Sign direction = Sign::Plus;
  std::optional<std::int64_t> modulus;
  std::optional<std::int64_t> residue;
  unsigned degree = 0;
  std::complex<double> limit;
  std::vector<std::int64_t> n;
  std::vector<double> values;  // |n^d·(w[n] - limit)|
  Trend trend = Trend::Bounded;
  double last_value = 0;
};

/// |n^d·(w[n] - limit)| for n = ±1, ±2, ... in the window, optionally only
/// n ≡ residue (mod modulus).
///
/// Trend: decreasing-to-zero when the last quarter stays below 1e-6 and never
/// rises by more than 10% between consecutive samples (rises to values below
/// 1e-12 do not count); growing when the last quarter's minimum exceeds the
/// first quarter's maximum; bounded otherwise.
Profile empirical_profile(const WindowSequence& w, Sign direction, unsigned d, std::complex<double> limit,
                          std::optional<std::int64_t> modulus = std::nullopt,
                          std::optional<std::int64_t> residue = std::nullopt);

/// max over the window of |n^d·w[n]|.
double empirical_seminorm(const WindowSequence& w, unsigned d);

/// "n,value_re,value_im" rows with a header line.
std::string to_csv(const WindowSequence& w);
std::string to_csv(const Profile& p);

}  // namespace betaz
