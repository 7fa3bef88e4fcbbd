#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace betaz {

/// Which end of Z a direction point sits at.
enum class Sign : int { Plus = 1, Minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// The principal ultrafilter at n, i.e. the point n of Z inside beta(Z).
struct Principal {
  std::int64_t n = 0;
  friend bool operator==(const Principal&, const Principal&) = default;
};

/// A nonprincipal point of the Stone space of the eventually periodic algebra,
/// truncated to a finite modulus: the residue class `residue` mod `modulus`
/// approached at +inf or -inf.
struct Direction {
  Sign sign = Sign::Plus;
  std::int64_t modulus = 1;
  std::int64_t residue = 0;
  friend bool operator==(const Direction&, const Direction&) = default;
};

using UltrafilterSpec = std::variant<Principal, Direction>;

/// Validating constructor; throws ValidationError on modulus < 1 or residue out of range.
Direction make_direction(Sign sign, std::int64_t modulus, std::int64_t residue);

/// Refines a direction to a multiple of its modulus. Throws ValidationError when
/// `modulus` is not a multiple or the residue is not congruent.
Direction extend_point(const Direction& pt, std::int64_t modulus, std::int64_t residue);

/// True when `fine` refines `coarse` (same sign, coarse.modulus | fine.modulus,
/// congruent residues).
bool refines(const Direction& fine, const Direction& coarse);

/// Non-negative remainder.
inline std::int64_t mod_floor(std::int64_t n, std::int64_t m) {
  const std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

/// "n=5", "+inf mod 6 == 5" (the CLI point syntax).
std::string to_string(const UltrafilterSpec& pt);
std::string to_string(const Direction& pt);

}  // namespace betaz
