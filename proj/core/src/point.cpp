#include "betaz/point.hpp"

#include "betaz/error.hpp"

namespace betaz {

Direction make_direction(Sign sign, std::int64_t modulus, std::int64_t residue) {
  if (modulus < 1) throw ValidationError("direction modulus must be >= 1, got " + std::to_string(modulus));
  if (residue < 0 || residue >= modulus)
    throw ValidationError("residue " + std::to_string(residue) + " out of range for modulus " +
                          std::to_string(modulus));
  return Direction{sign, modulus, residue};
}

Direction extend_point(const Direction& pt, std::int64_t modulus, std::int64_t residue) {
  Direction fine = make_direction(pt.sign, modulus, residue);
  if (modulus % pt.modulus != 0)
    throw ValidationError("cannot extend modulus " + std::to_string(pt.modulus) + " to " +
                          std::to_string(modulus) + ": not a multiple");
  if (residue % pt.modulus != pt.residue)
    throw ValidationError("residue " + std::to_string(residue) + " is not congruent to " +
                          std::to_string(pt.residue) + " mod " + std::to_string(pt.modulus));
  return fine;
}

bool refines(const Direction& fine, const Direction& coarse) {
  return fine.sign == coarse.sign && fine.modulus % coarse.modulus == 0 &&
         fine.residue % coarse.modulus == coarse.residue;
}

std::string to_string(const Direction& pt) {
  return std::string(pt.sign == Sign::Plus ? "+inf" : "-inf") + " mod " + std::to_string(pt.modulus) +
         " == " + std::to_string(pt.residue);
}

std::string to_string(const UltrafilterSpec& pt) {
  if (const auto* p = std::get_if<Principal>(&pt)) return "n=" + std::to_string(p->n);
  return to_string(std::get<Direction>(pt));
}

}  // namespace betaz
