#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "betaz/point.hpp"
#include "betaz/seqalg.hpp"
#include "betaz/setalg.hpp"

namespace betaz {

/// The filter generated by a finite family of sets: exactly the supersets of
/// their intersection.
class FilterBase {
 public:
  /// Throws ValidationError on an empty list and InconsistentError when the
  /// intersection is empty (witness: indices of an empty subfamily).
  explicit FilterBase(std::vector<DefinableSet> base);

  const std::vector<DefinableSet>& base() const { return base_; }
  /// Intersection of the base.
  const DefinableSet& core() const { return core_; }
  bool contains(const DefinableSet& s) const { return core_.subset_of(s); }

 private:
  std::vector<DefinableSet> base_;
  DefinableSet core_;
};

/// Indices of a subfamily with empty intersection, minimal under removal of
/// single members; empty when the full intersection is nonempty.
std::vector<std::size_t> empty_intersection_witness(const std::vector<DefinableSet>& family);

/// Whether S belongs to the ultrafilter. Direction points need
/// S.period(sign) | modulus, otherwise RefinePointError.
bool point_contains(const UltrafilterSpec& pt, const DefinableSet& s);

/// Same residue, modulus lcm(pt.modulus, period).
Direction auto_extend(const Direction& pt, std::int64_t period);

struct Decision {
  DefinableSet set;
  bool member = true;
};

/// All ultrafilters agreeing with a list of decisions.
///
/// The admissible points are the principal points of `admissible` and the
/// directions in `completions` (every residue class at `modulus` whose tail
/// lies in `admissible`).
struct PointTrace {
  DefinableSet admissible;
  std::int64_t modulus = 1;
  std::vector<Direction> completions;
  /// Set when `admissible` is a single integer, i.e. the point is forced.
  std::optional<Principal> forced;

  bool unique() const { return forced.has_value(); }
  /// Whether pt agrees with every decision.
  bool admits(const UltrafilterSpec& pt) const;
};

/// Throws InconsistentError when no ultrafilter agrees with the decisions.
PointTrace point_from_trace(const std::vector<Decision>& decisions);

/// The trace of pt over a family of sets.
std::vector<Decision> trace_of(const UltrafilterSpec& pt, const std::vector<DefinableSet>& family);

/// Value of the continuous extension of s at pt.
GaussianRational limit_at(const SymbolicSequence& s, const UltrafilterSpec& pt);

struct AxiomReport {
  std::string axiom;  // "intersection", "superset", "dichotomy"
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::optional<std::string> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

using Membership = std::function<bool(const DefinableSet&)>;

/// Random-sample check of the filter axioms for an arbitrary membership
/// predicate; `ultra` adds the dichotomy axiom.
std::vector<AxiomReport> check_filter_axioms(const Membership& member, bool ultra, std::size_t samples,
                                             std::uint64_t seed);
std::vector<AxiomReport> check_filter_axioms(const FilterBase& f, std::size_t samples, std::uint64_t seed);
/// Direction points are refined on the fly whenever a sample needs a finer modulus.
std::vector<AxiomReport> check_filter_axioms(const UltrafilterSpec& pt, std::size_t samples, std::uint64_t seed);

}  // namespace betaz
