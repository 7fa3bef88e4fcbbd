#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betaz/point.hpp"
#include "betaz/rational.hpp"
#include "betaz/seqalg.hpp"
#include "betaz/setalg.hpp"

namespace betaz {

enum class Divergence { NonzeroLimit, Unbounded };

/// Why n^d·(s(n) - value) does not tend to 0 along `point`.
///
/// `degree` is the smallest failing d; there n^d·delta(n) tends to the nonzero
/// `limit`, and every sample n satisfies |n^d·delta(n)|^2 >= bound_sq with
/// bound_sq = min(1, |limit|^2 / 4). At degree + 1 the sequence is unbounded;
/// `unbounded_samples` satisfy |n^(d+1)·delta(n)| >= 1.
struct SmoothnessWitness {
  Direction point;
  GaussianRational value;  // the value delta is taken against
  unsigned degree = 0;
  Divergence kind = Divergence::NonzeroLimit;
  GaussianRational limit;
  Rational bound_sq;
  std::vector<std::int64_t> samples;
  std::vector<Rational> sample_values_sq;  // |n^d·delta(n)|^2
  std::vector<std::int64_t> unbounded_samples;
};

struct SmoothnessVerdict {
  bool smooth = true;
  std::optional<SmoothnessWitness> witness;
};

/// Re-evaluates every sample of the witness exactly against s.
bool verify_witness(const SymbolicSequence& s, const SmoothnessWitness& w);

/// Vanishing test of n^d·(s(n) - value) for all d along a direction point.
/// The point is refined automatically when too coarse for s.
SmoothnessVerdict smooth_at_value(const SymbolicSequence& s, const Direction& pt, const GaussianRational& value);
/// As above with value = limit_at(s, pt); principal points are always smooth.
SmoothnessVerdict smooth_at(const SymbolicSequence& s, const UltrafilterSpec& pt);
/// Smoothness at every point, decided cell by cell.
SmoothnessVerdict is_smooth(const SymbolicSequence& s);

/// Membership in the nested function spaces.
struct HierarchyReport {
  bool cc = false;                    // finite support
  bool schwartz = false;              // rapid decay
  bool c0 = false;                    // vanishing at infinity
  bool linf_c = false;                // finitely many values
  bool linf_c_plus_schwartz = false;  // finitely valued plus rapid decay
  bool smooth = false;
  bool linf = true;
  std::optional<SmoothnessWitness> witness;

  /// The inclusion lattice: cc ⊆ schwartz ⊆ c0, cc ⊆ linf_c,
  /// schwartz ⊆ linf_c_plus_schwartz ⊆ smooth ⊆ linf.
  bool consistent() const;
};

HierarchyReport classify(const SymbolicSequence& s);

/// Input of the level-chain certificate: sum c_q·1_{S_q} with disjoint
/// infinite S_q and distinct constants approaching c0.
struct LevelChainTerm {
  Rational c;
  DefinableSet set;
};

struct ChainWitness {
  unsigned degree = 0;
  std::size_t term = 0;  // 1-based q with n in S_q
  std::int64_t n = 0;
  Rational value;  // |n^d·(c_q - c0)|
  Rational lower;  // n^(d-1)
};

struct LevelChainCertificate {
  SymbolicSequence sequence;
  Rational c0;
  /// U_k = union over q >= k of S_q ∩ {m >= 1/|c_q - c0|}, k = 1..K.
  std::vector<DefinableSet> chain;
  std::vector<ChainWitness> witnesses;  // d = 2..d_max
  Direction point;                      // a direction in the last U_k
  SmoothnessVerdict verdict;            // smooth_at_value(sequence, point, c0)
  bool classified_smooth = false;       // plain classify() verdict, for contrast
};

/// Throws ValidationError naming the violated precondition.
LevelChainCertificate level_chain_certificate(const std::vector<LevelChainTerm>& spec, const Rational& c0,
                                              unsigned d_max = 5);

struct StructureReport {
  std::string kind;
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;
  bool ok() const { return !counterexample.has_value() && passed == samples; }
};

/// Rapidly decaying times smooth is rapidly decaying.
StructureReport check_schwartz_ideal(std::size_t samples, std::uint64_t seed);
/// 1 is finitely valued and smooth, yet 1·1/(n^2+1) is neither.
StructureReport check_unital_not_ideal();

}  // namespace betaz
