#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betaz/point.hpp"

namespace betaz {

/// An eventually periodic subset of Z.
///
/// Membership is a base rule XOR a finite exception list: the base rule puts
/// n >= 0 in the set iff residues(Plus)[n mod M] and n < 0 iff
/// residues(Minus)[n mod M]. Outside the window [-W, W-1] (W = threshold())
/// there are no exceptions, so membership depends only on sign(n) and n mod M.
///
/// Every value is kept canonical (minimal joint modulus, exact exception list),
/// so structural equality is set equality.
class DefinableSet {
 public:
  /// The empty set.
  DefinableSet();

  static DefinableSet empty() { return {}; }
  static DefinableSet all();
  /// Residues for n >= 0 and for n < 0 given separately. Throws ValidationError
  /// on M < 1 or residues outside [0, M).
  static DefinableSet periodic(std::int64_t modulus, const std::vector<std::int64_t>& residues_pos,
                               const std::vector<std::int64_t>& residues_neg);
  /// {n : n ≡ residue (mod modulus)}.
  static DefinableSet residue_class(std::int64_t modulus, std::int64_t residue);
  static DefinableSet finite(const std::vector<std::int64_t>& members);
  static DefinableSet cofinite(const std::vector<std::int64_t>& excluded);
  /// [a, b]; throws ValidationError when a > b.
  static DefinableSet interval(std::int64_t a, std::int64_t b);
  static DefinableSet at_least(std::int64_t a);
  static DefinableSet at_most(std::int64_t b);
  /// Rule plus explicit exception points (need not be canonical).
  static DefinableSet from_rule(std::int64_t modulus, std::vector<bool> pos, std::vector<bool> neg,
                                std::vector<std::int64_t> exceptions);
  /// The serialized form: rule plus explicit member list inside [-W, W-1].
  static DefinableSet from_window(std::int64_t modulus, const std::vector<std::int64_t>& residues_pos,
                                  const std::vector<std::int64_t>& residues_neg, std::int64_t threshold,
                                  const std::vector<std::int64_t>& window_members);

  bool contains(std::int64_t n) const;
  /// Membership the periodic rule assigns to residue class r in direction s.
  bool rule(Sign s, std::int64_t residue) const { return side(s)[mod_floor(residue, modulus_)]; }
  bool base(std::int64_t n) const;

  std::int64_t modulus() const { return modulus_; }
  std::vector<std::int64_t> residues(Sign s) const;
  const std::vector<bool>& rule_table(Sign s) const { return side(s); }
  std::int64_t threshold() const;
  const std::vector<std::int64_t>& exceptions() const { return exceptions_; }
  /// Members inside [-W, W-1].
  std::vector<std::int64_t> window_members() const;
  /// Minimal period of the rule in direction s alone (divides modulus()).
  std::int64_t period(Sign s) const;

  bool is_empty() const;
  bool is_finite() const;
  /// True when the set has infinitely many members in direction s.
  bool infinite_in(Sign s) const;
  /// Throws DomainError on infinite sets.
  std::int64_t cardinality() const;
  /// Throws DomainError on infinite sets.
  std::vector<std::int64_t> elements() const;
  /// Members of [a, b]; throws ValidationError when a > b.
  std::vector<std::int64_t> enumerate(std::int64_t a, std::int64_t b) const;
  /// First member m with s·m >= s·start, if any.
  std::optional<std::int64_t> first_from(std::int64_t start, Sign s) const;
  /// A member of least absolute value, if any.
  std::optional<std::int64_t> least_magnitude_member() const;

  DefinableSet complement() const;
  bool subset_of(const DefinableSet& other) const;
  bool intersects(const DefinableSet& other) const;

  friend DefinableSet operator|(const DefinableSet& a, const DefinableSet& b);
  friend DefinableSet operator&(const DefinableSet& a, const DefinableSet& b);
  friend DefinableSet operator-(const DefinableSet& a, const DefinableSet& b);
  friend DefinableSet operator~(const DefinableSet& a) { return a.complement(); }

  friend bool operator==(const DefinableSet&, const DefinableSet&) = default;
  friend std::strong_ordering operator<=>(const DefinableSet& a, const DefinableSet& b);

  /// DSL text that parses back to this set, e.g. "mod 2 == 0 | {3}".
  std::string to_dsl() const;

 private:
  const std::vector<bool>& side(Sign s) const { return s == Sign::Plus ? pos_ : neg_; }
  void canonicalize();
  template <class Op>
  static DefinableSet combine(const DefinableSet& a, const DefinableSet& b, Op op);

  std::int64_t modulus_ = 1;
  std::vector<bool> pos_;
  std::vector<bool> neg_;
  std::vector<std::int64_t> exceptions_;
  std::int64_t period_pos_ = 1;  // cached by canonicalize()
  std::int64_t period_neg_ = 1;
};

enum class SetOp { Union, Intersect, Difference, Complement };

/// Boolean operation dispatcher; complement takes only `a`, the others require `b`.
DefinableSet boolean(SetOp op, const DefinableSet& a, const std::optional<DefinableSet>& b = std::nullopt);

/// Largest modulus a Boolean operation may produce before ValidationError.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 24;

}  // namespace betaz
