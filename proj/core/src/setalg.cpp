#include "betaz/setalg.hpp"

#include <algorithm>
#include <numeric>

#include "betaz/error.hpp"

namespace betaz {

namespace {

std::vector<bool> residue_table(std::int64_t modulus, const std::vector<std::int64_t>& residues) {
  std::vector<bool> table(static_cast<std::size_t>(modulus), false);
  for (std::int64_t r : residues) {
    if (r < 0 || r >= modulus)
      throw ValidationError("residue " + std::to_string(r) + " out of range [0, " + std::to_string(modulus) + ")");
    table[static_cast<std::size_t>(r)] = true;
  }
  return table;
}

bool has_period(const std::vector<bool>& table, std::size_t d) {
  for (std::size_t i = d; i < table.size(); ++i)
    if (table[i] != table[i % d]) return false;
  return true;
}

std::vector<std::int64_t> divisors(std::int64_t m) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> sorted_unique(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string residue_union(std::int64_t modulus, const std::vector<bool>& table) {
  std::string out;
  for (std::int64_t r = 0; r < modulus; ++r) {
    if (!table[static_cast<std::size_t>(r)]) continue;
    if (!out.empty()) out += " | ";
    out += "mod " + std::to_string(modulus) + " == " + std::to_string(r);
  }
  return out;
}

std::string brace_list(const std::vector<std::int64_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

}  // namespace

DefinableSet::DefinableSet() : pos_(1, false), neg_(1, false) {}

DefinableSet DefinableSet::all() { return from_rule(1, {true}, {true}, {}); }

DefinableSet DefinableSet::periodic(std::int64_t modulus, const std::vector<std::int64_t>& residues_pos,
                                    const std::vector<std::int64_t>& residues_neg) {
  if (modulus < 1) throw ValidationError("modulus must be >= 1, got " + std::to_string(modulus));
  if (modulus > kMaxModulus) throw ValidationError("modulus " + std::to_string(modulus) + " too large");
  return from_rule(modulus, residue_table(modulus, residues_pos), residue_table(modulus, residues_neg), {});
}

DefinableSet DefinableSet::residue_class(std::int64_t modulus, std::int64_t residue) {
  return periodic(modulus, {residue}, {residue});
}

DefinableSet DefinableSet::finite(const std::vector<std::int64_t>& members) {
  return from_rule(1, {false}, {false}, sorted_unique(members));
}

DefinableSet DefinableSet::cofinite(const std::vector<std::int64_t>& excluded) {
  return from_rule(1, {true}, {true}, sorted_unique(excluded));
}

DefinableSet DefinableSet::interval(std::int64_t a, std::int64_t b) {
  if (a > b) throw ValidationError("interval [" + std::to_string(a) + ", " + std::to_string(b) + "] is empty: a > b");
  return at_least(a) & at_most(b);
}

DefinableSet DefinableSet::at_least(std::int64_t a) {
  // Base rule: all n >= 0. Flip [a, -1] on, or [0, a-1] off.
  std::vector<std::int64_t> flips;
  for (std::int64_t n = std::min<std::int64_t>(a, 0); n < std::max<std::int64_t>(a, 0); ++n) flips.push_back(n);
  return from_rule(1, {true}, {false}, std::move(flips));
}

DefinableSet DefinableSet::at_most(std::int64_t b) { return at_least(b + 1).complement(); }

DefinableSet DefinableSet::from_rule(std::int64_t modulus, std::vector<bool> pos, std::vector<bool> neg,
                                     std::vector<std::int64_t> exceptions) {
  if (modulus < 1 || pos.size() != static_cast<std::size_t>(modulus) || neg.size() != pos.size())
    throw ValidationError("malformed residue tables");
  DefinableSet s;
  s.modulus_ = modulus;
  s.pos_ = std::move(pos);
  s.neg_ = std::move(neg);
  // Duplicated flips cancel.
  std::sort(exceptions.begin(), exceptions.end());
  std::vector<std::int64_t> odd;
  for (std::size_t i = 0; i < exceptions.size();) {
    std::size_t j = i;
    while (j < exceptions.size() && exceptions[j] == exceptions[i]) ++j;
    if ((j - i) % 2 == 1) odd.push_back(exceptions[i]);
    i = j;
  }
  s.exceptions_ = std::move(odd);
  s.canonicalize();
  return s;
}

DefinableSet DefinableSet::from_window(std::int64_t modulus, const std::vector<std::int64_t>& residues_pos,
                                       const std::vector<std::int64_t>& residues_neg, std::int64_t threshold,
                                       const std::vector<std::int64_t>& window_members) {
  if (modulus < 1) throw ValidationError("modulus must be >= 1, got " + std::to_string(modulus));
  if (threshold < 0) throw ValidationError("threshold must be >= 0");
  DefinableSet rule = periodic(modulus, residues_pos, residues_neg);
  const auto members = sorted_unique(window_members);
  for (std::int64_t m : members)
    if (m < -threshold || m >= threshold)
      throw ValidationError("window member " + std::to_string(m) + " outside [-" + std::to_string(threshold) + ", " +
                            std::to_string(threshold - 1) + "]");
  std::vector<std::int64_t> flips;
  for (std::int64_t n = -threshold; n < threshold; ++n) {
    const bool in = std::binary_search(members.begin(), members.end(), n);
    if (in != rule.base(n)) flips.push_back(n);
  }
  return from_rule(rule.modulus_, rule.pos_, rule.neg_, std::move(flips));
}

void DefinableSet::canonicalize() {
  for (std::int64_t d : divisors(modulus_)) {
    if (has_period(pos_, static_cast<std::size_t>(d)) && has_period(neg_, static_cast<std::size_t>(d))) {
      pos_.resize(static_cast<std::size_t>(d));
      neg_.resize(static_cast<std::size_t>(d));
      modulus_ = d;
      break;
    }
  }
  const auto minimal = [this](const std::vector<bool>& t) {
    for (std::int64_t d : divisors(modulus_))
      if (has_period(t, static_cast<std::size_t>(d))) return d;
    return modulus_;
  };
  period_pos_ = minimal(pos_);
  period_neg_ = minimal(neg_);
}

bool DefinableSet::base(std::int64_t n) const {
  const auto r = static_cast<std::size_t>(mod_floor(n, modulus_));
  return n >= 0 ? pos_[r] : neg_[r];
}

bool DefinableSet::contains(std::int64_t n) const {
  return base(n) != std::binary_search(exceptions_.begin(), exceptions_.end(), n);
}

std::vector<std::int64_t> DefinableSet::residues(Sign s) const {
  std::vector<std::int64_t> out;
  const auto& t = side(s);
  for (std::size_t r = 0; r < t.size(); ++r)
    if (t[r]) out.push_back(static_cast<std::int64_t>(r));
  return out;
}

std::int64_t DefinableSet::threshold() const {
  std::int64_t w = 0;
  for (std::int64_t e : exceptions_) w = std::max(w, e >= 0 ? e + 1 : -e);
  return w;
}

std::vector<std::int64_t> DefinableSet::window_members() const {
  const std::int64_t w = threshold();
  std::vector<std::int64_t> out;
  for (std::int64_t n = -w; n < w; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

std::int64_t DefinableSet::period(Sign s) const { return s == Sign::Plus ? period_pos_ : period_neg_; }

bool DefinableSet::is_empty() const { return is_finite() && exceptions_.empty(); }

bool DefinableSet::is_finite() const { return !infinite_in(Sign::Plus) && !infinite_in(Sign::Minus); }

bool DefinableSet::infinite_in(Sign s) const {
  const auto& t = side(s);
  return std::find(t.begin(), t.end(), true) != t.end();
}

std::int64_t DefinableSet::cardinality() const {
  if (!is_finite()) throw DomainError("cardinality of an infinite set");
  return static_cast<std::int64_t>(exceptions_.size());
}

std::vector<std::int64_t> DefinableSet::elements() const {
  if (!is_finite()) throw DomainError("cannot list the elements of an infinite set");
  return exceptions_;
}

std::vector<std::int64_t> DefinableSet::enumerate(std::int64_t a, std::int64_t b) const {
  if (a > b) throw ValidationError("enumerate requires a <= b");
  std::vector<std::int64_t> out;
  for (std::int64_t n = a;; ++n) {
    if (contains(n)) out.push_back(n);
    if (n == b) break;
  }
  return out;
}

std::optional<std::int64_t> DefinableSet::first_from(std::int64_t start, Sign s) const {
  const std::int64_t step = sign_value(s);
  const std::int64_t w = threshold();
  // Past the window one full period decides the rest.
  const std::int64_t beyond = s == Sign::Plus ? std::max(start, w) : std::min(start, -w - 1);
  for (std::int64_t n = start; step * (n - beyond) < modulus_; n += step)
    if (contains(n)) return n;
  return std::nullopt;
}

std::optional<std::int64_t> DefinableSet::least_magnitude_member() const {
  const auto plus = first_from(0, Sign::Plus);
  const auto minus = first_from(-1, Sign::Minus);
  if (!plus) return minus;
  if (!minus) return plus;
  return -*minus < *plus ? minus : plus;
}

DefinableSet DefinableSet::complement() const {
  std::vector<bool> pos = pos_, neg = neg_;
  pos.flip();
  neg.flip();
  return from_rule(modulus_, std::move(pos), std::move(neg), exceptions_);
}

template <class Op>
DefinableSet DefinableSet::combine(const DefinableSet& a, const DefinableSet& b, Op op) {
  const std::int64_t m = std::lcm(a.modulus_, b.modulus_);
  if (m > kMaxModulus) throw ValidationError("combined modulus " + std::to_string(m) + " too large");
  std::vector<bool> pos(static_cast<std::size_t>(m)), neg(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) {
    pos[r] = op(a.pos_[r % a.modulus_], b.pos_[r % b.modulus_]);
    neg[r] = op(a.neg_[r % a.modulus_], b.neg_[r % b.modulus_]);
  }
  DefinableSet rule;
  rule.modulus_ = m;
  rule.pos_ = pos;
  rule.neg_ = neg;
  std::vector<std::int64_t> candidates;
  std::set_union(a.exceptions_.begin(), a.exceptions_.end(), b.exceptions_.begin(), b.exceptions_.end(),
                 std::back_inserter(candidates));
  std::vector<std::int64_t> flips;
  for (std::int64_t n : candidates)
    if (op(a.contains(n), b.contains(n)) != rule.base(n)) flips.push_back(n);
  return from_rule(m, std::move(pos), std::move(neg), std::move(flips));
}

DefinableSet operator|(const DefinableSet& a, const DefinableSet& b) {
  return DefinableSet::combine(a, b, [](bool x, bool y) { return x || y; });
}

DefinableSet operator&(const DefinableSet& a, const DefinableSet& b) {
  return DefinableSet::combine(a, b, [](bool x, bool y) { return x && y; });
}

DefinableSet operator-(const DefinableSet& a, const DefinableSet& b) {
  return DefinableSet::combine(a, b, [](bool x, bool y) { return x && !y; });
}

bool DefinableSet::subset_of(const DefinableSet& other) const { return (*this - other).is_empty(); }

bool DefinableSet::intersects(const DefinableSet& other) const { return !(*this & other).is_empty(); }

std::strong_ordering operator<=>(const DefinableSet& a, const DefinableSet& b) {
  if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
  for (std::size_t r = 0; r < a.pos_.size(); ++r) {
    if (a.pos_[r] != b.pos_[r]) return a.pos_[r] ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.neg_[r] != b.neg_[r]) return a.neg_[r] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.exceptions_ <=> b.exceptions_;
}

std::string DefinableSet::to_dsl() const {
  const auto all_true = [](const std::vector<bool>& t) { return std::find(t.begin(), t.end(), false) == t.end(); };
  std::string rule_text;
  if (pos_ == neg_) {
    rule_text = all_true(pos_) ? "all" : residue_union(modulus_, pos_);
  } else {
    const auto half = [&](const std::vector<bool>& t, const char* ray) -> std::string {
      if (std::find(t.begin(), t.end(), true) == t.end()) return "";
      if (all_true(t)) return ray;
      std::string u = residue_union(modulus_, t);
      if (std::count(t.begin(), t.end(), true) > 1) u = "(" + u + ")";
      return u + " & " + ray;
    };
    const std::string p = half(pos_, "n >= 0");
    const std::string n = half(neg_, "n <= -1");
    rule_text = p.empty() ? n : (n.empty() ? p : p + " | " + n);
  }
  std::vector<std::int64_t> added, removed;
  for (std::int64_t e : exceptions_) (base(e) ? removed : added).push_back(e);
  std::string out = rule_text;
  if (!added.empty()) out = out.empty() ? brace_list(added) : out + " | " + brace_list(added);
  if (!removed.empty()) out += " \\ " + brace_list(removed);
  return out.empty() ? "empty" : out;
}

DefinableSet boolean(SetOp op, const DefinableSet& a, const std::optional<DefinableSet>& b) {
  if (op == SetOp::Complement) {
    if (b) throw ValidationError("complement takes exactly one operand");
    return a.complement();
  }
  if (!b) throw ValidationError("binary set operation requires two operands");
  switch (op) {
    case SetOp::Union: return a | *b;
    case SetOp::Intersect: return a & *b;
    case SetOp::Difference: return a - *b;
    case SetOp::Complement: break;
  }
  return a.complement();
}

}  // namespace betaz
