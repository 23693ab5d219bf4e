#ifndef STONEWORK_HULL_HPP
#define STONEWORK_HULL_HPP

#include <optional>
#include <string>
#include <vector>

#include "stonework/ideal.hpp"

namespace stonework {

/// One letter of a hull word: v_g (an isometry x -> gx) or its adjoint v_g*.
struct HullLetter {
  int gen = 0; // index into Ambient::generators()
  bool star = false;
  auto operator<=>(const HullLetter&) const = default;
};

using HullWord = std::vector<HullLetter>;

std::string print_hull_word(const Ambient& amb, const HullWord& w);
HullWord parse_hull_word(const Ambient& amb, const std::string& text);

/// Element of the left inverse hull S_r: zero, or the partial bijection
/// x -> shift*x defined on a nonempty constructible ideal. The (domain, shift)
/// pair is a faithful normal form for S_r.
class PartialIsometry {
public:
  static PartialIsometry zero() { return PartialIsometry(); }
  static PartialIsometry one(const Ambient& amb);
  /// v_p for p in P (domain P, shift p).
  static PartialIsometry generator(const Ambient& amb, const GroupElement& p);
  static PartialIsometry make(const Ambient& amb, Ideal domain, GroupElement shift);

  bool is_zero() const { return zero_; }
  const Ideal& domain() const { return domain_; }
  const GroupElement& shift() const { return shift_; }
  /// Range ideal shift*domain (the support of s s*).
  Ideal range(const Ambient& amb) const;

  bool operator==(const PartialIsometry& o) const;
  static bool less(const PartialIsometry& a, const PartialIsometry& b);

private:
  PartialIsometry() : zero_(true) {}
  bool zero_;
  Ideal domain_;
  GroupElement shift_;
};

PartialIsometry compose(const Ambient& amb, const PartialIsometry& s1, const PartialIsometry& s2);
PartialIsometry adjoint(const Ambient& amb, const PartialIsometry& s);
/// The grading map into G. Undefined (UsageError) on zero.
GroupElement g_map(const PartialIsometry& s);
/// Evaluates the underlying partial map at x, if defined.
std::optional<GroupElement> apply(const Ambient& amb, const PartialIsometry& s, const GroupElement& x);

PartialIsometry from_word(const Ambient& amb, const HullWord& w);

struct HullEnumeration {
  std::vector<PartialIsometry> elements; // canonical order, zero first
  std::vector<HullWord> words;           // shortest-lex word per element
  bool budget_hit = false;
};

/// All distinct normalized values of hull words of length <= depth, zero
/// always adjoined.
HullEnumeration hull_enumerate(const Ambient& amb, int depth, size_t cap = 100000);

} // namespace stonework

#endif
