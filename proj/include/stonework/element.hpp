#ifndef STONEWORK_ELEMENT_HPP
#define STONEWORK_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "stonework/rational.hpp"

namespace stonework {

/// Maximal run of one generator in a freely reduced word: gen^exp, exp != 0.
/// Adjacent runs of a reduced word always use distinct generators.
struct Run {
  int gen;       // 1-based generator index
  long long exp; // nonzero
  auto operator<=>(const Run&) const = default;
};

/// Freely reduced word in the free group F_n (run-length form).
using Word = std::vector<Run>;

/// Point of the lattice Z^k.
using Vec = std::vector<long long>;

/// Element (shift, scale) of the affine group Q x| Q^x, acting as x -> shift + scale*x.
struct Affine {
  Rational shift;
  Rational scale; // nonzero
  bool operator==(const Affine&) const = default;
  friend bool operator<(const Affine& a, const Affine& b) {
    if (a.scale != b.scale) return a.scale < b.scale;
    return a.shift < b.shift;
  }
};

/// Integer, for ambients living inside Z (numerical semigroups).
struct ZInt {
  long long value = 0;
  auto operator<=>(const ZInt&) const = default;
};

/// A normalized element of an ambient group. The active alternative is fixed
/// by the ambient family; payloads are always in canonical normal form, so
/// value equality is representation equality.
class GroupElement {
public:
  using Payload = std::variant<Word, Vec, ZInt, Affine>;

  GroupElement() : payload_(Vec{}) {}
  explicit GroupElement(Payload p) : payload_(std::move(p)) {}

  static GroupElement word(Word w);       // reduces
  static GroupElement vec(Vec v);
  static GroupElement integer(long long n);
  static GroupElement affine(Rational shift, Rational scale);

  const Payload& payload() const { return payload_; }
  bool is_word() const { return std::holds_alternative<Word>(payload_); }
  bool is_vec() const { return std::holds_alternative<Vec>(payload_); }
  bool is_int() const { return std::holds_alternative<ZInt>(payload_); }
  bool is_affine() const { return std::holds_alternative<Affine>(payload_); }

  const Word& as_word() const { return std::get<Word>(payload_); }
  const Vec& as_vec() const { return std::get<Vec>(payload_); }
  long long as_int() const { return std::get<ZInt>(payload_).value; }
  const Affine& as_affine() const { return std::get<Affine>(payload_); }

  bool is_identity() const;

  /// Letter count for words, l1 norm for vectors, |n| for integers.
  /// Affine elements have no intrinsic length; they report 0 (sphere
  /// enumeration uses BFS layers instead).
  long long norm_length() const;

  bool operator==(const GroupElement&) const = default;

  /// Total order usable as a deterministic sort key within one family.
  static bool less(const GroupElement& a, const GroupElement& b);

private:
  Payload payload_;
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);

/// Free reduction of an arbitrary run sequence (single linear pass).
Word reduce_word(const Word& raw);

bool word_positive(const Word& w);
/// Prefix order on positive words: u <= w iff w in u*P.
bool word_is_prefix(const Word& u, const Word& w);
/// Strips prefix u from w; precondition word_is_prefix(u, w).
Word word_strip_prefix(const Word& u, const Word& w);
/// Splits a reduced word as positive*negative^{-1} ("valley" shape) if possible:
/// g = pos * neg^{-1} with pos, neg positive words. Returns false otherwise.
bool word_valley_split(const Word& g, Word& pos, Word& neg);

} // namespace stonework

#endif
