#ifndef STONEWORK_IDEAL_HPP
#define STONEWORK_IDEAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stonework/ambient.hpp"
#include "stonework/element.hpp"

namespace stonework {

/// Canonical representations of constructible right ideals, one variant per
/// catalog family. Two values are equal iff they denote the same subset of P.
///
///   WordIdeal  wP                    (free product; w a positive word)
///   VecIdeal   corner + N^k          (lattice cone)
///   TailIdeal  F u (P n [t,oo))      (numerical; F = members below t, t minimal)
///   CongIdeal  {(x,y): x = r mod a, a | y, y != 0}   (ax+b; 0 <= r < a)
///   CustomIdeal  expression over the generating operations, with an exact
///                membership oracle and a sample list to the ambient budget;
///                equality is sample equality (to budget).
struct WordIdeal {
  Word generator;
  auto operator<=>(const WordIdeal&) const = default;
};

struct VecIdeal {
  Vec corner;
  auto operator<=>(const VecIdeal&) const = default;
};

struct TailIdeal {
  std::vector<long long> finite; // sorted members below threshold
  long long threshold = 0;
  auto operator<=>(const TailIdeal&) const = default;
};

struct CongIdeal {
  long long scale = 1;   // a >= 1
  long long residue = 0; // 0 <= r < a
  auto operator<=>(const CongIdeal&) const = default;
};

struct CustomExpr;

struct CustomIdeal {
  std::shared_ptr<const CustomExpr> expr;
  std::vector<GroupElement> sample; // sorted, members with BFS depth <= sample budget
  bool operator==(const CustomIdeal& o) const;
  bool operator<(const CustomIdeal& o) const;
};

class Ideal {
public:
  using Rep = std::variant<std::monostate, WordIdeal, VecIdeal, TailIdeal, CongIdeal, CustomIdeal>;

  Ideal() : rep_(std::monostate{}) {}
  explicit Ideal(Rep r) : rep_(std::move(r)) {}

  static Ideal empty() { return Ideal(); }
  static Ideal full(const Ambient& amb);

  bool is_empty() const { return std::holds_alternative<std::monostate>(rep_); }
  const Rep& rep() const { return rep_; }

  bool operator==(const Ideal& o) const { return rep_ == o.rep_; }
  bool operator!=(const Ideal& o) const { return !(*this == o); }
  /// Deterministic total order within one family (empty first).
  static bool less(const Ideal& a, const Ideal& b);

private:
  Rep rep_;
};

/// pX for p in P. Throws UsageError if p is not in P.
Ideal left_multiply(const Ambient& amb, const GroupElement& p, const Ideal& X);

/// p^{-1}X = {y in P : py in X} for p in P. Throws UsageError if p not in P.
Ideal left_preimage(const Ambient& amb, const GroupElement& p, const Ideal& X);

Ideal intersect(const Ambient& amb, const Ideal& X1, const Ideal& X2);

/// P n (g.X) for an arbitrary group element g. This is again constructible
/// (for the catalog families in exact form). When g.X is contained in P it
/// equals the plain translate g.X.
Ideal meet_with_p(const Ambient& amb, const GroupElement& g, const Ideal& X);

bool ideal_contains(const Ambient& amb, const Ideal& X, const GroupElement& x);
bool ideal_subset(const Ambient& amb, const Ideal& X1, const Ideal& X2);

/// A canonical element of a nonempty ideal (the generator / corner / least member).
std::optional<GroupElement> min_element(const Ambient& amb, const Ideal& X);

/// Is X of the form pP? Returns the generator.
std::optional<GroupElement> principal_generator(const Ambient& amb, const Ideal& X);

/// Search for an element of X not covered by the union of `subs`.
struct CoverageWitness {
  enum class Status { Found, Covered, UnknownTruncated };
  Status status = Status::Covered;
  std::optional<GroupElement> element;
};
CoverageWitness coverage_witness(const Ambient& amb, const Ideal& X, const std::vector<Ideal>& subs);

std::string print_ideal(const Ambient& amb, const Ideal& X);
/// Inverse of print_ideal for catalog families (custom ideals do not parse).
Ideal parse_ideal(const Ambient& amb, const std::string& text);

/// Custom-family entry points (used by the closure; exact membership, sampled identity).
Ideal custom_full(const Ambient& amb);

} // namespace stonework

#endif
