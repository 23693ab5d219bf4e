#ifndef STONEWORK_AMBIENT_HPP
#define STONEWORK_AMBIENT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stonework/element.hpp"

namespace stonework {

enum class FamilyKind {
  FreeProduct, // P = N_0^{*n} inside the free group F_n
  Cone,        // P = N^k inside Z^k (k = 0 gives the trivial semigroup)
  Numerical,   // P = <g_1,...,g_m> inside Z
  AffineInts,  // P = Z x| Z^x inside Q x| Q^x
  Custom       // finitely generated subsemigroup of a built-in ambient
};

/// Catalog metadata: facts about a family that are cited, never computed.
struct CatalogMeta {
  struct Note {
    bool value = false;
    std::string citation;
  };
  /// Amenability of the relevant boundary/group action. Always ASSUMED.
  std::optional<Note> amenable_action;
  std::optional<Note> left_ore;
  std::optional<Note> left_reversible;
  std::optional<Note> quasi_lattice;
  /// Catalog-level resolution of whether G_0 acts topologically freely on the
  /// boundary, where the literature settles it.
  enum class TopFree { Unresolved, CitedHolds, CitedFails };
  TopFree topfree = TopFree::Unresolved;
  std::string topfree_citation;
  std::string boundary_note;
};

/// Exact membership machinery for a numerical semigroup <gens> in Z.
/// All queries are in original coordinates; the gcd is scaled out internally.
class NumericalTable {
public:
  explicit NumericalTable(std::vector<long long> gens);
  bool member(long long n) const;
  /// Smallest member >= n.
  long long first_member_at_or_after(long long n) const;
  /// Everything in P from d*conductor_scaled on is exactly {m : gcd | m}.
  long long tail_start() const { return tail_start_; }
  long long gcd() const { return d_; }
  const std::vector<long long>& gens() const { return gens_; }

private:
  std::vector<long long> gens_;
  long long d_;          // gcd of the generators; 0 means P = {0}
  long long tail_start_; // original scale
  std::vector<char> sieve_; // scaled coordinates, up to tail
};

struct CustomDef;

/// An ambient group G together with the subsemigroup P: membership rule,
/// finite generator list for P, and catalog metadata. Immutable; safe to
/// share across threads.
class Ambient {
public:
  /// Catalog ids: "trivial", "naturals", "cone_zk:<k>", "free_product_naturals:<n>",
  /// "numerical:<g1>,<g2>,...", "axb_integers".
  static Ambient from_id(const std::string& id);
  static Ambient custom(FamilyKind underlying, int rank,
                        std::vector<GroupElement> generators, const std::string& id);

  const std::string& id() const { return id_; }
  FamilyKind kind() const { return kind_; }
  FamilyKind payload_kind() const { return kind_ == FamilyKind::Custom ? underlying_ : kind_; }
  int rank() const { return rank_; }
  bool is_custom() const { return kind_ == FamilyKind::Custom; }

  GroupElement identity() const;
  const std::vector<GroupElement>& generators() const { return gens_; }
  const NumericalTable& numerical() const { return *table_; }

  /// Exact P-membership. For custom subsemigroups this is a terminating
  /// factorization search (generators all have positive length).
  bool in_p(const GroupElement& g) const;

  GroupElement parse_element(const std::string& text) const;
  std::string print_element(const GroupElement& g) const;

  /// All group elements reachable by words of length <= radius in the
  /// generators and their inverses, BFS layer by layer, deterministic order.
  std::vector<GroupElement> group_sphere(int radius) const;
  /// Same with generators only: elements of P by word depth.
  std::vector<GroupElement> semigroup_sphere(int radius) const;
  /// Members of P useful as sample points (custom: factorization-closed list).
  std::vector<GroupElement> sample_points(int radius) const;

  /// Fixed sample-point list backing custom (bounded-witness) ideals.
  const std::vector<GroupElement>& custom_points() const;

  CatalogMeta meta;

private:
  Ambient() = default;
  std::string id_;
  FamilyKind kind_ = FamilyKind::Cone;
  FamilyKind underlying_ = FamilyKind::Cone;
  int rank_ = 0;
  std::vector<GroupElement> gens_;
  std::shared_ptr<const NumericalTable> table_;
  std::shared_ptr<CustomDef> custom_;
};

/// List of catalog family ids with one-line descriptions, for the CLI.
std::vector<std::pair<std::string, std::string>> catalog_entries();

} // namespace stonework

#endif
