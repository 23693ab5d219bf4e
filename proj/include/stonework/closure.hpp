#ifndef STONEWORK_CLOSURE_HPP
#define STONEWORK_CLOSURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "stonework/ideal.hpp"

namespace stonework {

/// The family of constructible right ideals explored to a fixed depth:
/// breadth-first closure of {P, empty} under left multiplication and left
/// preimages by the generators, then pairwise-intersection saturation.
/// Members are canonically sorted; index 0 is always the empty ideal.
struct IdealFamily {
  std::vector<Ideal> ideals;
  std::vector<std::string> provenance; // replayable expression per ideal
  int depth = 0;
  bool truncated = false;             // a further round would add new ideals
  std::optional<int> stabilized_at;   // first depth at which nothing new appeared
  bool budget_hit = false;

  int index_of(const Ideal& X) const; // -1 if absent
  size_t nonempty_count() const { return ideals.size() - 1; }
};

struct ClosureCaps {
  size_t max_ideals = 10000;
};

IdealFamily closure_to_depth(const Ambient& amb, int depth, const ClosureCaps& caps = {});

/// Replays a provenance expression: "P", "empty", "<prov>;mul <gen>",
/// "<prov>;pre <gen>", "cap(<prov>,<prov>)".
Ideal replay_provenance(const Ambient& amb, const std::string& prov);

struct IndependenceVerdict {
  enum class Status { Independent, Dependent, UnknownTruncated };
  Status status = Status::Independent;
  // Dependent: witness ideal equal to the union of the proper members below
  Ideal witness;
  std::vector<Ideal> witness_parts;
};

/// Is any member a finite union of properly contained members? Exact for the
/// catalog families; custom families may come back UnknownTruncated.
IndependenceVerdict independence_check(const Ambient& amb, const IdealFamily& fam);

/// Orthogonalization data for a finite intersection-closed subfamily:
/// each member e paired with its atom e \ union{e' in F : e' proper subset of e}.
struct Atom {
  Ideal ideal;
  std::vector<Ideal> proper_subs;
  bool nonempty = false;
  std::optional<GroupElement> witness; // element of the atom when nonempty
};

std::vector<Atom> orthogonal_atoms(const Ambient& amb, const std::vector<Ideal>& F);

} // namespace stonework

#endif
