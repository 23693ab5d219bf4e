#ifndef STONEWORK_CONDITIONS_HPP
#define STONEWORK_CONDITIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonework/hull.hpp"

namespace stonework {

/// Status of a probed condition. Fails always carries a replayable witness;
/// HoldsProven is reserved for catalog families with a family-level argument.
struct ConditionReport {
  std::string condition;
  enum class Status { HoldsProven, HoldsToBudget, Fails, UnknownToBudget };
  Status status = Status::HoldsToBudget;
  std::string argument; // family-level argument / citation for HoldsProven
  int bound = 0;
  std::map<std::string, std::string> witness; // printable, replayable payload
};

std::string status_name(ConditionReport::Status s);

/// The compression E_P lambda_g E_P as a partial isometry: domain P n g^{-1}P,
/// map x -> gx. Zero iff the domain is empty (exact for catalog families).
PartialIsometry compression_descriptor(const Ambient& amb, const GroupElement& g);

struct ToeplitzOutcome {
  enum class Kind { ZeroCase, Decomposition, UnknownToBudget };
  Kind kind = Kind::UnknownToBudget;
  HullWord word; // for Decomposition: shortest, lexicographically least
};

/// Iterative-deepening search for a hull word whose normal form equals the
/// compression of g. budget bounds the word length.
ToeplitzOutcome toeplitz_decompose(const Ambient& amb, const GroupElement& g, int budget);

/// Constructive two-letter-shape decompositions where the family argument
/// applies: quasi-lattice (V_p V_q*) and left Ore (V_p* V_q).
std::optional<std::pair<GroupElement, GroupElement>> ql_decomposition(const Ambient& amb,
                                                                      const GroupElement& g);
std::optional<std::pair<GroupElement, GroupElement>> ore_decomposition(const Ambient& amb,
                                                                       const GroupElement& g);

struct ToeplitzProbe {
  ConditionReport report;
  // per-g certificates for the dossier (g, outcome), capped by the caller
  std::vector<std::pair<GroupElement, ToeplitzOutcome>> certificates;
};
ToeplitzProbe toeplitz_probe(const Ambient& amb, int bound, int budget, int certificate_radius);

/// QL0 (P n P^{-1} = {e}), QL1 (P n gP empty or principal) over the g-sphere,
/// QL2 (pP n qP empty or principal) over the P-sphere.
ConditionReport quasi_lattice_probe(const Ambient& amb, int bound);

struct OreReversibility {
  ConditionReport ore;
  ConditionReport reversible;
};
OreReversibility ore_reversibility_probe(const Ambient& amb, int bound);

} // namespace stonework

#endif
