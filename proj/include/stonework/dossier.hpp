#ifndef STONEWORK_DOSSIER_HPP
#define STONEWORK_DOSSIER_HPP

#include <string>

#include <json.hpp>

#include "stonework/conditions.hpp"
#include "stonework/groupoid.hpp"
#include "stonework/spectrum.hpp"

namespace stonework {

using Json = nlohmann::ordered_json;

inline constexpr int kDossierVersion = 1;

/// Byte-stable serialization used everywhere a dossier is written.
std::string canonical_dump(const Json& j);

Json report_to_json(const Ambient& amb, const ConditionReport& r);
ConditionReport report_from_json(const Json& j);

Json filter_to_json(const Ambient& amb, const IdealFamily& fam, const Filter& F);
Json meta_to_json(const CatalogMeta& m);

Json toeplitz_outcome_to_json(const Ambient& amb, const GroupElement& g, const ToeplitzOutcome& o);
Json g0_to_json(const Ambient& amb, const GroupElement& g, const G0Result& r);
Json topfree_to_json(const Ambient& amb, const GroupElement& g, const TopFreeResult& r);
Json checklist_to_json(const Ambient& amb, const ChecklistResult& r);

/// Structural validation against the shipped schema; returns error paths.
std::vector<std::string> validate_dossier_structure(const Json& dossier);

} // namespace stonework

#endif
