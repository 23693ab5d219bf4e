#include "stonework/dossier.hpp"

#include "stonework/errors.hpp"

namespace stonework {

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json report_to_json(const Ambient& amb, const ConditionReport& r) {
  (void)amb;
  Json j;
  j["condition"] = r.condition;
  j["status"] = status_name(r.status);
  j["bound"] = r.bound;
  if (!r.argument.empty()) j["argument"] = r.argument;
  if (!r.witness.empty()) {
    Json w = Json::object();
    for (const auto& [k, v] : r.witness) w[k] = v;
    j["witness"] = w;
  }
  return j;
}

ConditionReport report_from_json(const Json& j) {
  ConditionReport r;
  r.condition = j.at("condition").get<std::string>();
  std::string s = j.at("status").get<std::string>();
  if (s == "HoldsProven") r.status = ConditionReport::Status::HoldsProven;
  else if (s == "HoldsToBudget") r.status = ConditionReport::Status::HoldsToBudget;
  else if (s == "Fails") r.status = ConditionReport::Status::Fails;
  else if (s == "UnknownToBudget") r.status = ConditionReport::Status::UnknownToBudget;
  else throw UsageError("unknown condition status: " + s);
  r.bound = j.value("bound", 0);
  r.argument = j.value("argument", "");
  if (j.contains("witness"))
    for (const auto& [k, v] : j.at("witness").items()) r.witness[k] = v.get<std::string>();
  return r;
}

Json filter_to_json(const Ambient& amb, const IdealFamily& fam, const Filter& F) {
  Json j;
  j["min"] = print_ideal(amb, F.min);
  Json members = Json::array();
  for (int i : F.trace) members.push_back(print_ideal(amb, fam.ideals[static_cast<size_t>(i)]));
  j["members"] = members;
  return j;
}

Json meta_to_json(const CatalogMeta& m) {
  Json j = Json::object();
  auto put = [&](const char* key, const std::optional<CatalogMeta::Note>& n) {
    if (!n) return;
    Json e;
    e["value"] = n->value;
    e["status"] = "ASSUMED";
    e["citation"] = n->citation;
    j[key] = e;
  };
  put("amenable_action", m.amenable_action);
  put("left_ore", m.left_ore);
  put("left_reversible", m.left_reversible);
  put("quasi_lattice", m.quasi_lattice);
  switch (m.topfree) {
    case CatalogMeta::TopFree::Unresolved: j["topfree_resolution"] = "unresolved"; break;
    case CatalogMeta::TopFree::CitedHolds: j["topfree_resolution"] = "cited_holds"; break;
    case CatalogMeta::TopFree::CitedFails: j["topfree_resolution"] = "cited_fails"; break;
  }
  if (!m.topfree_citation.empty()) j["topfree_citation"] = m.topfree_citation;
  if (!m.boundary_note.empty()) j["boundary_note"] = m.boundary_note;
  return j;
}

Json toeplitz_outcome_to_json(const Ambient& amb, const GroupElement& g, const ToeplitzOutcome& o) {
  Json j;
  j["g"] = amb.print_element(g);
  switch (o.kind) {
    case ToeplitzOutcome::Kind::ZeroCase: j["kind"] = "ZeroCase"; break;
    case ToeplitzOutcome::Kind::Decomposition:
      j["kind"] = "Decomposition";
      j["word"] = print_hull_word(amb, o.word);
      break;
    case ToeplitzOutcome::Kind::UnknownToBudget: j["kind"] = "UnknownToBudget"; break;
  }
  return j;
}

Json g0_to_json(const Ambient& amb, const GroupElement& g, const G0Result& r) {
  Json j;
  j["g"] = amb.print_element(g);
  if (r.kind == G0Result::Kind::InG0ToBudget) {
    j["kind"] = "InG0ToBudget";
  } else {
    j["kind"] = "NotInG0";
    j["witness_ideal"] = print_ideal(amb, r.witness);
    j["side"] = r.inverse_side ? "inverse" : "direct";
  }
  return j;
}

Json topfree_to_json(const Ambient& amb, const GroupElement& g, const TopFreeResult& r) {
  Json j;
  j["g"] = amb.print_element(g);
  if (!r.moved) {
    j["kind"] = "FixedEverywhereSampled";
    return j;
  }
  j["kind"] = "MovedWitness";
  j["filter_min"] = print_ideal(amb, r.F.min);
  j["character_shift"] = amb.print_element(r.h0);
  j["test_shift"] = amb.print_element(r.h);
  j["test_ideal"] = print_ideal(amb, r.X);
  return j;
}

Json checklist_to_json(const Ambient& amb, const ChecklistResult& r) {
  Json j;
  switch (r.verdict) {
    case ChecklistResult::Verdict::Passes: j["verdict"] = "ChecklistPasses"; break;
    case ChecklistResult::Verdict::Fails: j["verdict"] = "ChecklistFails"; break;
    case ChecklistResult::Verdict::Inconclusive: j["verdict"] = "Inconclusive"; break;
  }
  j["reason"] = r.reason;
  j["nontrivial"] = r.nontrivial;
  Json am;
  am["status"] = r.amenability_status;
  if (!r.amenability_citation.empty()) am["citation"] = r.amenability_citation;
  j["amenability"] = am;
  switch (r.evidence) {
    case ChecklistResult::Evidence::G0SampledTrivial: j["topfree_evidence"] = "G0SampledTrivial"; break;
    case ChecklistResult::Evidence::AllSampledMoved: j["topfree_evidence"] = "AllSampledMoved"; break;
    case ChecklistResult::Evidence::FixedFound: j["topfree_evidence"] = "FixedFound"; break;
  }
  if (r.fixed_g) j["fixed_g"] = amb.print_element(*r.fixed_g);
  Json g0 = Json::array();
  for (const auto& [g, res] : r.g0_samples) g0.push_back(g0_to_json(amb, g, res));
  j["g0_samples"] = g0;
  Json tf = Json::array();
  for (const auto& [g, res] : r.topfree_samples) tf.push_back(topfree_to_json(amb, g, res));
  j["topfree_samples"] = tf;
  return j;
}

std::vector<std::string> validate_dossier_structure(const Json& d) {
  std::vector<std::string> errors;
  auto need = [&](const char* key, Json::value_t type) {
    if (!d.contains(key)) {
      errors.push_back(std::string("missing field: ") + key);
      return;
    }
    if (d.at(key).type() != type &&
        !(type == Json::value_t::number_integer && d.at(key).is_number()))
      errors.push_back(std::string("wrong type for field: ") + key);
  };
  need("dossier_version", Json::value_t::number_integer);
  need("tool_version", Json::value_t::string);
  need("family", Json::value_t::string);
  need("parameters", Json::value_t::object);
  need("catalog", Json::value_t::object);
  need("ideals", Json::value_t::object);
  need("independence", Json::value_t::object);
  need("conditions", Json::value_t::object);
  need("hull", Json::value_t::object);
  need("spectrum", Json::value_t::object);
  need("checklist", Json::value_t::object);
  if (d.contains("ideals")) {
    const Json& i = d.at("ideals");
    for (const char* k : {"members", "provenance"})
      if (!i.contains(k) || !i.at(k).is_array())
        errors.push_back(std::string("ideals.") + k + " must be an array");
    if (!i.contains("truncated") || !i.at("truncated").is_boolean())
      errors.push_back("ideals.truncated must be a boolean");
  }
  if (d.contains("conditions"))
    for (const char* k : {"toeplitz", "ql", "ore", "reversible"})
      if (!d.at("conditions").contains(k))
        errors.push_back(std::string("conditions.") + k + " missing");
  return errors;
}

} // namespace stonework
