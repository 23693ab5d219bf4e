#include "stonework/analyze.hpp"

#include <chrono>

#include "stonework/errors.hpp"

namespace stonework {

AnalyzeOptions options_from_config(const Json& config) {
  AnalyzeOptions o;
  if (!config.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, value] : config.items()) {
    if (key == "family") o.family_id = value.get<std::string>();
    else if (key == "depth") o.depth = value.get<int>();
    else if (key == "bound") o.bound = value.get<int>();
    else if (key == "hull_depth") o.hull_depth = value.get<int>();
    else if (key == "seed") o.seed = value.get<unsigned long long>();
    else if (key == "ideal_cap") o.ideal_cap = value.get<size_t>();
    else if (key == "filter_cap") o.filter_cap = value.get<size_t>();
    else if (key == "g0_samples") o.g0_samples = value.get<size_t>();
    else if (key == "timings") o.timings = value.get<bool>();
    else if (key == "custom") o.custom_definition = value;
    else throw UsageError("config: unknown key '" + key + "'");
  }
  if (o.family_id == "custom" && !o.custom_definition)
    throw UsageError("config: family \"custom\" needs a \"custom\" definition object");
  if (o.depth < 1) throw UsageError("config: depth must be >= 1 (at path depth)");
  if (o.hull_depth < 0 || o.hull_depth > 6)
    throw UsageError("config: hull_depth must be between 0 and 6 (at path hull_depth)");
  return o;
}

Json options_to_json(const AnalyzeOptions& o) {
  Json j;
  j["depth"] = o.depth;
  j["bound"] = o.bound;
  j["hull_depth"] = o.hull_depth;
  j["seed"] = o.seed;
  j["ideal_cap"] = o.ideal_cap;
  j["filter_cap"] = o.filter_cap;
  j["g0_samples"] = o.g0_samples;
  return j;
}

Ambient ambient_from_options(const AnalyzeOptions& o) {
  if (o.family_id != "custom") return Ambient::from_id(o.family_id);
  const Json& c = *o.custom_definition;
  std::string ambient = c.at("ambient").get<std::string>();
  std::string id = "custom:" + c.value("id", std::string("unnamed"));

  FamilyKind kind;
  int rank = 0;
  if (ambient.rfind("free_product:", 0) == 0) {
    kind = FamilyKind::FreeProduct;
    rank = std::stoi(ambient.substr(13));
  } else if (ambient.rfind("zk:", 0) == 0) {
    kind = FamilyKind::Cone;
    rank = std::stoi(ambient.substr(3));
  } else if (ambient == "z") {
    // integer ambient: positive generators give an exact numerical family
    std::string gens;
    for (const auto& g : c.at("generators")) {
      if (!gens.empty()) gens += ",";
      gens += g.get<std::string>();
    }
    return Ambient::from_id("numerical:" + gens);
  } else {
    throw UsageError("custom ambient must be free_product:<n>, zk:<k> or z");
  }

  Ambient probe = kind == FamilyKind::FreeProduct
                      ? Ambient::from_id("free_product_naturals:" + std::to_string(rank))
                      : Ambient::from_id("cone_zk:" + std::to_string(rank));
  std::vector<GroupElement> gens;
  for (const auto& g : c.at("generators")) gens.push_back(probe.parse_element(g.get<std::string>()));
  Ambient out = Ambient::custom(kind, rank, std::move(gens), id);
  if (c.contains("metadata")) {
    const Json& m = c.at("metadata");
    if (m.contains("amenable_action"))
      out.meta.amenable_action = CatalogMeta::Note{
          m.at("amenable_action").value("value", true),
          m.at("amenable_action").value("citation", std::string("user-supplied"))};
  }
  return out;
}

namespace {

std::string independence_status_name(IndependenceVerdict::Status s) {
  switch (s) {
    case IndependenceVerdict::Status::Independent: return "Independent";
    case IndependenceVerdict::Status::Dependent: return "Dependent";
    case IndependenceVerdict::Status::UnknownTruncated: return "UnknownTruncated";
  }
  return "?";
}

} // namespace

Json analyze(const AnalyzeOptions& o) {
  auto t0 = std::chrono::steady_clock::now();
  Ambient amb = ambient_from_options(o);

  Json d;
  d["dossier_version"] = kDossierVersion;
  d["tool_version"] = STONEWORK_VERSION;
  d["family"] = amb.id();
  d["parameters"] = options_to_json(o);
  if (o.custom_definition) d["custom_definition"] = *o.custom_definition;
  d["catalog"] = meta_to_json(amb.meta);

  // 1. ideal closure (margin family one level deeper for filter actions)
  ClosureCaps caps{o.ideal_cap};
  IdealFamily fam = closure_to_depth(amb, o.depth, caps);
  IdealFamily margin = closure_to_depth(amb, o.depth + 1, caps);
  {
    Json ji;
    ji["count_nonempty"] = fam.nonempty_count();
    ji["truncated"] = fam.truncated;
    if (fam.stabilized_at) ji["stabilized_at"] = *fam.stabilized_at;
    ji["budget_hit"] = fam.budget_hit;
    Json members = Json::array(), prov = Json::array();
    for (size_t i = 0; i < fam.ideals.size(); ++i) {
      members.push_back(print_ideal(amb, fam.ideals[i]));
      prov.push_back(fam.provenance[i]);
    }
    ji["members"] = members;
    ji["provenance"] = prov;
    d["ideals"] = ji;
  }

  // 2. independence
  IndependenceVerdict indep = independence_check(amb, fam);
  {
    Json ji;
    ji["verdict"] = independence_status_name(indep.status);
    if (indep.status == IndependenceVerdict::Status::Dependent) {
      Json w;
      w["ideal"] = print_ideal(amb, indep.witness);
      Json parts = Json::array();
      for (const Ideal& part : indep.witness_parts) parts.push_back(print_ideal(amb, part));
      w["union_of"] = parts;
      ji["witness"] = w;
    }
    d["independence"] = ji;
  }

  // 3. condition probes
  {
    Json jc;
    bool affine = amb.payload_kind() == FamilyKind::AffineInts;
    bool numerical = amb.payload_kind() == FamilyKind::Numerical;
    int tb = affine || numerical ? std::min(o.bound, 2) : o.bound;
    int budget = affine ? 4 : (numerical ? 2 * tb + 2 : std::max(tb, 1));
    ToeplitzProbe tp = toeplitz_probe(amb, tb, budget, std::min(tb, 4));
    jc["toeplitz"] = report_to_json(amb, tp.report);
    Json certs = Json::array();
    for (const auto& [g, outcome] : tp.certificates)
      certs.push_back(toeplitz_outcome_to_json(amb, g, outcome));
    jc["toeplitz_certificates"] = certs;
    jc["ql"] = report_to_json(amb, quasi_lattice_probe(amb, std::min(o.bound, affine ? 2 : o.bound)));
    OreReversibility orr = ore_reversibility_probe(amb, std::min(o.bound, affine ? 3 : o.bound));
    jc["ore"] = report_to_json(amb, orr.ore);
    jc["reversible"] = report_to_json(amb, orr.reversible);
    d["conditions"] = jc;
  }

  // 4. inverse hull
  HullEnumeration hull = hull_enumerate(amb, o.hull_depth);
  {
    Json jh;
    jh["depth"] = o.hull_depth;
    jh["size"] = hull.elements.size();
    jh["budget_hit"] = hull.budget_hit;
    jh["abstract_faithful"] = indep.status == IndependenceVerdict::Status::Independent;
    Json elems = Json::array();
    for (size_t i = 0; i < hull.elements.size(); ++i) {
      Json e;
      if (hull.elements[i].is_zero()) {
        e["zero"] = true;
      } else {
        e["domain"] = print_ideal(amb, hull.elements[i].domain());
        e["shift"] = amb.print_element(hull.elements[i].shift());
      }
      e["word"] = print_hull_word(amb, hull.words[i]);
      elems.push_back(e);
    }
    jh["elements"] = elems;
    d["hull"] = jh;
  }

  // 5. spectrum
  std::vector<Filter> filters = enumerate_filters(amb, fam, o.filter_cap);
  std::vector<Filter> ultra;
  for (const Filter& F : filters)
    if (is_relative_ultrafilter(amb, fam, F)) ultra.push_back(F);
  std::vector<Filter> boundary = boundary_approx(amb, fam);
  {
    Json js;
    js["depth_relative"] = true;
    js["filter_count"] = filters.size();
    js["ultrafilter_count"] = ultra.size();
    js["boundary_count"] = boundary.size();
    Json jf = Json::array();
    for (const Filter& F : filters) jf.push_back(filter_to_json(amb, fam, F));
    js["filters"] = jf;
    Json ju = Json::array();
    for (const Filter& F : ultra) ju.push_back(print_ideal(amb, F.min));
    js["ultrafilter_mins"] = ju;
    Json jb = Json::array();
    for (const Filter& F : boundary) jb.push_back(print_ideal(amb, F.min));
    js["boundary_mins"] = jb;
    InvarianceVerdict inv = invariant_subset_check(amb, fam, boundary, &margin);
    js["boundary_invariance"] =
        inv.status == InvarianceVerdict::Status::Holds
            ? "Holds"
            : (inv.status == InvarianceVerdict::Status::Fails ? "Fails" : "UnknownTruncated");
    d["spectrum"] = js;
  }

  // 6. groupoid probes and checklist
  ChecklistResult checklist =
      kirchberg_checklist(amb, fam, boundary, o.bound, o.seed, o.g0_samples);
  {
    // local boundary action on the full cylinder U(P; -)
    Json jl;
    BasicOpen everything;
    everything.required = fam.index_of(Ideal::full(amb));
    LocalBoundaryResult lb = local_boundary_witness(amb, fam, everything, boundary);
    if (lb.kind == LocalBoundaryResult::Kind::NotApplicableReversible) {
      jl["kind"] = "NotApplicableReversible";
    } else {
      jl["kind"] = "Witness";
      jl["x"] = amb.print_element(lb.x);
      jl["p"] = amb.print_element(lb.p);
      jl["q"] = amb.print_element(lb.q);
      jl["gprime"] = amb.print_element(lb.gprime);
      jl["delta"] = print_ideal(amb, lb.delta);
    }
    d["local_boundary"] = jl;
    d["checklist"] = checklist_to_json(amb, checklist);
  }

  if (o.timings) {
    auto t1 = std::chrono::steady_clock::now();
    d["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  }
  return d;
}

Json list_catalog() {
  Json out = Json::array();
  for (const auto& [id, desc] : catalog_entries()) {
    Json e;
    e["id"] = id;
    e["description"] = desc;
    std::string concrete = id;
    auto angle = concrete.find('<');
    if (angle != std::string::npos) {
      if (concrete.rfind("cone_zk", 0) == 0) concrete = "cone_zk:2";
      else if (concrete.rfind("free_product_naturals", 0) == 0) concrete = "free_product_naturals:2";
      else concrete = "numerical:2,3";
    }
    e["catalog_metadata"] = meta_to_json(Ambient::from_id(concrete).meta);
    out.push_back(e);
  }
  return out;
}

} // namespace stonework
