#include "stonework/analyze.hpp"
#include "stonework/errors.hpp"

namespace stonework {

namespace {

struct Replayer {
  const Json& d;
  Ambient amb;
  IdealFamily fam;
  VerifyResult& out;

  void check(const std::string& path, bool ok, const std::string& msg) {
    out.add(path, ok, ok ? "" : msg);
  }

  template <typename Fn>
  void guarded(const std::string& path, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      out.add(path, false, std::string("replay error: ") + e.what());
    }
  }

  void ideals() {
    const Json& ji = d.at("ideals");
    const Json& members = ji.at("members");
    const Json& prov = ji.at("provenance");
    if (members.size() != prov.size()) {
      check("ideals", false, "members/provenance length mismatch");
      return;
    }
    bool all = true;
    std::string bad;
    for (size_t i = 0; i < members.size(); ++i) {
      Ideal replayed = replay_provenance(amb, prov[i].get<std::string>());
      if (print_ideal(amb, replayed) != members[i].get<std::string>()) {
        all = false;
        bad = "ideals.members[" + std::to_string(i) + "]";
        break;
      }
    }
    check(all ? "ideals.provenance" : bad, all, "provenance does not replay to the stored ideal");
    check("ideals.count_nonempty",
          ji.at("count_nonempty").get<size_t>() == fam.nonempty_count(),
          "stored nonempty count differs from recomputation");
  }

  void independence() {
    const Json& j = d.at("independence");
    IndependenceVerdict rec = independence_check(amb, fam);
    std::string stored = j.at("verdict").get<std::string>();
    std::string name = rec.status == IndependenceVerdict::Status::Independent ? "Independent"
                       : rec.status == IndependenceVerdict::Status::Dependent ? "Dependent"
                                                                              : "UnknownTruncated";
    check("independence.verdict", stored == name, "verdict differs from recomputation");
    if (stored == "Dependent") {
      const Json& w = j.at("witness");
      Ideal X = parse_ideal(amb, w.at("ideal").get<std::string>());
      std::vector<Ideal> parts;
      for (const auto& s : w.at("union_of")) parts.push_back(parse_ideal(amb, s.get<std::string>()));
      bool proper = !parts.empty();
      for (const Ideal& part : parts)
        proper = proper && ideal_subset(amb, part, X) && !(part == X);
      bool covered =
          coverage_witness(amb, X, parts).status == CoverageWitness::Status::Covered;
      check("independence.witness", proper && covered,
            "witness union does not reconstitute the ideal");
    }
  }

  void conditions() {
    const Json& jc = d.at("conditions");
    // quasi-lattice failure witnesses
    {
      ConditionReport r = report_from_json(jc.at("ql"));
      if (r.status == ConditionReport::Status::Fails) {
        guarded("conditions.ql.witness", [&] {
          const auto kind = r.witness.at("kind");
          bool ok = false;
          if (kind == "QL0") {
            GroupElement g = amb.parse_element(r.witness.at("g"));
            ok = !g.is_identity() && amb.in_p(g) && amb.in_p(invert(g));
          } else if (kind == "QL1") {
            GroupElement g = amb.parse_element(r.witness.at("g"));
            Ideal m = meet_with_p(amb, g, Ideal::full(amb));
            ok = print_ideal(amb, m) == r.witness.at("meet") && !m.is_empty() &&
                 !principal_generator(amb, m);
          } else if (kind == "QL2") {
            GroupElement p = amb.parse_element(r.witness.at("p"));
            GroupElement q = amb.parse_element(r.witness.at("q"));
            Ideal m = intersect(amb, left_multiply(amb, p, Ideal::full(amb)),
                                left_multiply(amb, q, Ideal::full(amb)));
            ok = print_ideal(amb, m) == r.witness.at("meet") && !m.is_empty() &&
                 !principal_generator(amb, m);
          }
          check("conditions.ql.witness", ok, "quasi-lattice failure witness does not replay");
        });
      }
    }
    {
      ConditionReport r = report_from_json(jc.at("ore"));
      if (r.status == ConditionReport::Status::Fails)
        guarded("conditions.ore.witness", [&] {
          GroupElement g = amb.parse_element(r.witness.at("g"));
          check("conditions.ore.witness", !ore_decomposition(amb, g).has_value(),
                "ore failure witness decomposes after all");
        });
    }
    {
      ConditionReport r = report_from_json(jc.at("reversible"));
      if (r.status == ConditionReport::Status::Fails)
        guarded("conditions.reversible.witness", [&] {
          GroupElement p = amb.parse_element(r.witness.at("p"));
          GroupElement q = amb.parse_element(r.witness.at("q"));
          Ideal m = intersect(amb, left_multiply(amb, p, Ideal::full(amb)),
                              left_multiply(amb, q, Ideal::full(amb)));
          check("conditions.reversible.witness", amb.in_p(p) && amb.in_p(q) && m.is_empty(),
                "claimed disjoint pair intersects");
        });
    }
    if (jc.contains("toeplitz_certificates")) {
      const Json& certs = jc.at("toeplitz_certificates");
      for (size_t i = 0; i < certs.size(); ++i) {
        std::string path = "conditions.toeplitz_certificates[" + std::to_string(i) + "]";
        guarded(path, [&] {
          const Json& c = certs[i];
          GroupElement g = amb.parse_element(c.at("g").get<std::string>());
          PartialIsometry compression = compression_descriptor(amb, g);
          std::string kind = c.at("kind").get<std::string>();
          if (kind == "ZeroCase") {
            check(path, compression.is_zero(), "claimed zero compression is nonzero");
          } else if (kind == "Decomposition") {
            HullWord w = parse_hull_word(amb, c.at("word").get<std::string>());
            PartialIsometry nf = from_word(amb, w);
            check(path, nf == compression,
                  "decomposition word does not reproduce the compression");
          } else {
            check(path, true, "");
          }
        });
      }
    }
  }

  void hull() {
    const Json& jh = d.at("hull");
    const Json& elems = jh.at("elements");
    bool all = true;
    std::string bad;
    for (size_t i = 0; i < elems.size() && all; ++i) {
      const Json& e = elems[i];
      PartialIsometry nf = from_word(amb, parse_hull_word(amb, e.at("word").get<std::string>()));
      if (e.contains("zero")) {
        // the adjoined zero has the empty word recorded; only flag words that
        // genuinely normalize to something nonzero AND claim zero
        if (!nf.is_zero() && e.at("word").get<std::string>() != "1") {
          all = false;
          bad = "hull.elements[" + std::to_string(i) + "]";
        }
      } else if (nf.is_zero() ||
                 print_ideal(amb, nf.domain()) != e.at("domain").get<std::string>() ||
                 amb.print_element(nf.shift()) != e.at("shift").get<std::string>()) {
        all = false;
        bad = "hull.elements[" + std::to_string(i) + "]";
      }
    }
    check(all ? "hull.elements" : bad, all, "hull word does not replay to the stored normal form");
  }

  void spectrum() {
    const Json& js = d.at("spectrum");
    std::vector<Filter> filters = enumerate_filters(amb, fam);
    std::vector<Filter> ultra;
    for (const Filter& F : filters)
      if (is_relative_ultrafilter(amb, fam, F)) ultra.push_back(F);
    std::vector<Filter> boundary = boundary_approx(amb, fam);
    check("spectrum.filter_count", js.at("filter_count").get<size_t>() == filters.size(),
          "filter count differs from recomputation");
    check("spectrum.ultrafilter_count", js.at("ultrafilter_count").get<size_t>() == ultra.size(),
          "ultrafilter count differs from recomputation");
    check("spectrum.boundary_count", js.at("boundary_count").get<size_t>() == boundary.size(),
          "boundary count differs from recomputation");
    if (js.contains("boundary_mins")) {
      bool ok = js.at("boundary_mins").size() == boundary.size();
      for (size_t i = 0; ok && i < boundary.size(); ++i)
        ok = js.at("boundary_mins")[i].get<std::string>() == print_ideal(amb, boundary[i].min);
      check("spectrum.boundary_mins", ok, "boundary member list differs from recomputation");
    }
  }

  void checklist() {
    const Json& jk = d.at("checklist");
    for (size_t i = 0; i < jk.at("g0_samples").size(); ++i) {
      std::string path = "checklist.g0_samples[" + std::to_string(i) + "]";
      guarded(path, [&] {
        const Json& s = jk.at("g0_samples")[i];
        GroupElement g = amb.parse_element(s.at("g").get<std::string>());
        if (s.at("kind").get<std::string>() == "NotInG0") {
          GroupElement side = s.at("side").get<std::string>() == "inverse" ? invert(g) : g;
          Ideal X = parse_ideal(amb, s.at("witness_ideal").get<std::string>());
          Ideal gP = meet_with_p(amb, side, Ideal::full(amb));
          check(path, gP.is_empty() || intersect(amb, gP, X).is_empty(),
                "claimed missed ideal actually meets g.P");
        } else {
          check(path, g0_probe(amb, fam, g).kind == G0Result::Kind::InG0ToBudget,
                "stored InG0ToBudget is refuted at this depth");
        }
      });
    }
    for (size_t i = 0; i < jk.at("topfree_samples").size(); ++i) {
      std::string path = "checklist.topfree_samples[" + std::to_string(i) + "]";
      guarded(path, [&] {
        const Json& s = jk.at("topfree_samples")[i];
        GroupElement g = amb.parse_element(s.at("g").get<std::string>());
        if (s.at("kind").get<std::string>() != "MovedWitness") {
          check(path, !g.is_identity(), "fixed-claim sample fails to parse as nontrivial");
          return;
        }
        Filter F;
        F.min = parse_ideal(amb, s.at("filter_min").get<std::string>());
        GroupElement h0 = amb.parse_element(s.at("character_shift").get<std::string>());
        GroupElement h = amb.parse_element(s.at("test_shift").get<std::string>());
        Ideal X = parse_ideal(amb, s.at("test_ideal").get<std::string>());
        ExtendedCharacter chi{F, h0};
        ExtendedCharacter chig{F, multiply(h0, g)};
        CertifiedValue a = ext_char_eval_certified(amb, chi, h, X);
        CertifiedValue b = ext_char_eval_certified(amb, chig, h, X);
        bool moved = (a == CertifiedValue::CertainOne && b == CertifiedValue::CertainZero) ||
                     (a == CertifiedValue::CertainZero && b == CertifiedValue::CertainOne);
        check(path, moved, "moved witness does not separate under replay");
      });
    }
  }

  void local_boundary() {
    if (!d.contains("local_boundary")) return;
    const Json& jl = d.at("local_boundary");
    if (jl.at("kind").get<std::string>() != "Witness") return;
    guarded("local_boundary", [&] {
      GroupElement x = amb.parse_element(jl.at("x").get<std::string>());
      GroupElement p = amb.parse_element(jl.at("p").get<std::string>());
      GroupElement q = amb.parse_element(jl.at("q").get<std::string>());
      GroupElement gp = amb.parse_element(jl.at("gprime").get<std::string>());
      Ideal delta = parse_ideal(amb, jl.at("delta").get<std::string>());
      Ideal xP = left_multiply(amb, x, Ideal::full(amb));
      Ideal xpP = left_multiply(amb, multiply(x, p), Ideal::full(amb));
      Ideal xqP = left_multiply(amb, multiply(x, q), Ideal::full(amb));
      bool ok = amb.in_p(x) && amb.in_p(p) && amb.in_p(q);
      ok = ok && delta == xP;
      ok = ok && gp == multiply(multiply(x, invert(p)), invert(x));
      ok = ok && ideal_subset(amb, xpP, xP); // compression direction
      ok = ok && intersect(amb, xpP, xqP).is_empty(); // strictness
      check("local_boundary", ok, "strict-compression witness does not replay");
    });
  }
};

} // namespace

VerifyResult verify_dossier(const Json& d) {
  VerifyResult out;
  for (const std::string& err : validate_dossier_structure(d)) out.add("schema", false, err);
  if (!out.ok) return out;
  if (d.at("dossier_version").get<int>() != kDossierVersion)
    out.add("dossier_version", false, "unsupported dossier version");
  if (d.at("tool_version").get<std::string>() != STONEWORK_VERSION)
    out.add("tool_version", true, "version differs from this tool (witnesses replayed anyway)");
  if (!out.ok) return out;

  AnalyzeOptions o;
  o.family_id = d.at("family").get<std::string>();
  if (d.contains("custom_definition")) {
    o.custom_definition = d.at("custom_definition");
    o.family_id = "custom";
  }
  const Json& params = d.at("parameters");
  o.depth = params.at("depth").get<int>();
  o.seed = params.at("seed").get<unsigned long long>();

  try {
    Ambient amb = ambient_from_options(o);
    IdealFamily fam = closure_to_depth(amb, o.depth);
    Replayer r{d, std::move(amb), std::move(fam), out};
    r.ideals();
    r.independence();
    r.conditions();
    r.hull();
    r.spectrum();
    r.checklist();
    r.local_boundary();
  } catch (const std::exception& e) {
    out.add("dossier", false, std::string("replay aborted: ") + e.what());
  }
  return out;
}

} // namespace stonework
