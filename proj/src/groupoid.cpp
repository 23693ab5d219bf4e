#include "stonework/groupoid.hpp"

#include <algorithm>
#include <random>

#include "stonework/errors.hpp"

namespace stonework {

bool ext_char_eval(const Ambient& amb, const ExtendedCharacter& chi, const GroupElement& h,
                   const Ideal& X) {
  Ideal Y = meet_with_p(amb, multiply(chi.shift, h), X);
  if (Y.is_empty()) return false;
  return ideal_subset(amb, chi.base.min, Y);
}

CertifiedValue ext_char_eval_certified(const Ambient& amb, const ExtendedCharacter& chi,
                                       const GroupElement& h, const Ideal& X) {
  Ideal Y = meet_with_p(amb, multiply(chi.shift, h), X);
  if (Y.is_empty() || intersect(amb, chi.base.min, Y).is_empty())
    return CertifiedValue::CertainZero;
  if (ideal_subset(amb, chi.base.min, Y)) return CertifiedValue::CertainOne;
  return CertifiedValue::Unknown;
}

bool ext_char_equal(const Ambient& amb, const IdealFamily& fam, const ExtendedCharacter& a,
                    const ExtendedCharacter& b, int radius) {
  for (const GroupElement& h : amb.group_sphere(radius))
    for (const Ideal& X : fam.ideals) {
      if (X.is_empty()) continue;
      if (ext_char_eval(amb, a, h, X) != ext_char_eval(amb, b, h, X)) return false;
    }
  return true;
}

bool arrow_valid(const Ambient& amb, const ArrowA& a) {
  return !a.s.is_zero() && ideal_subset(amb, a.F.min, a.s.domain());
}

Filter s_dot_chi(const Ambient& amb, const IdealFamily& fam, const PartialIsometry& s,
                 const Filter& F) {
  if (s.is_zero() || !ideal_subset(amb, F.min, s.domain()))
    throw ComposabilityError("s.chi requires the source projection of s to lie in the filter");
  Ideal moved = meet_with_p(amb, s.shift(), F.min);
  Filter out;
  out.min = moved;
  for (size_t i = 0; i < fam.ideals.size(); ++i)
    if (!fam.ideals[i].is_empty() && ideal_subset(amb, moved, fam.ideals[i]))
      out.trace.push_back(static_cast<int>(i));
  return out;
}

bool arrow_equiv(const Ambient& amb, const ArrowA& a1, const ArrowA& a2) {
  if (!(a1.F == a2.F)) return false;
  // testing the least member suffices: any equalizing member restricts to it
  const Ideal& X = a1.F.min;
  Ideal r1 = intersect(amb, X, a1.s.domain());
  Ideal r2 = intersect(amb, X, a2.s.domain());
  if (!(r1 == r2)) return false;
  return r1.is_empty() || a1.s.shift() == a2.s.shift();
}

ArrowB phi_map(const Ambient& amb, const ArrowA& a) {
  if (!arrow_valid(amb, a)) throw UsageError("phi_map: invalid arrow");
  GroupElement g = g_map(a.s);
  return ArrowB{ExtendedCharacter{a.F, invert(g)}, g};
}

bool arrows_composable_a(const Ambient& amb, const IdealFamily& fam, const ArrowA& a1,
                         const ArrowA& a2) {
  if (!arrow_valid(amb, a1) || !arrow_valid(amb, a2)) return false;
  Filter moved = s_dot_chi(amb, fam, a2.s, a2.F);
  return moved == a1.F;
}

bool arrows_composable_b(const Ambient& amb, const IdealFamily& fam, const ArrowB& b1,
                         const ArrowB& b2, int radius) {
  // d(b1) = r(b2): (chi1 . g1) must agree with chi2
  ExtendedCharacter d1{b1.chi.base, multiply(b1.chi.shift, b1.g)};
  return ext_char_equal(amb, fam, d1, b2.chi, radius);
}

ArrowA compose_arrows_a(const Ambient& amb, const IdealFamily& fam, const ArrowA& a1,
                        const ArrowA& a2) {
  if (!arrows_composable_a(amb, fam, a1, a2)) throw ComposabilityError("arrows do not compose");
  return ArrowA{compose(amb, a1.s, a2.s), a2.F};
}

ArrowB compose_arrows_b(const ArrowB& b1, const ArrowB& b2) {
  return ArrowB{b1.chi, multiply(b1.g, b2.g)};
}

std::vector<ArrowA> enumerate_arrows(const Ambient& amb, const IdealFamily& fam,
                                     const std::vector<PartialIsometry>& hull,
                                     const std::vector<Filter>& filters) {
  (void)fam;
  std::vector<ArrowA> out;
  for (const PartialIsometry& s : hull) {
    if (s.is_zero()) continue;
    for (const Filter& F : filters)
      if (ideal_subset(amb, F.min, s.domain())) out.push_back(ArrowA{s, F});
  }
  return out;
}

// ---------------------------------------------------------------------------
// probes

G0Result g0_probe(const Ambient& amb, const IdealFamily& fam, const GroupElement& g) {
  G0Result out;
  for (bool inverse : {false, true}) {
    GroupElement side = inverse ? invert(g) : g;
    Ideal gP = meet_with_p(amb, side, Ideal::full(amb)); // P n (g.P)
    for (const Ideal& X : fam.ideals) {
      if (X.is_empty()) continue;
      // (g.P) n X = (P n g.P) n X since X <= P
      if (gP.is_empty() || intersect(amb, gP, X).is_empty()) {
        out.kind = G0Result::Kind::NotInG0;
        out.witness = X;
        out.inverse_side = inverse;
        return out;
      }
    }
  }
  out.kind = G0Result::Kind::InG0ToBudget;
  return out;
}

TopFreeResult top_free_probe(const Ambient& amb, const IdealFamily& fam,
                             const std::vector<Filter>& boundary, const GroupElement& g,
                             int radius) {
  TopFreeResult out;
  std::vector<GroupElement> shifts = amb.group_sphere(radius);
  for (const Filter& F : boundary) {
    for (const GroupElement& h0 : shifts) {
      ExtendedCharacter chi{F, h0};
      ExtendedCharacter chig{F, multiply(h0, g)}; // chi . g
      for (const GroupElement& h : shifts) {
        for (const Ideal& X : fam.ideals) {
          if (X.is_empty()) continue;
          CertifiedValue a = ext_char_eval_certified(amb, chi, h, X);
          CertifiedValue b = ext_char_eval_certified(amb, chig, h, X);
          bool moved = (a == CertifiedValue::CertainOne && b == CertifiedValue::CertainZero) ||
                       (a == CertifiedValue::CertainZero && b == CertifiedValue::CertainOne);
          if (moved) {
            out.moved = true;
            out.F = F;
            out.h0 = h0;
            out.h = h;
            out.X = X;
            return out;
          }
        }
      }
    }
  }
  return out;
}

LocalBoundaryResult local_boundary_witness(const Ambient& amb, const IdealFamily& fam,
                                           const BasicOpen& U,
                                           const std::vector<Filter>& boundary) {
  LocalBoundaryResult out;
  // need a disjoint pair of principal ideals; reversible families have none
  OreReversibility rev = ore_reversibility_probe(amb, 3);
  if (rev.reversible.status != ConditionReport::Status::Fails) {
    out.kind = LocalBoundaryResult::Kind::NotApplicableReversible;
    return out;
  }
  GroupElement p = amb.parse_element(rev.reversible.witness.at("p"));
  GroupElement q = amb.parse_element(rev.reversible.witness.at("q"));

  // boundary filter inside U
  const Filter* inside = nullptr;
  for (const Filter& F : boundary) {
    if (!filter_contains_index(F, U.required)) continue;
    bool ok = true;
    for (int e : U.excluded)
      if (filter_contains_index(F, e)) {
        ok = false;
        break;
      }
    if (ok) {
      inside = &F;
      break;
    }
  }
  if (!inside) throw UsageError("local_boundary_witness: U misses the boundary approximation");

  // Xtilde = required n (separating members for each excluded ideal)
  Ideal xt = fam.ideals[static_cast<size_t>(U.required)];
  for (int e : U.excluded) {
    const Ideal& Xi = fam.ideals[static_cast<size_t>(e)];
    if (Xi.is_empty()) continue;
    bool found = false;
    for (int j : inside->trace) {
      const Ideal& cand = fam.ideals[static_cast<size_t>(j)];
      if (intersect(amb, cand, Xi).is_empty()) {
        xt = intersect(amb, xt, cand);
        found = true;
        break;
      }
    }
    if (!found)
      throw UsageError("local_boundary_witness: boundary filter fails to separate an excluded ideal");
  }
  auto x = min_element(amb, xt);
  if (!x) throw UsageError("local_boundary_witness: empty restriction");

  out.kind = LocalBoundaryResult::Kind::Witness;
  out.x = *x;
  out.p = p;
  out.q = q;
  out.gprime = multiply(multiply(*x, invert(p)), invert(*x));
  out.delta = left_multiply(amb, *x, Ideal::full(amb));
  return out;
}

ChecklistResult kirchberg_checklist(const Ambient& amb, const IdealFamily& fam,
                                    const std::vector<Filter>& boundary, int bound,
                                    unsigned long long seed, size_t sample_count) {
  ChecklistResult out;
  out.nontrivial = false;
  for (const GroupElement& g : amb.generators())
    if (!g.is_identity()) out.nontrivial = true;

  if (amb.meta.amenable_action) {
    out.amenability_status = "ASSUMED";
    out.amenability_citation = amb.meta.amenable_action->citation;
  } else {
    out.amenability_status = "UNKNOWN";
  }

  // deterministic seeded sample of nontrivial sphere elements
  std::vector<GroupElement> sphere = amb.group_sphere(bound);
  std::vector<GroupElement> candidates;
  for (const GroupElement& g : sphere)
    if (!g.is_identity()) candidates.push_back(g);
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  if (candidates.size() > sample_count) candidates.resize(sample_count);

  bool any_in_g0 = false;
  bool any_fixed = false;
  int radius = std::max(2, std::min(bound, 3));
  for (const GroupElement& g : candidates) {
    G0Result r = g0_probe(amb, fam, g);
    out.g0_samples.emplace_back(g, r);
    if (r.kind != G0Result::Kind::InG0ToBudget) continue;
    any_in_g0 = true;
    TopFreeResult t = top_free_probe(amb, fam, boundary, g, radius);
    out.topfree_samples.emplace_back(g, t);
    if (!t.moved && !any_fixed) {
      any_fixed = true;
      out.fixed_g = g;
    }
  }
  out.evidence = !any_in_g0 ? ChecklistResult::Evidence::G0SampledTrivial
                            : (any_fixed ? ChecklistResult::Evidence::FixedFound
                                         : ChecklistResult::Evidence::AllSampledMoved);

  if (!out.nontrivial) {
    out.verdict = ChecklistResult::Verdict::Fails;
    out.reason = "P is the trivial semigroup";
    return out;
  }
  if (out.amenability_status != "ASSUMED") {
    out.verdict = ChecklistResult::Verdict::Inconclusive;
    out.reason = "amenability of the boundary action is not on file";
    return out;
  }
  if (any_fixed) {
    if (amb.meta.topfree == CatalogMeta::TopFree::CitedFails) {
      out.verdict = ChecklistResult::Verdict::Fails;
      out.reason = "G_0 does not act topologically freely: " + amb.meta.topfree_citation;
    } else {
      out.verdict = ChecklistResult::Verdict::Inconclusive;
      out.reason = "no moved witness for a sampled member of G_0";
    }
    return out;
  }
  out.verdict = ChecklistResult::Verdict::Passes;
  out.reason = !any_in_g0
                   ? "every sampled g was refuted from G_0; the trivial group acts freely"
                   : "all sampled members of G_0 moved a boundary character";
  return out;
}

} // namespace stonework
