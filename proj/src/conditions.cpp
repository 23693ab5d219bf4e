#include "stonework/conditions.hpp"

#include <algorithm>

#include "stonework/errors.hpp"

namespace stonework {

std::string status_name(ConditionReport::Status s) {
  switch (s) {
    case ConditionReport::Status::HoldsProven: return "HoldsProven";
    case ConditionReport::Status::HoldsToBudget: return "HoldsToBudget";
    case ConditionReport::Status::Fails: return "Fails";
    case ConditionReport::Status::UnknownToBudget: return "UnknownToBudget";
  }
  return "?";
}

PartialIsometry compression_descriptor(const Ambient& amb, const GroupElement& g) {
  Ideal dom = meet_with_p(amb, invert(g), Ideal::full(amb));
  return PartialIsometry::make(amb, std::move(dom), g);
}

// ---------------------------------------------------------------------------
// decomposition search

namespace {

long long max_generator_norm(const Ambient& amb) {
  long long m = 1;
  for (const auto& g : amb.generators()) m = std::max(m, g.norm_length());
  return m;
}

bool norm_metric_applies(const Ambient& amb) {
  return amb.payload_kind() != FamilyKind::AffineInts;
}

struct Search {
  const Ambient& amb;
  const GroupElement& target;
  const PartialIsometry& compression;
  std::vector<PartialIsometry> letters;
  long long gen_norm;
  bool use_norm;
  HullWord current;

  bool dfs(const PartialIsometry& acc, int remaining) {
    if (remaining == 0) return !acc.is_zero() && acc == compression;
    if (acc.is_zero()) return false;
    if (use_norm) {
      GroupElement rest = multiply(invert(acc.shift()), target);
      if (rest.norm_length() > gen_norm * remaining) return false;
    }
    for (size_t li = 0; li < letters.size(); ++li) {
      current.push_back(HullLetter{static_cast<int>(li % (letters.size() / 2)),
                                   li >= letters.size() / 2});
      if (dfs(compose(amb, acc, letters[li]), remaining - 1)) return true;
      current.pop_back();
    }
    return false;
  }
};

} // namespace

ToeplitzOutcome toeplitz_decompose(const Ambient& amb, const GroupElement& g, int budget) {
  if (budget < 1) throw UsageError("toeplitz budget must be >= 1");
  ToeplitzOutcome out;
  PartialIsometry compression = compression_descriptor(amb, g);
  if (compression.is_zero()) {
    out.kind = ToeplitzOutcome::Kind::ZeroCase;
    return out;
  }
  Search s{amb, g, compression, {}, max_generator_norm(amb), norm_metric_applies(amb), {}};
  for (const auto& gen : amb.generators()) s.letters.push_back(PartialIsometry::generator(amb, gen));
  for (const auto& gen : amb.generators())
    s.letters.push_back(adjoint(amb, PartialIsometry::generator(amb, gen)));
  for (int len = 0; len <= budget; ++len) {
    s.current.clear();
    if (s.dfs(PartialIsometry::one(amb), len)) {
      out.kind = ToeplitzOutcome::Kind::Decomposition;
      out.word = s.current;
      return out;
    }
  }
  out.kind = ToeplitzOutcome::Kind::UnknownToBudget;
  return out;
}

// ---------------------------------------------------------------------------
// constructive family decompositions

std::optional<std::pair<GroupElement, GroupElement>> ql_decomposition(const Ambient& amb,
                                                                      const GroupElement& g) {
  Ideal m = meet_with_p(amb, g, Ideal::full(amb)); // P n gP
  if (m.is_empty()) return std::nullopt;
  auto p = principal_generator(amb, m);
  if (!p) return std::nullopt;
  GroupElement q = multiply(invert(g), *p);
  if (!amb.in_p(q)) return std::nullopt;
  return std::make_pair(*p, q); // g = p q^{-1}, E_P l_g E_P = V_p V_q*
}

std::optional<std::pair<GroupElement, GroupElement>> ore_decomposition(const Ambient& amb,
                                                                       const GroupElement& g) {
  if (amb.is_custom()) {
    // bounded search over the custom P-sphere
    for (const GroupElement& p : amb.semigroup_sphere(6)) {
      GroupElement q = multiply(p, g);
      if (amb.in_p(q)) return std::make_pair(p, q);
    }
    return std::nullopt;
  }
  switch (amb.kind()) {
    case FamilyKind::Cone: {
      Vec p(g.as_vec().size()), q(g.as_vec().size());
      for (size_t i = 0; i < p.size(); ++i) {
        p[i] = std::max(-g.as_vec()[i], 0LL);
        q[i] = std::max(g.as_vec()[i], 0LL);
      }
      return std::make_pair(GroupElement::vec(p), GroupElement::vec(q));
    }
    case FamilyKind::Numerical: {
      // p, q in <gens> with q - p = g; use multiples of the least generator
      long long a = amb.generators().front().as_int();
      long long k = 0;
      while (!amb.numerical().member(k * a + g.as_int())) ++k;
      return std::make_pair(GroupElement::integer(k * a), GroupElement::integer(k * a + g.as_int()));
    }
    case FamilyKind::AffineInts: {
      const Affine& x = g.as_affine();
      long long w = x.scale.den(), tau = x.shift.den();
      // p = (0, w*tau), q = p*g; then p^{-1} q = g with p, q in P
      GroupElement p = GroupElement::affine(Rational(0), Rational(checked_mul(w, tau)));
      GroupElement q = multiply(p, g);
      if (!amb.in_p(q)) return std::nullopt;
      return std::make_pair(p, q);
    }
    case FamilyKind::FreeProduct: {
      // g = p^{-1} q iff the reduced word reads negatives-then-positives
      const Word& w = g.as_word();
      size_t i = 0;
      Word negpart, pospart;
      while (i < w.size() && w[i].exp < 0) negpart.push_back(w[i++]);
      while (i < w.size() && w[i].exp > 0) pospart.push_back(w[i++]);
      if (i != w.size()) return std::nullopt;
      Word p;
      for (auto it = negpart.rbegin(); it != negpart.rend(); ++it)
        p.push_back(Run{it->gen, -it->exp});
      return std::make_pair(GroupElement::word(p), GroupElement::word(pospart));
    }
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// probes

ToeplitzProbe toeplitz_probe(const Ambient& amb, int bound, int budget, int certificate_radius) {
  ToeplitzProbe out;
  out.report.condition = "toeplitz";
  out.report.bound = bound;
  bool unknown = false;
  GroupElement unknown_g;
  std::vector<GroupElement> sphere = amb.group_sphere(bound);
  for (const GroupElement& g : sphere) {
    ToeplitzOutcome o = toeplitz_decompose(amb, g, budget);
    if (o.kind == ToeplitzOutcome::Kind::UnknownToBudget && !unknown) {
      unknown = true;
      unknown_g = g;
    }
    if (g.norm_length() <= certificate_radius || amb.payload_kind() == FamilyKind::AffineInts) {
      if (out.certificates.size() < 64) out.certificates.emplace_back(g, o);
    }
  }
  if (unknown) {
    out.report.status = ConditionReport::Status::UnknownToBudget;
    out.report.witness["undecided_g"] = amb.print_element(unknown_g);
  } else {
    out.report.status = ConditionReport::Status::HoldsToBudget;
  }
  return out;
}

ConditionReport quasi_lattice_probe(const Ambient& amb, int bound) {
  ConditionReport r;
  r.condition = "ql";
  r.bound = bound;

  for (const GroupElement& g : amb.group_sphere(bound)) {
    if (!g.is_identity() && amb.in_p(g) && amb.in_p(invert(g))) {
      r.status = ConditionReport::Status::Fails;
      r.witness["kind"] = "QL0";
      r.witness["g"] = amb.print_element(g);
      return r;
    }
    Ideal m = meet_with_p(amb, g, Ideal::full(amb));
    if (!m.is_empty() && !principal_generator(amb, m) && !amb.is_custom()) {
      r.status = ConditionReport::Status::Fails;
      r.witness["kind"] = "QL1";
      r.witness["g"] = amb.print_element(g);
      r.witness["meet"] = print_ideal(amb, m);
      return r;
    }
  }
  std::vector<GroupElement> ps = amb.semigroup_sphere(bound);
  for (const GroupElement& p : ps)
    for (const GroupElement& q : ps) {
      Ideal pi = left_multiply(amb, p, Ideal::full(amb));
      Ideal qi = left_multiply(amb, q, Ideal::full(amb));
      Ideal m = intersect(amb, pi, qi);
      if (!m.is_empty() && !principal_generator(amb, m) && !amb.is_custom()) {
        r.status = ConditionReport::Status::Fails;
        r.witness["kind"] = "QL2";
        r.witness["p"] = amb.print_element(p);
        r.witness["q"] = amb.print_element(q);
        r.witness["meet"] = print_ideal(amb, m);
        return r;
      }
    }

  if (amb.kind() == FamilyKind::Cone) {
    r.status = ConditionReport::Status::HoldsProven;
    r.argument = "componentwise maximum realizes every intersection as a principal ideal";
  } else if (amb.is_custom()) {
    r.status = ConditionReport::Status::UnknownToBudget;
  } else {
    r.status = ConditionReport::Status::HoldsToBudget;
  }
  return r;
}

OreReversibility ore_reversibility_probe(const Ambient& amb, int bound) {
  OreReversibility out;
  out.ore.condition = "ore";
  out.ore.bound = bound;
  out.reversible.condition = "reversible";
  out.reversible.bound = bound;

  // Ore: every bounded g decomposes as p^{-1} q
  bool ore_unknown = false;
  for (const GroupElement& g : amb.group_sphere(bound)) {
    auto d = ore_decomposition(amb, g);
    if (d) {
      if (multiply(invert(d->first), d->second) == g) continue;
      throw std::logic_error("ore_decomposition produced a wrong pair");
    }
    if (amb.payload_kind() == FamilyKind::FreeProduct && !amb.is_custom()) {
      out.ore.status = ConditionReport::Status::Fails;
      out.ore.argument = "the reduced word of g is not of the form (negatives)(positives)";
      out.ore.witness["g"] = amb.print_element(g);
      break;
    }
    ore_unknown = true;
  }
  if (out.ore.status != ConditionReport::Status::Fails) {
    if (ore_unknown)
      out.ore.status = ConditionReport::Status::UnknownToBudget;
    else if (amb.kind() == FamilyKind::Cone || amb.kind() == FamilyKind::Numerical) {
      out.ore.status = ConditionReport::Status::HoldsProven;
      out.ore.argument = "abelian ambient group: g = (-g_-) + g_+ with both parts in P";
    } else if (amb.kind() == FamilyKind::AffineInts) {
      out.ore.status = ConditionReport::Status::HoldsProven;
      out.ore.argument = "common-denominator decomposition g = (0,wt)^{-1} ((0,wt)g)";
    } else {
      out.ore.status = ConditionReport::Status::HoldsToBudget;
    }
  }

  // reversibility: hunt for a disjoint pair of principal right ideals
  std::vector<GroupElement> ps = amb.semigroup_sphere(bound);
  bool found = false;
  for (size_t i = 0; i < ps.size() && !found; ++i)
    for (size_t j = i + 1; j < ps.size() && !found; ++j) {
      Ideal pi = left_multiply(amb, ps[i], Ideal::full(amb));
      Ideal qi = left_multiply(amb, ps[j], Ideal::full(amb));
      if (intersect(amb, pi, qi).is_empty()) {
        out.reversible.status = ConditionReport::Status::Fails;
        out.reversible.witness["p"] = amb.print_element(ps[i]);
        out.reversible.witness["q"] = amb.print_element(ps[j]);
        found = true;
      }
    }
  if (!found) {
    if (amb.kind() == FamilyKind::Cone || amb.kind() == FamilyKind::Numerical) {
      out.reversible.status = ConditionReport::Status::HoldsProven;
      out.reversible.argument = "abelian cones and numerical tails always intersect";
    } else {
      out.reversible.status = ConditionReport::Status::HoldsToBudget;
    }
  }
  return out;
}

} // namespace stonework
