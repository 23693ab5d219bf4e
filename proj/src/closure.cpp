#include "stonework/closure.hpp"

#include <algorithm>
#include <map>

#include "stonework/errors.hpp"

namespace stonework {

int IdealFamily::index_of(const Ideal& X) const {
  for (size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i] == X) return static_cast<int>(i);
  return -1;
}

namespace {

struct Builder {
  const Ambient& amb;
  const ClosureCaps& caps;
  std::vector<Ideal> ideals;
  std::vector<std::string> provenance;
  std::map<std::string, size_t> seen; // canonical print -> index
  bool budget_hit = false;

  // returns true if the ideal is new
  bool add(const Ideal& X, const std::string& prov) {
    std::string key = print_ideal(amb, X);
    auto it = seen.find(key);
    if (it != seen.end()) return false;
    if (ideals.size() >= caps.max_ideals) {
      budget_hit = true;
      return false;
    }
    seen.emplace(key, ideals.size());
    ideals.push_back(X);
    provenance.push_back(prov);
    return true;
  }
};

} // namespace

IdealFamily closure_to_depth(const Ambient& amb, int depth, const ClosureCaps& caps) {
  if (depth < 0) throw UsageError("closure depth must be >= 0");
  Builder b{amb, caps};
  b.add(Ideal::empty(), "empty");
  b.add(Ideal::full(amb), "P");

  const auto& gens = amb.generators();
  std::vector<std::string> gen_names;
  for (const auto& g : gens) gen_names.push_back(amb.print_element(g));

  std::vector<size_t> frontier{1}; // index of P
  std::optional<int> stabilized;
  for (int round = 1; round <= depth; ++round) {
    std::vector<size_t> next;
    for (size_t idx : frontier) {
      Ideal X = b.ideals[idx];
      std::string prov = b.provenance[idx];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Ideal m = left_multiply(amb, gens[gi], X);
        if (b.add(m, prov + ";mul " + gen_names[gi])) next.push_back(b.ideals.size() - 1);
        Ideal pre = left_preimage(amb, gens[gi], X);
        if (b.add(pre, prov + ";pre " + gen_names[gi])) next.push_back(b.ideals.size() - 1);
      }
    }
    if (next.empty() && !stabilized) {
      stabilized = round;
      break;
    }
    frontier = std::move(next);
  }

  // pairwise-intersection saturation to a fixed point
  bool grew = true;
  while (grew && !b.budget_hit) {
    grew = false;
    size_t n = b.ideals.size();
    for (size_t i = 1; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        Ideal m = intersect(amb, b.ideals[i], b.ideals[j]);
        if (b.add(m, "cap(" + b.provenance[i] + "," + b.provenance[j] + ")")) grew = true;
      }
  }

  // would one more round add anything?
  bool truncated = b.budget_hit || amb.is_custom();
  if (!truncated) {
    for (size_t idx = 1; idx < b.ideals.size() && !truncated; ++idx) {
      for (size_t gi = 0; gi < gens.size() && !truncated; ++gi) {
        Ideal m = left_multiply(amb, gens[gi], b.ideals[idx]);
        if (b.seen.find(print_ideal(amb, m)) == b.seen.end()) truncated = true;
        Ideal pre = left_preimage(amb, gens[gi], b.ideals[idx]);
        if (b.seen.find(print_ideal(amb, pre)) == b.seen.end()) truncated = true;
      }
    }
  }

  // canonical order: empty first, then family order
  std::vector<size_t> order(b.ideals.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    return Ideal::less(b.ideals[i], b.ideals[j]);
  });

  IdealFamily fam;
  fam.depth = depth;
  fam.truncated = truncated;
  fam.budget_hit = b.budget_hit;
  if (!truncated) fam.stabilized_at = stabilized.value_or(depth);
  for (size_t i : order) {
    fam.ideals.push_back(b.ideals[i]);
    fam.provenance.push_back(b.provenance[i]);
  }
  return fam;
}

// ---------------------------------------------------------------------------
// provenance replay

namespace {

Ideal replay_rec(const Ambient& amb, const std::string& s, size_t lo, size_t hi);

// splits "cap(A,B)" arguments at the top level
Ideal replay_cap(const Ambient& amb, const std::string& s, size_t lo, size_t hi) {
  int level = 0;
  for (size_t i = lo; i < hi; ++i) {
    if (s[i] == '(') ++level;
    else if (s[i] == ')') --level;
    else if (s[i] == ',' && level == 0)
      return intersect(amb, replay_rec(amb, s, lo, i), replay_rec(amb, s, i + 1, hi));
  }
  throw UsageError("bad provenance: " + s.substr(lo, hi - lo));
}

Ideal replay_rec(const Ambient& amb, const std::string& s, size_t lo, size_t hi) {
  std::string_view v(s.data() + lo, hi - lo);
  if (v == "P") return Ideal::full(amb);
  if (v == "empty") return Ideal::empty();
  if (v.rfind("cap(", 0) == 0 && v.back() == ')') return replay_cap(amb, s, lo + 4, hi - 1);
  // otherwise the last ";op gen" suffix
  size_t semi = s.rfind(';', hi - 1);
  if (semi == std::string::npos || semi < lo) throw UsageError("bad provenance: " + std::string(v));
  std::string op = s.substr(semi + 1, 3);
  GroupElement g = amb.parse_element(s.substr(semi + 5, hi - (semi + 5)));
  Ideal base = replay_rec(amb, s, lo, semi);
  if (op == "mul") return left_multiply(amb, g, base);
  if (op == "pre") return left_preimage(amb, g, base);
  throw UsageError("bad provenance op: " + op);
}

} // namespace

Ideal replay_provenance(const Ambient& amb, const std::string& prov) {
  return replay_rec(amb, prov, 0, prov.size());
}

// ---------------------------------------------------------------------------
// independence and atoms

IndependenceVerdict independence_check(const Ambient& amb, const IdealFamily& fam) {
  IndependenceVerdict out;
  bool unknown = false;
  for (const Ideal& X : fam.ideals) {
    if (X.is_empty()) continue;
    std::vector<Ideal> subs;
    for (const Ideal& Y : fam.ideals) {
      if (Y.is_empty() || Y == X) continue;
      if (ideal_subset(amb, Y, X)) subs.push_back(Y);
    }
    if (subs.empty()) continue;
    CoverageWitness w = coverage_witness(amb, X, subs);
    if (w.status == CoverageWitness::Status::Covered) {
      // prune to a minimal covering list for a tidy witness
      std::vector<Ideal> parts = subs;
      for (size_t i = 0; i < parts.size();) {
        std::vector<Ideal> rest = parts;
        rest.erase(rest.begin() + static_cast<long>(i));
        if (!rest.empty() &&
            coverage_witness(amb, X, rest).status == CoverageWitness::Status::Covered)
          parts = std::move(rest);
        else
          ++i;
      }
      out.status = IndependenceVerdict::Status::Dependent;
      out.witness = X;
      out.witness_parts = parts;
      return out;
    }
    if (w.status == CoverageWitness::Status::UnknownTruncated) unknown = true;
  }
  out.status = unknown ? IndependenceVerdict::Status::UnknownTruncated
                       : IndependenceVerdict::Status::Independent;
  return out;
}

std::vector<Atom> orthogonal_atoms(const Ambient& amb, const std::vector<Ideal>& F) {
  for (size_t i = 0; i < F.size(); ++i)
    for (size_t j = 0; j < F.size(); ++j) {
      if (i == j) continue;
      if (F[i] == F[j]) throw UsageError("orthogonal_atoms: duplicate members");
      Ideal m = intersect(amb, F[i], F[j]);
      bool found = m.is_empty();
      for (const Ideal& Y : F)
        if (Y == m) found = true;
      if (!found && !amb.is_custom())
        throw UsageError("orthogonal_atoms: family not closed under intersection");
    }
  std::vector<Atom> out;
  for (const Ideal& e : F) {
    if (e.is_empty()) continue;
    Atom a;
    a.ideal = e;
    for (const Ideal& e2 : F)
      if (!e2.is_empty() && e2 != e && ideal_subset(amb, e2, e)) a.proper_subs.push_back(e2);
    CoverageWitness w = coverage_witness(amb, e, a.proper_subs);
    a.nonempty = w.status == CoverageWitness::Status::Found;
    a.witness = w.element;
    out.push_back(std::move(a));
  }
  return out;
}

} // namespace stonework
