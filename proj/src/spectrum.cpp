#include "stonework/spectrum.hpp"

#include <algorithm>

#include "stonework/errors.hpp"

namespace stonework {

bool filter_contains_index(const Filter& F, int idx) {
  return std::binary_search(F.trace.begin(), F.trace.end(), idx);
}

Filter filter_of_member(const Ambient& amb, const IdealFamily& fam, const Ideal& min) {
  if (min.is_empty()) throw UsageError("a filter cannot be generated by the empty ideal");
  Filter F;
  F.min = min;
  for (size_t i = 0; i < fam.ideals.size(); ++i)
    if (!fam.ideals[i].is_empty() && ideal_subset(amb, min, fam.ideals[i]))
      F.trace.push_back(static_cast<int>(i));
  return F;
}

std::vector<Filter> enumerate_filters(const Ambient& amb, const IdealFamily& fam, size_t cap) {
  if (fam.nonempty_count() > cap)
    throw BudgetError("filter enumeration cap exceeded: " + std::to_string(fam.nonempty_count()) +
                      " > " + std::to_string(cap));
  std::vector<Filter> out;
  for (const Ideal& X : fam.ideals)
    if (!X.is_empty()) out.push_back(filter_of_member(amb, fam, X));
  // fam.ideals is canonically sorted, so this order is deterministic
  return out;
}

Filter principal_filter_of(const Ambient& amb, const IdealFamily& fam, const GroupElement& x) {
  if (!amb.in_p(x)) throw UsageError("principal filters are indexed by elements of P");
  Filter F;
  // min = least member containing x (the family is intersection closed)
  int min_idx = -1;
  for (size_t i = 0; i < fam.ideals.size(); ++i) {
    if (fam.ideals[i].is_empty()) continue;
    if (ideal_contains(amb, fam.ideals[i], x)) {
      F.trace.push_back(static_cast<int>(i));
      if (min_idx < 0 || ideal_subset(amb, fam.ideals[i], fam.ideals[static_cast<size_t>(min_idx)]))
        min_idx = static_cast<int>(i);
    }
  }
  if (min_idx < 0) throw UsageError("no family member contains the given point");
  F.min = fam.ideals[static_cast<size_t>(min_idx)];
  return F;
}

bool is_relative_ultrafilter(const Ambient& amb, const IdealFamily& fam, const Filter& F) {
  for (size_t i = 0; i < fam.ideals.size(); ++i) {
    const Ideal& X = fam.ideals[i];
    if (X.is_empty() || filter_contains_index(F, static_cast<int>(i))) continue;
    bool separated = false;
    for (int j : F.trace)
      if (intersect(amb, X, fam.ideals[static_cast<size_t>(j)]).is_empty()) {
        separated = true;
        break;
      }
    if (!separated) return false;
  }
  return true;
}

std::vector<Filter> boundary_approx(const Ambient& amb, const IdealFamily& fam) {
  std::vector<Filter> all = enumerate_filters(amb, fam);
  std::vector<Filter> ultra;
  for (const Filter& F : all)
    if (is_relative_ultrafilter(amb, fam, F)) ultra.push_back(F);

  std::vector<Filter> out;
  for (const Filter& F : all) {
    // every basic open around F contains an ultrafilter; the binding opens are
    // U(X; fam \ F) for each member X of F
    bool in_closure = true;
    for (int xi : F.trace) {
      bool witnessed = false;
      for (const Filter& U : ultra) {
        if (!filter_contains_index(U, xi)) continue;
        bool inside = std::includes(F.trace.begin(), F.trace.end(), U.trace.begin(), U.trace.end());
        if (inside) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        in_closure = false;
        break;
      }
    }
    if (in_closure) out.push_back(F);
  }
  return out;
}

static Filter locate_or_margin(const Ambient& amb, const IdealFamily& fam, const Ideal& gen,
                               const IdealFamily* margin_fam, const char* what) {
  if (gen.is_empty()) throw UsageError(std::string(what) + ": transported generator is empty");
  if (fam.index_of(gen) >= 0) return filter_of_member(amb, fam, gen);
  if (margin_fam && margin_fam->index_of(gen) >= 0) return filter_of_member(amb, fam, gen);
  throw DepthMarginError(std::string(what) + ": ideal " + print_ideal(amb, gen) +
                         " lies outside the explored family (increase depth or margin)");
}

Filter act_forward(const Ambient& amb, const IdealFamily& fam, const GroupElement& p,
                   const Filter& F, const IdealFamily* margin_fam) {
  if (!amb.in_p(p)) throw UsageError("act_forward: element is not in P");
  Ideal pm = left_multiply(amb, p, F.min);
  return locate_or_margin(amb, fam, pm, margin_fam, "act_forward");
}

BackwardResult act_backward(const Ambient& amb, const IdealFamily& fam, const GroupElement& p,
                            const Filter& F, const IdealFamily* margin_fam) {
  if (!amb.in_p(p)) throw UsageError("act_backward: element is not in P");
  BackwardResult out;
  Ideal pP = left_multiply(amb, p, Ideal::full(amb));
  if (!ideal_subset(amb, F.min, pP)) return out; // pP not in F
  out.defined = true;
  Ideal pre = left_preimage(amb, p, F.min);
  out.filter = locate_or_margin(amb, fam, pre, margin_fam, "act_backward");
  return out;
}

InvarianceVerdict invariant_subset_check(const Ambient& amb, const IdealFamily& fam,
                                         const std::vector<Filter>& C,
                                         const IdealFamily* margin_fam) {
  InvarianceVerdict v;
  auto in_C = [&](const Filter& F) {
    for (const Filter& G : C)
      if (G.trace == F.trace) return true;
    return false;
  };
  bool truncated = false;
  for (const GroupElement& p : amb.generators()) {
    for (const Filter& F : C) {
      try {
        Filter fwd = act_forward(amb, fam, p, F, margin_fam);
        if (!in_C(fwd)) {
          v.status = InvarianceVerdict::Status::Fails;
          v.witness_p = p;
          v.witness_filter = F;
          v.forward_direction = true;
          return v;
        }
      } catch (const DepthMarginError&) {
        truncated = true;
      }
      try {
        BackwardResult back = act_backward(amb, fam, p, F, margin_fam);
        if (back.defined && !in_C(back.filter)) {
          v.status = InvarianceVerdict::Status::Fails;
          v.witness_p = p;
          v.witness_filter = F;
          v.forward_direction = false;
          return v;
        }
      } catch (const DepthMarginError&) {
        truncated = true;
      }
    }
  }
  v.status = truncated ? InvarianceVerdict::Status::UnknownTruncated
                       : InvarianceVerdict::Status::Holds;
  return v;
}

} // namespace stonework
