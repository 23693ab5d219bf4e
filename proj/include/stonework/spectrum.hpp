#ifndef STONEWORK_SPECTRUM_HPP
#define STONEWORK_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "stonework/closure.hpp"

namespace stonework {

/// A J-valued filter over a finite ideal family. Over an intersection-closed
/// family every filter is the upward closure of its least member, so a filter
/// carries that generator plus its trace (sorted member indices) on the family.
/// The generator may lie outside the family after an action (depth margin).
struct Filter {
  Ideal min;
  std::vector<int> trace;
  bool operator==(const Filter& o) const { return min == o.min; }
};

/// Basic open set U(X; X_1..X_n): filters containing X and avoiding each X_i.
struct BasicOpen {
  int required = 0;
  std::vector<int> excluded;
};

Filter filter_of_member(const Ambient& amb, const IdealFamily& fam, const Ideal& min);

/// All filters over the family (exactly the upward closures of nonempty
/// members), deterministically ordered.
std::vector<Filter> enumerate_filters(const Ambient& amb, const IdealFamily& fam,
                                      size_t cap = 100000);

/// {X in fam : x in X} for x in P.
Filter principal_filter_of(const Ambient& amb, const IdealFamily& fam, const GroupElement& x);

/// Maximality relative to the family: every nonempty non-member meets some
/// member emptily.
bool is_relative_ultrafilter(const Ambient& amb, const IdealFamily& fam, const Filter& F);

/// Filters all of whose basic neighbourhoods contain a relative ultrafilter
/// (the finite shadow of the closure of Sigma_max).
std::vector<Filter> boundary_approx(const Ambient& amb, const IdealFamily& fam);

bool filter_contains_index(const Filter& F, int idx);

/// pF = {X : p^{-1}X in F}; the transported generator is p*min. If it lies
/// outside fam, margin_fam (when given) may still certify it; otherwise a
/// DepthMarginError is thrown.
Filter act_forward(const Ambient& amb, const IdealFamily& fam, const GroupElement& p,
                   const Filter& F, const IdealFamily* margin_fam = nullptr);

struct BackwardResult {
  bool defined = false; // false: F lies outside p*Sigma (pP not in F)
  Filter filter;
};
BackwardResult act_backward(const Ambient& amb, const IdealFamily& fam, const GroupElement& p,
                            const Filter& F, const IdealFamily* margin_fam = nullptr);

struct InvarianceVerdict {
  enum class Status { Holds, Fails, UnknownTruncated };
  Status status = Status::Holds;
  std::optional<GroupElement> witness_p;
  std::optional<Filter> witness_filter;
  bool forward_direction = true;
};

/// Checks pC <= C and p^{-1}(C n p Sigma) <= C over the generators.
InvarianceVerdict invariant_subset_check(const Ambient& amb, const IdealFamily& fam,
                                         const std::vector<Filter>& C,
                                         const IdealFamily* margin_fam = nullptr);

} // namespace stonework

#endif
