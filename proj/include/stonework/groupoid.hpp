#ifndef STONEWORK_GROUPOID_HPP
#define STONEWORK_GROUPOID_HPP

#include <optional>
#include <vector>

#include "stonework/conditions.hpp"
#include "stonework/spectrum.hpp"

namespace stonework {

/// A character on translated ideals, represented as (filter, shift): the value
/// on h.X is [ P n ((shift h).X) belongs to the filter ]. Every character of
/// the big spectrum meets the embedded copy of Omega along its orbit, so this
/// representation reaches all of them (depth-relatively).
struct ExtendedCharacter {
  Filter base;
  GroupElement shift;
};

/// Principal evaluation (exact for filters given by their least member).
bool ext_char_eval(const Ambient& amb, const ExtendedCharacter& chi, const GroupElement& h,
                   const Ideal& X);

/// Certified evaluation for boundary (ultrafilter) shadows: 1 when the
/// computed ideal contains the least member, 0 when it misses it entirely,
/// unknown otherwise.
enum class CertifiedValue { CertainZero, CertainOne, Unknown };
CertifiedValue ext_char_eval_certified(const Ambient& amb, const ExtendedCharacter& chi,
                                       const GroupElement& h, const Ideal& X);

/// Evaluation equality over all test pairs (h, X) with |h| <= radius, X in fam.
bool ext_char_equal(const Ambient& amb, const IdealFamily& fam, const ExtendedCharacter& a,
                    const ExtendedCharacter& b, int radius);

/// View A of a groupoid arrow: a hull element paired with a filter containing
/// its source projection.
struct ArrowA {
  PartialIsometry s;
  Filter F;
};

/// View B: a point of the restricted transformation groupoid, (character, g).
struct ArrowB {
  ExtendedCharacter chi;
  GroupElement g;
};

bool arrow_valid(const Ambient& amb, const ArrowA& a);

/// s.chi: the filter with chi'(E_X) = chi(s* e_X s). Throws ComposabilityError
/// when dom(s) is not in the filter.
Filter s_dot_chi(const Ambient& amb, const IdealFamily& fam, const PartialIsometry& s,
                 const Filter& F);

/// (s1, F) ~ (s2, F): some member of F equalizes the two partial bijections.
bool arrow_equiv(const Ambient& amb, const ArrowA& a1, const ArrowA& a2);

ArrowB phi_map(const Ambient& amb, const ArrowA& a);

bool arrows_composable_a(const Ambient& amb, const IdealFamily& fam, const ArrowA& a1,
                         const ArrowA& a2);
bool arrows_composable_b(const Ambient& amb, const IdealFamily& fam, const ArrowB& b1,
                         const ArrowB& b2, int radius);
ArrowA compose_arrows_a(const Ambient& amb, const IdealFamily& fam, const ArrowA& a1,
                        const ArrowA& a2);
ArrowB compose_arrows_b(const ArrowB& b1, const ArrowB& b2);

/// All valid arrows (s, F) from a hull enumeration and a filter list.
std::vector<ArrowA> enumerate_arrows(const Ambient& amb, const IdealFamily& fam,
                                     const std::vector<PartialIsometry>& hull,
                                     const std::vector<Filter>& filters);

// ---------------------------------------------------------------------------
// dynamical probes

struct G0Result {
  enum class Kind { InG0ToBudget, NotInG0 };
  Kind kind = Kind::InG0ToBudget;
  Ideal witness;          // ideal missed by g.P (or g^{-1}.P)
  bool inverse_side = false;
};
G0Result g0_probe(const Ambient& amb, const IdealFamily& fam, const GroupElement& g);

struct TopFreeResult {
  bool moved = false;
  // moved witness: character (F, h0) and separating translated ideal (h, X)
  Filter F;
  GroupElement h0, h;
  Ideal X;
};
/// Searches boundary characters for one certifiably moved by g.
TopFreeResult top_free_probe(const Ambient& amb, const IdealFamily& fam,
                             const std::vector<Filter>& boundary, const GroupElement& g,
                             int radius);

struct LocalBoundaryResult {
  enum class Kind { Witness, NotApplicableReversible };
  Kind kind = Kind::NotApplicableReversible;
  GroupElement x, p, q, gprime; // gprime = x p^{-1} x^{-1} compresses the xP cylinder
  Ideal delta;                  // xP
};
LocalBoundaryResult local_boundary_witness(const Ambient& amb, const IdealFamily& fam,
                                           const BasicOpen& U,
                                           const std::vector<Filter>& boundary);

struct ChecklistResult {
  bool nontrivial = false;
  std::string amenability_status; // "ASSUMED" or "UNKNOWN"
  std::string amenability_citation;
  enum class Evidence { G0SampledTrivial, AllSampledMoved, FixedFound };
  Evidence evidence = Evidence::G0SampledTrivial;
  std::optional<GroupElement> fixed_g;
  enum class Verdict { Passes, Fails, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::vector<std::pair<GroupElement, G0Result>> g0_samples;
  std::vector<std::pair<GroupElement, TopFreeResult>> topfree_samples;
};

ChecklistResult kirchberg_checklist(const Ambient& amb, const IdealFamily& fam,
                                    const std::vector<Filter>& boundary, int bound,
                                    unsigned long long seed, size_t sample_count = 24);

} // namespace stonework

#endif
