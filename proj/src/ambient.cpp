#include "stonework/ambient.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "stonework/errors.hpp"

namespace stonework {

// ---------------------------------------------------------------------------
// NumericalTable

NumericalTable::NumericalTable(std::vector<long long> gens) : gens_(std::move(gens)) {
  for (long long g : gens_)
    if (g <= 0) throw UsageError("numerical semigroup generators must be positive");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  if (gens_.empty()) {
    d_ = 0;
    tail_start_ = 1; // empty tail: P = {0}
    return;
  }
  d_ = 0;
  for (long long g : gens_) d_ = std::gcd(d_, g);
  std::vector<long long> scaled;
  for (long long g : gens_) scaled.push_back(g / d_);
  long long lo = scaled.front(), hi = scaled.back();
  // Brauer-style bound: the Frobenius number of a gcd-1 semigroup is below
  // (lo-1)*(hi-1); sieve a little past it.
  long long bound = (lo - 1) * (hi - 1) + hi + 2;
  sieve_.assign(static_cast<size_t>(bound) + 1, 0);
  sieve_[0] = 1;
  for (long long v = 1; v <= bound; ++v)
    for (long long g : scaled)
      if (v >= g && sieve_[static_cast<size_t>(v - g)]) {
        sieve_[static_cast<size_t>(v)] = 1;
        break;
      }
  long long c = bound;
  while (c > 0 && sieve_[static_cast<size_t>(c - 1)]) --c;
  tail_start_ = c * d_;
}

bool NumericalTable::member(long long n) const {
  if (n < 0) return false;
  if (d_ == 0) return n == 0;
  if (n % d_ != 0) return false;
  long long v = n / d_;
  if (n >= tail_start_) return true;
  return sieve_[static_cast<size_t>(v)] != 0;
}

long long NumericalTable::first_member_at_or_after(long long n) const {
  if (n <= 0) return 0;
  if (d_ == 0) throw UsageError("trivial numerical semigroup has no member >= " + std::to_string(n));
  long long m = n;
  while (!member(m)) ++m;
  return m;
}

// ---------------------------------------------------------------------------
// Custom subsemigroups

struct CustomDef {
  std::vector<GroupElement> gens;
  // memoized factorization results
  mutable std::map<GroupElement::Payload, bool> memo;
  mutable std::vector<GroupElement> points;

  bool member(const Ambient& amb, const GroupElement& x) const {
    if (x.is_identity()) return true;
    if (x.is_word() && !word_positive(x.as_word())) return false;
    if (x.is_vec()) {
      for (long long c : x.as_vec())
        if (c < 0) return false;
    }
    auto it = memo.find(x.payload());
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const GroupElement& g : gens) {
      GroupElement rest = multiply(invert(g), x);
      // generators have positive length, so the recursion strictly shrinks
      if (rest.norm_length() < x.norm_length() && member(amb, rest)) {
        ok = true;
        break;
      }
    }
    memo.emplace(x.payload(), ok);
    return ok;
  }
};

// ---------------------------------------------------------------------------
// construction

static CatalogMeta free_product_meta() {
  CatalogMeta m;
  m.amenable_action = CatalogMeta::Note{
      true, "Li, Nuclearity of semigroup C*-algebras and the connection to amenability "
            "(J. Funct. Anal. 262, 2012): F_n acts amenably on the positive boundary "
            "compactification; see also Nica 1992"};
  m.left_ore = CatalogMeta::Note{false, "p q^{-1} admits no representation p'^{-1} q'"};
  m.left_reversible = CatalogMeta::Note{false, "range projections of distinct generators are orthogonal (Nica 1992)"};
  m.quasi_lattice = CatalogMeta::Note{true, "Nica 1992, quasi-lattice order on free products"};
  m.topfree = CatalogMeta::TopFree::Unresolved; // G_0 is trivial; probes settle it
  m.boundary_note = "boundary = infinite positive words; boundary quotient is the Cuntz algebra O_n";
  return m;
}

static CatalogMeta cone_meta() {
  CatalogMeta m;
  m.amenable_action = CatalogMeta::Note{true, "abelian ambient group; every action of Z^k is amenable"};
  m.left_ore = CatalogMeta::Note{true, "abelian: G = P^{-1}P"};
  m.left_reversible = CatalogMeta::Note{true, "lattice cones: any two translates intersect"};
  m.quasi_lattice = CatalogMeta::Note{true, "componentwise maximum is a lattice join"};
  m.topfree = CatalogMeta::TopFree::CitedFails;
  m.topfree_citation =
      "left reversible case: the boundary is a single point fixed by all of G_0 "
      "(Li 2012, boundary action discussion)";
  m.boundary_note = "one-point boundary (left reversible)";
  return m;
}

static CatalogMeta numerical_meta() {
  CatalogMeta m;
  m.amenable_action = CatalogMeta::Note{true, "abelian ambient group Z"};
  m.left_ore = CatalogMeta::Note{true, "abelian: G = P^{-1}P"};
  m.left_reversible = CatalogMeta::Note{true, "tails of a numerical semigroup always intersect"};
  m.topfree = CatalogMeta::TopFree::CitedFails;
  m.topfree_citation = "left reversible case: one-point boundary fixed by G_0";
  m.boundary_note = "one-point boundary (left reversible)";
  return m;
}

static CatalogMeta axb_meta() {
  CatalogMeta m;
  m.amenable_action = CatalogMeta::Note{
      true, "Q x| Q^x is solvable, hence amenable; all of its actions are amenable (Li 2012)"};
  m.left_ore = CatalogMeta::Note{true, "ax+b semigroups are left Ore: G = P^{-1}P (Li 2012; Cuntz-Deninger-Laca 2013)"};
  m.left_reversible = CatalogMeta::Note{false, "(0,2)P and (1,2)P are disjoint congruence classes"};
  m.quasi_lattice = CatalogMeta::Note{false, "P contains nontrivial units, violating QL0"};
  m.topfree = CatalogMeta::TopFree::CitedHolds;
  m.topfree_citation = "G_0 = Z x| {±1} acts topologically freely on the boundary (Li 2012, ring C*-algebra case)";
  m.boundary_note = "boundary quotient is the ring C*-algebra of Z";
  return m;
}

Ambient Ambient::from_id(const std::string& id) {
  Ambient a;
  a.id_ = id;
  auto colon = id.find(':');
  std::string head = colon == std::string::npos ? id : id.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : id.substr(colon + 1);

  auto parse_count = [&](const char* what) {
    try {
      int n = std::stoi(args);
      if (n < 0) throw std::invalid_argument("");
      return n;
    } catch (...) {
      throw UsageError(std::string("bad ") + what + " in family id: " + id);
    }
  };

  if (id == "trivial") {
    a.kind_ = FamilyKind::Cone;
    a.rank_ = 0;
    a.meta = cone_meta();
    a.meta.boundary_note = "trivial semigroup";
    return a;
  }
  if (id == "naturals") {
    a.kind_ = FamilyKind::Cone;
    a.rank_ = 1;
    a.gens_.push_back(GroupElement::vec({1}));
    a.meta = cone_meta();
    return a;
  }
  if (head == "cone_zk") {
    a.kind_ = FamilyKind::Cone;
    a.rank_ = parse_count("rank");
    for (int i = 0; i < a.rank_; ++i) {
      Vec v(static_cast<size_t>(a.rank_), 0);
      v[static_cast<size_t>(i)] = 1;
      a.gens_.push_back(GroupElement::vec(std::move(v)));
    }
    a.meta = cone_meta();
    return a;
  }
  if (head == "free_product_naturals") {
    a.kind_ = FamilyKind::FreeProduct;
    a.rank_ = parse_count("rank");
    if (a.rank_ < 1) throw UsageError("free product needs at least one factor: " + id);
    for (int i = 1; i <= a.rank_; ++i) a.gens_.push_back(GroupElement::word({Run{i, 1}}));
    a.meta = free_product_meta();
    return a;
  }
  if (head == "numerical") {
    a.kind_ = FamilyKind::Numerical;
    a.rank_ = 1;
    std::vector<long long> gens;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      try {
        gens.push_back(std::stoll(tok));
      } catch (...) {
        throw UsageError("bad generator list in family id: " + id);
      }
    }
    if (gens.empty()) throw UsageError("numerical family needs generators: " + id);
    a.table_ = std::make_shared<NumericalTable>(gens);
    if (a.table_->gcd() != 1)
      throw UsageError("numerical family generators must have gcd 1 "
                       "(divide out the common factor): " + id);
    for (long long g : a.table_->gens()) a.gens_.push_back(GroupElement::integer(g));
    a.meta = numerical_meta();
    return a;
  }
  if (id == "axb_integers") {
    a.kind_ = FamilyKind::AffineInts;
    a.rank_ = 1;
    // P = Z x| Z^x is not finitely generated; this is the documented finite
    // working set used for spheres, closures and hulls.
    a.gens_.push_back(GroupElement::affine(Rational(1), Rational(1)));
    a.gens_.push_back(GroupElement::affine(Rational(0), Rational(-1)));
    a.gens_.push_back(GroupElement::affine(Rational(0), Rational(2)));
    a.gens_.push_back(GroupElement::affine(Rational(0), Rational(3)));
    a.meta = axb_meta();
    return a;
  }
  throw UsageError("unknown family id: " + id);
}

Ambient Ambient::custom(FamilyKind underlying, int rank, std::vector<GroupElement> generators,
                        const std::string& id) {
  if (underlying == FamilyKind::AffineInts)
    throw UsageError("custom subsemigroups of the affine ambient are not supported "
                     "(units make factorization search non-terminating)");
  if (underlying == FamilyKind::Custom) throw UsageError("custom ambient must be a built-in family");
  Ambient a;
  a.id_ = id;
  a.kind_ = FamilyKind::Custom;
  a.underlying_ = underlying;
  a.rank_ = rank;
  a.gens_ = std::move(generators);
  for (const GroupElement& g : a.gens_) {
    if (g.is_identity()) throw UsageError("custom generators must not include the identity");
    if (g.is_word() && !word_positive(g.as_word()))
      throw UsageError("custom free-product generators must be positive words");
    if (g.is_vec())
      for (long long c : g.as_vec())
        if (c < 0) throw UsageError("custom cone generators must be nonnegative vectors");
  }
  a.custom_ = std::make_shared<CustomDef>();
  a.custom_->gens = a.gens_;
  return a;
}

GroupElement Ambient::identity() const {
  switch (payload_kind()) {
    case FamilyKind::FreeProduct: return GroupElement::word({});
    case FamilyKind::Cone: return GroupElement::vec(Vec(static_cast<size_t>(rank_), 0));
    case FamilyKind::Numerical: return GroupElement::integer(0);
    case FamilyKind::AffineInts: return GroupElement::affine(Rational(0), Rational(1));
    default: throw UsageError("bad family");
  }
}

bool Ambient::in_p(const GroupElement& g) const {
  switch (kind_) {
    case FamilyKind::FreeProduct: return word_positive(g.as_word());
    case FamilyKind::Cone: {
      for (long long c : g.as_vec())
        if (c < 0) return false;
      return true;
    }
    case FamilyKind::Numerical: return table_->member(g.as_int());
    case FamilyKind::AffineInts: {
      const Affine& a = g.as_affine();
      return a.shift.is_integer() && a.scale.is_integer() && !a.scale.is_zero();
    }
    case FamilyKind::Custom: return custom_->member(*this, g);
  }
  return false;
}

// ---------------------------------------------------------------------------
// element grammar

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
  bool eof() { skip_ws(); return i >= s.size(); }
  char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", i);
  }
  long long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected integer", start);
    return std::stoll(s.substr(start, i - start));
  }
  Rational rational() {
    long long n = integer();
    skip_ws();
    if (i < s.size() && s[i] == '/') {
      ++i;
      long long d = integer();
      return Rational(n, d);
    }
    return Rational(n);
  }
};

} // namespace

GroupElement Ambient::parse_element(const std::string& text) const {
  Cursor c{text};
  GroupElement out;
  switch (payload_kind()) {
    case FamilyKind::FreeProduct: {
      if (c.accept('e')) { out = GroupElement::word({}); break; }
      Word w;
      for (;;) {
        c.skip_ws();
        if (!c.accept('p')) throw ParseError("expected generator 'p<i>' or 'e'", c.i);
        long long idx = c.integer();
        if (idx < 1 || idx > rank_)
          throw ParseError("unknown generator p" + std::to_string(idx), c.i);
        long long exp = 1;
        if (c.accept('^')) exp = c.integer();
        w.push_back(Run{static_cast<int>(idx), exp});
        if (!c.accept('*')) break;
      }
      out = GroupElement::word(std::move(w));
      break;
    }
    case FamilyKind::Cone: {
      if (c.accept('e')) { out = identity(); break; }
      c.expect('(');
      Vec v;
      if (!c.accept(')')) {
        for (;;) {
          v.push_back(c.integer());
          if (c.accept(')')) break;
          c.expect(',');
        }
      }
      if (static_cast<int>(v.size()) != rank_)
        throw ParseError("expected vector of length " + std::to_string(rank_), c.i);
      out = GroupElement::vec(std::move(v));
      break;
    }
    case FamilyKind::Numerical: {
      if (c.accept('e')) { out = GroupElement::integer(0); break; }
      out = GroupElement::integer(c.integer());
      break;
    }
    case FamilyKind::AffineInts: {
      if (c.accept('e')) { out = identity(); break; }
      c.expect('(');
      Rational b = c.rational();
      c.expect(',');
      Rational a = c.rational();
      c.expect(')');
      if (a.is_zero()) throw ParseError("affine scale must be nonzero", c.i);
      out = GroupElement::affine(b, a);
      break;
    }
    default: throw UsageError("bad family");
  }
  if (!c.eof()) throw ParseError("trailing input", c.i);
  return out;
}

std::string Ambient::print_element(const GroupElement& g) const {
  if (g.is_identity() && payload_kind() != FamilyKind::Numerical) return "e";
  switch (payload_kind()) {
    case FamilyKind::FreeProduct: {
      std::string out;
      bool first = true;
      for (const Run& r : g.as_word()) {
        if (!first) out += "*";
        first = false;
        out += "p" + std::to_string(r.gen);
        if (r.exp != 1) out += "^" + std::to_string(r.exp);
      }
      return out;
    }
    case FamilyKind::Cone: {
      std::string out = "(";
      for (size_t i = 0; i < g.as_vec().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.as_vec()[i]);
      }
      return out + ")";
    }
    case FamilyKind::Numerical: return std::to_string(g.as_int());
    case FamilyKind::AffineInts: {
      const Affine& a = g.as_affine();
      return "(" + a.shift.str() + "," + a.scale.str() + ")";
    }
    default: throw UsageError("bad family");
  }
}

// ---------------------------------------------------------------------------
// spheres

static std::vector<GroupElement> bfs_sphere(const Ambient& amb,
                                            const std::vector<GroupElement>& step, int radius) {
  std::vector<GroupElement> out;
  std::set<GroupElement::Payload> seen;
  std::vector<GroupElement> layer{amb.identity()};
  seen.insert(amb.identity().payload());
  out.push_back(amb.identity());
  for (int r = 0; r < radius; ++r) {
    std::vector<GroupElement> next;
    for (const GroupElement& x : layer)
      for (const GroupElement& s : step) {
        GroupElement y = multiply(x, s);
        if (seen.insert(y.payload()).second) next.push_back(y);
      }
    std::sort(next.begin(), next.end(), GroupElement::less);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

std::vector<GroupElement> Ambient::group_sphere(int radius) const {
  std::vector<GroupElement> step;
  for (const GroupElement& g : gens_) {
    step.push_back(g);
    step.push_back(invert(g));
  }
  return bfs_sphere(*this, step, radius);
}

std::vector<GroupElement> Ambient::semigroup_sphere(int radius) const {
  return bfs_sphere(*this, gens_, radius);
}

std::vector<GroupElement> Ambient::sample_points(int radius) const {
  return semigroup_sphere(radius);
}

const std::vector<GroupElement>& Ambient::custom_points() const {
  if (!custom_) throw UsageError("custom_points is only defined for custom families");
  if (custom_->points.empty()) {
    constexpr int kPointDepth = 6;
    constexpr size_t kPointCap = 512;
    custom_->points = semigroup_sphere(kPointDepth);
    if (custom_->points.size() > kPointCap) custom_->points.resize(kPointCap);
  }
  return custom_->points;
}

std::vector<std::pair<std::string, std::string>> catalog_entries() {
  return {
      {"trivial", "P = {e} (rank-0 lattice cone)"},
      {"naturals", "P = N inside Z (alias of cone_zk:1)"},
      {"cone_zk:<k>", "P = N^k inside Z^k; quasi-lattice, left Ore, left reversible"},
      {"free_product_naturals:<n>",
       "P = N_0^{*n} inside F_n; quasi-lattice (Nica 1992), boundary quotient O_n"},
      {"numerical:<g1>,<g2>,...", "numerical semigroup <g1,g2,...> inside Z"},
      {"axb_integers",
       "P = Z x| Z^x inside Q x| Q^x; left Ore, boundary quotient = ring C*-algebra of Z "
       "(working generator set (1,1),(0,-1),(0,2),(0,3))"},
  };
}

} // namespace stonework
