#include "stonework/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

#include "stonework/errors.hpp"

namespace stonework {

// ---------------------------------------------------------------------------
// modular arithmetic helpers

namespace {

long long pos_mod(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

// extended gcd: returns g, sets x with a*x = g (mod m)
long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// solve a*x = b (mod m), m >= 1; on success the solution set is x0 + mod_out*Z
bool solve_congruence(long long a, long long b, long long m, long long& x0, long long& mod_out) {
  a = pos_mod(a, m);
  b = pos_mod(b, m);
  long long x, y;
  long long g = a == 0 ? m : egcd(a, m, x, y);
  if (b % g != 0) return false;
  mod_out = m / g;
  if (mod_out == 1) {
    x0 = 0;
    return true;
  }
  long long ag = (a / g) % mod_out, bg = (b / g) % mod_out;
  long long xi, yi;
  egcd(ag, mod_out, xi, yi); // gcd(ag, mod_out) = 1
  x0 = pos_mod(static_cast<long long>((__int128)pos_mod(xi, mod_out) * bg % mod_out), mod_out);
  return true;
}

} // namespace

// ---------------------------------------------------------------------------
// custom ideal expressions

struct CustomExpr {
  enum class Kind { Full, Mul, Pre, Cap, MeetTrans };
  Kind kind = Kind::Full;
  GroupElement g;
  std::shared_ptr<const CustomExpr> a, b;

  bool member(const Ambient& amb, const GroupElement& x) const {
    switch (kind) {
      case Kind::Full: return amb.in_p(x);
      case Kind::Mul: return a->member(amb, multiply(invert(g), x)) && amb.in_p(x);
      case Kind::Pre: return amb.in_p(x) && a->member(amb, multiply(g, x));
      case Kind::Cap: return a->member(amb, x) && b->member(amb, x);
      case Kind::MeetTrans: return amb.in_p(x) && a->member(amb, multiply(invert(g), x));
    }
    return false;
  }
};

bool CustomIdeal::operator==(const CustomIdeal& o) const { return sample == o.sample; }

bool CustomIdeal::operator<(const CustomIdeal& o) const {
  return std::lexicographical_compare(sample.begin(), sample.end(), o.sample.begin(),
                                      o.sample.end(), GroupElement::less);
}

static CustomIdeal make_custom(const Ambient& amb, std::shared_ptr<const CustomExpr> expr) {
  CustomIdeal out;
  out.expr = expr;
  for (const GroupElement& x : amb.custom_points())
    if (expr->member(amb, x)) out.sample.push_back(x);
  return out;
}

Ideal custom_full(const Ambient& amb) {
  auto e = std::make_shared<CustomExpr>();
  e->kind = CustomExpr::Kind::Full;
  return Ideal(Ideal::Rep(make_custom(amb, e)));
}

// ---------------------------------------------------------------------------
// TailIdeal helpers (numerical family)

namespace {

bool tail_contains(const NumericalTable& tab, const TailIdeal& X, long long n) {
  if (n >= X.threshold) return tab.member(n);
  return std::binary_search(X.finite.begin(), X.finite.end(), n);
}

// all members of X strictly below bound
std::vector<long long> tail_members_below(const NumericalTable& tab, const TailIdeal& X,
                                          long long bound) {
  std::vector<long long> out;
  for (long long f : X.finite)
    if (f < bound) out.push_back(f);
  for (long long m = X.threshold; m < bound; ++m)
    if (tab.member(m)) out.push_back(m);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// canonicalize S u (P n [tau, oo)); S's entries must lie in P
Ideal tail_canonical(const NumericalTable& tab, std::vector<long long> S, long long tau) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  long long t = tau;
  std::vector<char> in_S; // lookup by scanning; S is small
  auto member_S = [&](long long v) {
    return std::binary_search(S.begin(), S.end(), v);
  };
  while (t > 0) {
    long long m = t - 1;
    if (!tab.member(m)) {
      t = m;
      continue;
    }
    if (member_S(m)) {
      t = m;
      continue;
    }
    break;
  }
  TailIdeal out;
  out.threshold = t;
  for (long long s : S)
    if (s < t) out.finite.push_back(s);
  return Ideal(Ideal::Rep(std::move(out)));
}

} // namespace

// ---------------------------------------------------------------------------
// CongIdeal helpers (ax+b family)

namespace {

// The principal ideal hP for h = (b0, a0) in P: X(|a0|, b0 mod |a0|).
CongIdeal cong_principal(const GroupElement& h) {
  const Affine& a = h.as_affine();
  long long scale = a.scale.num();
  if (scale < 0) scale = -scale;
  return CongIdeal{scale, pos_mod(a.shift.num(), scale)};
}

GroupElement cong_generator(const CongIdeal& X) {
  return GroupElement::affine(Rational(X.residue), Rational(X.scale));
}

// P n (h . P) for arbitrary h in the affine group.
Ideal cong_meet_full(const GroupElement& h) {
  const Affine& af = h.as_affine();
  long long u = af.scale.num(), w = af.scale.den();
  long long sigma = af.shift.num(), tau = af.shift.den();
  if (w % tau != 0) return Ideal::empty();
  long long x0, mod_out;
  if (!solve_congruence(u, -sigma * (w / tau), w, x0, mod_out)) return Ideal::empty();
  // gcd(u, w) = 1 so the solution is unique mod w
  Rational first = af.shift + af.scale * Rational(x0);
  if (!first.is_integer()) throw std::logic_error("affine meet: non-integer representative");
  long long scale = u < 0 ? -u : u;
  return Ideal(Ideal::Rep(CongIdeal{scale, pos_mod(first.num(), scale)}));
}

} // namespace

// ---------------------------------------------------------------------------
// Ideal basics

Ideal Ideal::full(const Ambient& amb) {
  switch (amb.kind()) {
    case FamilyKind::FreeProduct: return Ideal(Rep(WordIdeal{{}}));
    case FamilyKind::Cone: return Ideal(Rep(VecIdeal{Vec(static_cast<size_t>(amb.rank()), 0)}));
    case FamilyKind::Numerical: return Ideal(Rep(TailIdeal{{}, 0}));
    case FamilyKind::AffineInts: return Ideal(Rep(CongIdeal{1, 0}));
    case FamilyKind::Custom: return custom_full(amb);
  }
  throw UsageError("bad family");
}

bool Ideal::less(const Ideal& a, const Ideal& b) {
  if (a.rep_.index() != b.rep_.index()) return a.rep_.index() < b.rep_.index();
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) return false;
        else if constexpr (std::is_same_v<T, WordIdeal>) {
          const auto& y = std::get<WordIdeal>(b.rep_);
          return GroupElement::less(GroupElement(GroupElement::Payload(x.generator)),
                                    GroupElement(GroupElement::Payload(y.generator)));
        } else
          return x < std::get<T>(b.rep_);
      },
      a.rep_);
}

// ---------------------------------------------------------------------------
// operations

static void require_in_p(const Ambient& amb, const GroupElement& p, const char* op) {
  if (!amb.in_p(p)) throw UsageError(std::string(op) + ": element is not in P");
}

Ideal left_multiply(const Ambient& amb, const GroupElement& p, const Ideal& X) {
  require_in_p(amb, p, "left_multiply");
  if (X.is_empty()) return Ideal::empty();
  switch (amb.kind()) {
    case FamilyKind::FreeProduct: {
      const auto& w = std::get<WordIdeal>(X.rep());
      return Ideal(Ideal::Rep(WordIdeal{multiply(p, GroupElement::word(w.generator)).as_word()}));
    }
    case FamilyKind::Cone: {
      const auto& v = std::get<VecIdeal>(X.rep());
      Vec c = v.corner;
      for (size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], p.as_vec()[i]);
      return Ideal(Ideal::Rep(VecIdeal{std::move(c)}));
    }
    case FamilyKind::Numerical: {
      const auto& tab = amb.numerical();
      const auto& X0 = std::get<TailIdeal>(X.rep());
      long long pv = p.as_int();
      long long T = tab.tail_start();
      long long tau = pv + std::max(X0.threshold, T) + T;
      std::vector<long long> S;
      for (long long x : tail_members_below(tab, X0, tau - pv)) S.push_back(x + pv);
      return tail_canonical(tab, std::move(S), tau);
    }
    case FamilyKind::AffineInts: {
      const auto& X0 = std::get<CongIdeal>(X.rep());
      GroupElement h = multiply(p, cong_generator(X0));
      return Ideal(Ideal::Rep(cong_principal(h)));
    }
    case FamilyKind::Custom: {
      auto e = std::make_shared<CustomExpr>();
      e->kind = CustomExpr::Kind::Mul;
      e->g = p;
      e->a = std::get<CustomIdeal>(X.rep()).expr;
      return Ideal(Ideal::Rep(make_custom(amb, e)));
    }
  }
  throw UsageError("bad family");
}

Ideal left_preimage(const Ambient& amb, const GroupElement& p, const Ideal& X) {
  require_in_p(amb, p, "left_preimage");
  if (X.is_empty()) return Ideal::empty();
  switch (amb.kind()) {
    case FamilyKind::FreeProduct: {
      const Word& w = std::get<WordIdeal>(X.rep()).generator;
      const Word& pw = p.as_word();
      if (word_is_prefix(w, pw)) return Ideal::full(amb);
      if (word_is_prefix(pw, w))
        return Ideal(Ideal::Rep(WordIdeal{word_strip_prefix(pw, w)}));
      return Ideal::empty();
    }
    case FamilyKind::Cone: {
      Vec c = std::get<VecIdeal>(X.rep()).corner;
      for (size_t i = 0; i < c.size(); ++i) c[i] = std::max(c[i] - p.as_vec()[i], 0LL);
      return Ideal(Ideal::Rep(VecIdeal{std::move(c)}));
    }
    case FamilyKind::Numerical: {
      const auto& tab = amb.numerical();
      const auto& X0 = std::get<TailIdeal>(X.rep());
      long long pv = p.as_int();
      // P n [t, oo) is always inside the preimage; below t test pointwise.
      std::vector<long long> S;
      for (long long y = 0; y < X0.threshold; ++y)
        if (tab.member(y) && tail_contains(tab, X0, pv + y)) S.push_back(y);
      return tail_canonical(tab, std::move(S), X0.threshold);
    }
    case FamilyKind::AffineInts: {
      const auto& X0 = std::get<CongIdeal>(X.rep());
      const Affine& pa = p.as_affine();
      long long c = pa.shift.num(), dd = pa.scale.num();
      long long a = X0.scale, r = X0.residue;
      long long m0, mod_out;
      if (!solve_congruence(dd, r - c, a, m0, mod_out)) return Ideal::empty();
      return Ideal(Ideal::Rep(CongIdeal{mod_out, pos_mod(m0, mod_out)}));
    }
    case FamilyKind::Custom: {
      auto e = std::make_shared<CustomExpr>();
      e->kind = CustomExpr::Kind::Pre;
      e->g = p;
      e->a = std::get<CustomIdeal>(X.rep()).expr;
      return Ideal(Ideal::Rep(make_custom(amb, e)));
    }
  }
  throw UsageError("bad family");
}

Ideal intersect(const Ambient& amb, const Ideal& X1, const Ideal& X2) {
  if (X1.is_empty() || X2.is_empty()) return Ideal::empty();
  switch (amb.kind()) {
    case FamilyKind::FreeProduct: {
      const Word& w1 = std::get<WordIdeal>(X1.rep()).generator;
      const Word& w2 = std::get<WordIdeal>(X2.rep()).generator;
      if (word_is_prefix(w1, w2)) return X2;
      if (word_is_prefix(w2, w1)) return X1;
      return Ideal::empty();
    }
    case FamilyKind::Cone: {
      const Vec& a = std::get<VecIdeal>(X1.rep()).corner;
      const Vec& b = std::get<VecIdeal>(X2.rep()).corner;
      Vec c(a.size());
      for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
      return Ideal(Ideal::Rep(VecIdeal{std::move(c)}));
    }
    case FamilyKind::Numerical: {
      const auto& tab = amb.numerical();
      const auto& A = std::get<TailIdeal>(X1.rep());
      const auto& B = std::get<TailIdeal>(X2.rep());
      long long tau = std::max(A.threshold, B.threshold);
      std::vector<long long> S;
      for (long long m : tail_members_below(tab, A, tau))
        if (tail_contains(tab, B, m)) S.push_back(m);
      return tail_canonical(tab, std::move(S), tau);
    }
    case FamilyKind::AffineInts: {
      const auto& A = std::get<CongIdeal>(X1.rep());
      const auto& B = std::get<CongIdeal>(X2.rep());
      long long g = std::gcd(A.scale, B.scale);
      if (pos_mod(A.residue - B.residue, g) != 0) return Ideal::empty();
      long long l = A.scale / g * B.scale;
      // CRT lift: r = A.residue + A.scale * k with r = B.residue (mod B.scale)
      long long k0, mod_out;
      if (!solve_congruence(A.scale, B.residue - A.residue, B.scale, k0, mod_out))
        return Ideal::empty();
      long long r = pos_mod(A.residue + static_cast<long long>((__int128)A.scale * k0 % l), l);
      return Ideal(Ideal::Rep(CongIdeal{l, r}));
    }
    case FamilyKind::Custom: {
      auto e = std::make_shared<CustomExpr>();
      e->kind = CustomExpr::Kind::Cap;
      e->a = std::get<CustomIdeal>(X1.rep()).expr;
      e->b = std::get<CustomIdeal>(X2.rep()).expr;
      return Ideal(Ideal::Rep(make_custom(amb, e)));
    }
  }
  throw UsageError("bad family");
}

Ideal meet_with_p(const Ambient& amb, const GroupElement& g, const Ideal& X) {
  if (X.is_empty()) return Ideal::empty();
  switch (amb.kind()) {
    case FamilyKind::FreeProduct: {
      const Word& w = std::get<WordIdeal>(X.rep()).generator;
      GroupElement h = multiply(g, GroupElement::word(w));
      Word pos, neg;
      if (!word_valley_split(h.as_word(), pos, neg)) return Ideal::empty();
      return Ideal(Ideal::Rep(WordIdeal{std::move(pos)}));
    }
    case FamilyKind::Cone: {
      Vec c = std::get<VecIdeal>(X.rep()).corner;
      for (size_t i = 0; i < c.size(); ++i) c[i] = std::max(checked_add(c[i], g.as_vec()[i]), 0LL);
      return Ideal(Ideal::Rep(VecIdeal{std::move(c)}));
    }
    case FamilyKind::Numerical: {
      const auto& tab = amb.numerical();
      const auto& X0 = std::get<TailIdeal>(X.rep());
      long long gv = g.as_int();
      long long d = tab.gcd();
      if (d == 0) {
        // P = {0}: meet is {0} iff -gv in X
        if (tail_contains(tab, X0, -gv)) return tail_canonical(tab, {0}, 1);
        return Ideal::empty();
      }
      if (pos_mod(gv, d) != 0) return Ideal::empty();
      long long T = tab.tail_start();
      long long tau = std::max(T, gv + std::max(X0.threshold, T));
      std::vector<long long> S;
      for (long long m = 0; m < tau; ++m)
        if (tab.member(m) && tail_contains(tab, X0, m - gv)) S.push_back(m);
      return tail_canonical(tab, std::move(S), tau);
    }
    case FamilyKind::AffineInts: {
      const auto& X0 = std::get<CongIdeal>(X.rep());
      GroupElement h = multiply(g, cong_generator(X0));
      return cong_meet_full(h);
    }
    case FamilyKind::Custom: {
      auto e = std::make_shared<CustomExpr>();
      e->kind = CustomExpr::Kind::MeetTrans;
      e->g = g;
      e->a = std::get<CustomIdeal>(X.rep()).expr;
      return Ideal(Ideal::Rep(make_custom(amb, e)));
    }
  }
  throw UsageError("bad family");
}

bool ideal_contains(const Ambient& amb, const Ideal& X, const GroupElement& x) {
  if (X.is_empty()) return false;
  switch (amb.kind()) {
    case FamilyKind::FreeProduct:
      return word_positive(x.as_word()) &&
             word_is_prefix(std::get<WordIdeal>(X.rep()).generator, x.as_word());
    case FamilyKind::Cone: {
      const Vec& c = std::get<VecIdeal>(X.rep()).corner;
      for (size_t i = 0; i < c.size(); ++i)
        if (x.as_vec()[i] < c[i]) return false;
      return true;
    }
    case FamilyKind::Numerical:
      return tail_contains(amb.numerical(), std::get<TailIdeal>(X.rep()), x.as_int());
    case FamilyKind::AffineInts: {
      if (!amb.in_p(x)) return false;
      const auto& X0 = std::get<CongIdeal>(X.rep());
      const Affine& a = x.as_affine();
      return pos_mod(a.shift.num() - X0.residue, X0.scale) == 0 &&
             a.scale.num() % X0.scale == 0;
    }
    case FamilyKind::Custom:
      return std::get<CustomIdeal>(X.rep()).expr->member(amb, x);
  }
  return false;
}

bool ideal_subset(const Ambient& amb, const Ideal& X1, const Ideal& X2) {
  if (X1.is_empty()) return true;
  if (X2.is_empty()) return false;
  switch (amb.kind()) {
    case FamilyKind::FreeProduct:
      return word_is_prefix(std::get<WordIdeal>(X2.rep()).generator,
                            std::get<WordIdeal>(X1.rep()).generator);
    case FamilyKind::Cone: {
      const Vec& a = std::get<VecIdeal>(X1.rep()).corner;
      const Vec& b = std::get<VecIdeal>(X2.rep()).corner;
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
      return true;
    }
    case FamilyKind::Numerical: {
      const auto& A = std::get<TailIdeal>(X1.rep());
      const auto& B = std::get<TailIdeal>(X2.rep());
      if (A.threshold < B.threshold) return false;
      for (long long f : A.finite)
        if (!tail_contains(amb.numerical(), B, f)) return false;
      return true;
    }
    case FamilyKind::AffineInts: {
      const auto& A = std::get<CongIdeal>(X1.rep());
      const auto& B = std::get<CongIdeal>(X2.rep());
      return A.scale % B.scale == 0 && pos_mod(A.residue - B.residue, B.scale) == 0;
    }
    case FamilyKind::Custom: {
      // exact "no", budget-limited "yes"
      for (const GroupElement& x : std::get<CustomIdeal>(X1.rep()).sample)
        if (!ideal_contains(amb, X2, x)) return false;
      return true;
    }
  }
  return false;
}

std::optional<GroupElement> min_element(const Ambient& amb, const Ideal& X) {
  if (X.is_empty()) return std::nullopt;
  switch (amb.kind()) {
    case FamilyKind::FreeProduct:
      return GroupElement::word(std::get<WordIdeal>(X.rep()).generator);
    case FamilyKind::Cone: return GroupElement::vec(std::get<VecIdeal>(X.rep()).corner);
    case FamilyKind::Numerical: {
      const auto& X0 = std::get<TailIdeal>(X.rep());
      if (!X0.finite.empty()) return GroupElement::integer(X0.finite.front());
      return GroupElement::integer(amb.numerical().first_member_at_or_after(X0.threshold));
    }
    case FamilyKind::AffineInts:
      return cong_generator(std::get<CongIdeal>(X.rep()));
    case FamilyKind::Custom: {
      const auto& s = std::get<CustomIdeal>(X.rep()).sample;
      if (s.empty()) return std::nullopt;
      return s.front();
    }
  }
  return std::nullopt;
}

std::optional<GroupElement> principal_generator(const Ambient& amb, const Ideal& X) {
  if (X.is_empty()) return std::nullopt;
  switch (amb.kind()) {
    case FamilyKind::FreeProduct:
      return GroupElement::word(std::get<WordIdeal>(X.rep()).generator);
    case FamilyKind::Cone: return GroupElement::vec(std::get<VecIdeal>(X.rep()).corner);
    case FamilyKind::AffineInts: return cong_generator(std::get<CongIdeal>(X.rep()));
    case FamilyKind::Numerical: {
      auto m = min_element(amb, X);
      if (left_multiply(amb, *m, Ideal::full(amb)) == X) return m;
      return std::nullopt;
    }
    case FamilyKind::Custom: return std::nullopt; // not certifiable at budget
  }
  return std::nullopt;
}

CoverageWitness coverage_witness(const Ambient& amb, const Ideal& X,
                                 const std::vector<Ideal>& subs) {
  CoverageWitness out;
  if (X.is_empty()) {
    out.status = CoverageWitness::Status::Covered;
    return out;
  }
  std::vector<Ideal> live;
  for (const Ideal& s : subs)
    if (!s.is_empty()) live.push_back(s);

  auto covered_by_some_superset = [&]() {
    for (const Ideal& s : live)
      if (ideal_subset(amb, X, s)) return true;
    return false;
  };

  switch (amb.kind()) {
    case FamilyKind::FreeProduct:
    case FamilyKind::Cone:
    case FamilyKind::AffineInts: {
      // the generator of a principal ideal lies in a constructible subideal
      // only if that subideal is the whole of X
      if (covered_by_some_superset()) {
        out.status = CoverageWitness::Status::Covered;
        return out;
      }
      out.status = CoverageWitness::Status::Found;
      out.element = min_element(amb, X);
      return out;
    }
    case FamilyKind::Numerical: {
      if (live.empty()) {
        out.status = CoverageWitness::Status::Found;
        out.element = min_element(amb, X);
        return out;
      }
      long long bound = std::numeric_limits<long long>::max();
      for (const Ideal& s : live)
        bound = std::min(bound, std::get<TailIdeal>(s.rep()).threshold);
      // every P-member at or above the smallest threshold is covered
      for (long long m : tail_members_below(amb.numerical(), std::get<TailIdeal>(X.rep()), bound)) {
        bool hit = false;
        for (const Ideal& s : live)
          if (tail_contains(amb.numerical(), std::get<TailIdeal>(s.rep()), m)) {
            hit = true;
            break;
          }
        if (!hit) {
          out.status = CoverageWitness::Status::Found;
          out.element = GroupElement::integer(m);
          return out;
        }
      }
      out.status = CoverageWitness::Status::Covered;
      return out;
    }
    case FamilyKind::Custom: {
      for (const GroupElement& x : std::get<CustomIdeal>(X.rep()).sample) {
        bool hit = false;
        for (const Ideal& s : live)
          if (ideal_contains(amb, s, x)) {
            hit = true;
            break;
          }
        if (!hit) {
          out.status = CoverageWitness::Status::Found;
          out.element = x;
          return out;
        }
      }
      out.status = CoverageWitness::Status::UnknownTruncated;
      return out;
    }
  }
  out.status = CoverageWitness::Status::UnknownTruncated;
  return out;
}

std::string print_ideal(const Ambient& amb, const Ideal& X) {
  if (X.is_empty()) return "empty";
  switch (amb.kind()) {
    case FamilyKind::FreeProduct: {
      const Word& w = std::get<WordIdeal>(X.rep()).generator;
      if (w.empty()) return "P";
      return amb.print_element(GroupElement::word(w)) + "*P";
    }
    case FamilyKind::Cone: {
      const Vec& c = std::get<VecIdeal>(X.rep()).corner;
      bool zero = std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
      if (zero) return "P";
      return amb.print_element(GroupElement::vec(c)) + "+P";
    }
    case FamilyKind::Numerical: {
      const auto& X0 = std::get<TailIdeal>(X.rep());
      if (X0.threshold == 0 && X0.finite.empty()) return "P";
      std::string out = "{";
      for (size_t i = 0; i < X0.finite.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(X0.finite[i]);
      }
      return out + "}+[" + std::to_string(X0.threshold) + ",oo)";
    }
    case FamilyKind::AffineInts: {
      const auto& X0 = std::get<CongIdeal>(X.rep());
      if (X0.scale == 1) return "P";
      return "cong(" + std::to_string(X0.scale) + "," + std::to_string(X0.residue) + ")";
    }
    case FamilyKind::Custom: {
      const auto& s = std::get<CustomIdeal>(X.rep()).sample;
      std::string out = "sample{";
      for (size_t i = 0; i < s.size() && i < 8; ++i) {
        if (i) out += ",";
        out += amb.print_element(s[i]);
      }
      if (s.size() > 8) out += ",...";
      return out + "}";
    }
  }
  return "?";
}

Ideal parse_ideal(const Ambient& amb, const std::string& text) {
  if (text == "empty") return Ideal::empty();
  if (text == "P") return Ideal::full(amb);
  switch (amb.kind()) {
    case FamilyKind::FreeProduct: {
      if (text.size() < 2 || text.substr(text.size() - 2) != "*P")
        throw ParseError("expected '<word>*P'", 0);
      GroupElement w = amb.parse_element(text.substr(0, text.size() - 2));
      if (!amb.in_p(w)) throw UsageError("ideal generator not in P: " + text);
      return Ideal(Ideal::Rep(WordIdeal{w.as_word()}));
    }
    case FamilyKind::Cone: {
      if (text.size() < 2 || text.substr(text.size() - 2) != "+P")
        throw ParseError("expected '<vector>+P'", 0);
      GroupElement v = amb.parse_element(text.substr(0, text.size() - 2));
      if (!amb.in_p(v)) throw UsageError("ideal corner not in P: " + text);
      return Ideal(Ideal::Rep(VecIdeal{v.as_vec()}));
    }
    case FamilyKind::Numerical: {
      auto brace = text.find('}');
      auto bracket = text.find("+[");
      auto close = text.find(",oo)");
      if (text.empty() || text[0] != '{' || brace == std::string::npos ||
          bracket == std::string::npos || close == std::string::npos)
        throw ParseError("expected '{f1,..}+[t,oo)'", 0);
      std::vector<long long> fin;
      std::string fins = text.substr(1, brace - 1);
      size_t pos = 0;
      while (pos < fins.size()) {
        size_t comma = fins.find(',', pos);
        std::string tok = fins.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) fin.push_back(std::stoll(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      long long t = std::stoll(text.substr(bracket + 2, close - bracket - 2));
      for (long long f : fin)
        if (!amb.numerical().member(f) || f >= t)
          throw UsageError("non-canonical numerical ideal literal: " + text);
      return tail_canonical(amb.numerical(), std::move(fin), t);
    }
    case FamilyKind::AffineInts: {
      if (text.rfind("cong(", 0) != 0 || text.back() != ')')
        throw ParseError("expected 'cong(a,r)'", 0);
      auto comma = text.find(',');
      long long a = std::stoll(text.substr(5, comma - 5));
      long long r = std::stoll(text.substr(comma + 1, text.size() - comma - 2));
      if (a < 1) throw UsageError("cong scale must be >= 1");
      return Ideal(Ideal::Rep(CongIdeal{a, pos_mod(r, a)}));
    }
    case FamilyKind::Custom:
      throw UsageError("custom ideals cannot be parsed from literals");
  }
  throw UsageError("bad family");
}

} // namespace stonework
