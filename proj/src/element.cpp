#include "stonework/element.hpp"

#include <algorithm>
#include <stdexcept>

#include "stonework/errors.hpp"

namespace stonework {

GroupElement GroupElement::word(Word w) { return GroupElement(Payload(reduce_word(w))); }
GroupElement GroupElement::vec(Vec v) { return GroupElement(Payload(std::move(v))); }
GroupElement GroupElement::integer(long long n) { return GroupElement(Payload(ZInt{n})); }

GroupElement GroupElement::affine(Rational shift, Rational scale) {
  if (scale.is_zero()) throw UsageError("affine element with zero scale");
  return GroupElement(Payload(Affine{shift, scale}));
}

bool GroupElement::is_identity() const {
  if (is_word()) return as_word().empty();
  if (is_vec()) {
    for (long long c : as_vec())
      if (c != 0) return false;
    return true;
  }
  if (is_int()) return as_int() == 0;
  const Affine& a = as_affine();
  return a.shift.is_zero() && a.scale == Rational(1);
}

long long GroupElement::norm_length() const {
  if (is_word()) {
    long long n = 0;
    for (const Run& r : as_word()) n = checked_add(n, r.exp < 0 ? -r.exp : r.exp);
    return n;
  }
  if (is_vec()) {
    long long n = 0;
    for (long long c : as_vec()) n = checked_add(n, c < 0 ? -c : c);
    return n;
  }
  if (is_int()) return as_int() < 0 ? -as_int() : as_int();
  return 0;
}

bool GroupElement::less(const GroupElement& a, const GroupElement& b) {
  if (a.payload_.index() != b.payload_.index()) return a.payload_.index() < b.payload_.index();
  if (a.is_word()) {
    const Word& u = a.as_word();
    const Word& w = b.as_word();
    if (a.norm_length() != b.norm_length()) return a.norm_length() < b.norm_length();
    return std::lexicographical_compare(
        u.begin(), u.end(), w.begin(), w.end(), [](const Run& x, const Run& y) {
          // positive letters before negative, then generator index
          auto key = [](const Run& r) { return std::tuple(r.exp < 0, r.gen, r.exp < 0 ? -r.exp : r.exp); };
          return key(x) < key(y);
        });
  }
  if (a.is_vec()) return a.as_vec() < b.as_vec();
  if (a.is_int()) return a.as_int() < b.as_int();
  const Affine& x = a.as_affine();
  const Affine& y = b.as_affine();
  if (x.scale != y.scale) return x.scale < y.scale;
  return x.shift < y.shift;
}

Word reduce_word(const Word& raw) {
  Word out;
  for (const Run& r : raw) {
    if (r.exp == 0) continue;
    Run cur = r;
    while (!out.empty() && out.back().gen == cur.gen) {
      cur.exp = checked_add(cur.exp, out.back().exp);
      out.pop_back();
      if (cur.exp == 0) break;
    }
    if (cur.exp != 0) out.push_back(cur);
  }
  return out;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.payload().index() != b.payload().index())
    throw UsageError("multiply: elements from different ambient families");
  if (a.is_word()) {
    Word w = a.as_word();
    w.insert(w.end(), b.as_word().begin(), b.as_word().end());
    return GroupElement::word(std::move(w));
  }
  if (a.is_vec()) {
    const Vec& u = a.as_vec();
    const Vec& v = b.as_vec();
    if (u.size() != v.size()) throw UsageError("multiply: lattice rank mismatch");
    Vec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = checked_add(u[i], v[i]);
    return GroupElement::vec(std::move(r));
  }
  if (a.is_int()) return GroupElement::integer(checked_add(a.as_int(), b.as_int()));
  const Affine& x = a.as_affine();
  const Affine& y = b.as_affine();
  // (b1,a1)(b2,a2) : x -> b1 + a1*(b2 + a2*x)
  return GroupElement::affine(x.shift + x.scale * y.shift, x.scale * y.scale);
}

GroupElement invert(const GroupElement& a) {
  if (a.is_word()) {
    Word w;
    const Word& u = a.as_word();
    for (auto it = u.rbegin(); it != u.rend(); ++it) w.push_back(Run{it->gen, -it->exp});
    return GroupElement(GroupElement::Payload(std::move(w))); // reversal of reduced stays reduced
  }
  if (a.is_vec()) {
    Vec r = a.as_vec();
    for (long long& c : r) c = -c;
    return GroupElement::vec(std::move(r));
  }
  if (a.is_int()) return GroupElement::integer(-a.as_int());
  const Affine& x = a.as_affine();
  return GroupElement::affine(-(x.shift / x.scale), Rational(1) / x.scale);
}

bool word_positive(const Word& w) {
  for (const Run& r : w)
    if (r.exp < 0) return false;
  return true;
}

bool word_is_prefix(const Word& u, const Word& w) {
  if (u.empty()) return true;
  if (u.size() > w.size()) return false;
  for (size_t i = 0; i + 1 < u.size(); ++i)
    if (!(u[i] == w[i])) return false;
  size_t last = u.size() - 1;
  return u[last].gen == w[last].gen && u[last].exp <= w[last].exp;
}

Word word_strip_prefix(const Word& u, const Word& w) {
  if (!word_is_prefix(u, w)) throw UsageError("word_strip_prefix: not a prefix");
  Word inv;
  for (auto it = u.rbegin(); it != u.rend(); ++it) inv.push_back(Run{it->gen, -it->exp});
  Word cat = inv;
  cat.insert(cat.end(), w.begin(), w.end());
  return reduce_word(cat);
}

bool word_valley_split(const Word& g, Word& pos, Word& neg) {
  pos.clear();
  neg.clear();
  size_t i = 0;
  while (i < g.size() && g[i].exp > 0) pos.push_back(g[i++]);
  std::vector<Run> tail;
  while (i < g.size() && g[i].exp < 0) tail.push_back(g[i++]);
  if (i != g.size()) return false;
  // g = pos * tail, tail = neg^{-1}
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) neg.push_back(Run{it->gen, -it->exp});
  return true;
}

} // namespace stonework
