#include "stonework/hull.hpp"

#include <algorithm>
#include <map>

#include "stonework/errors.hpp"

namespace stonework {

std::string print_hull_word(const Ambient& amb, const HullWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const HullLetter& l : w) {
    if (!out.empty()) out += " ";
    out += "v[" + amb.print_element(amb.generators().at(static_cast<size_t>(l.gen))) + "]";
    if (l.star) out += "*";
  }
  return out;
}

HullWord parse_hull_word(const Ambient& amb, const std::string& text) {
  HullWord out;
  size_t i = 0;
  auto ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  ws();
  if (text.substr(i) == "1") return out;
  while (i < text.size()) {
    ws();
    if (i >= text.size()) break;
    if (text.compare(i, 2, "v[") != 0) throw ParseError("expected 'v[<generator>]'", i);
    i += 2;
    size_t close = text.find(']', i);
    if (close == std::string::npos) throw ParseError("unterminated generator", i);
    GroupElement g = amb.parse_element(text.substr(i, close - i));
    int gi = -1;
    for (size_t k = 0; k < amb.generators().size(); ++k)
      if (amb.generators()[k] == g) gi = static_cast<int>(k);
    if (gi < 0) throw UsageError("hull letter must use a listed generator: " + text);
    i = close + 1;
    bool star = i < text.size() && text[i] == '*';
    if (star) ++i;
    out.push_back(HullLetter{gi, star});
  }
  return out;
}

PartialIsometry PartialIsometry::one(const Ambient& amb) {
  return make(amb, Ideal::full(amb), amb.identity());
}

PartialIsometry PartialIsometry::generator(const Ambient& amb, const GroupElement& p) {
  if (!amb.in_p(p)) throw UsageError("hull generator must lie in P");
  return make(amb, Ideal::full(amb), p);
}

PartialIsometry PartialIsometry::make(const Ambient& amb, Ideal domain, GroupElement shift) {
  if (domain.is_empty()) return zero();
  PartialIsometry s;
  s.zero_ = false;
  s.domain_ = std::move(domain);
  s.shift_ = std::move(shift);
  (void)amb;
  return s;
}

Ideal PartialIsometry::range(const Ambient& amb) const {
  if (zero_) return Ideal::empty();
  return meet_with_p(amb, shift_, domain_);
}

bool PartialIsometry::operator==(const PartialIsometry& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return domain_ == o.domain_ && shift_ == o.shift_;
}

bool PartialIsometry::less(const PartialIsometry& a, const PartialIsometry& b) {
  if (a.zero_ || b.zero_) return a.zero_ && !b.zero_;
  if (!(a.shift_ == b.shift_)) return GroupElement::less(a.shift_, b.shift_);
  return Ideal::less(a.domain_, b.domain_);
}

PartialIsometry compose(const Ambient& amb, const PartialIsometry& s1, const PartialIsometry& s2) {
  if (s1.is_zero() || s2.is_zero()) return PartialIsometry::zero();
  // {x in dom2 : shift2*x in dom1}, computed inside P
  Ideal mid = intersect(amb, s1.domain(), s2.range(amb));
  if (mid.is_empty()) return PartialIsometry::zero();
  Ideal dom = meet_with_p(amb, invert(s2.shift()), mid);
  return PartialIsometry::make(amb, std::move(dom), multiply(s1.shift(), s2.shift()));
}

PartialIsometry adjoint(const Ambient& amb, const PartialIsometry& s) {
  if (s.is_zero()) return PartialIsometry::zero();
  return PartialIsometry::make(amb, s.range(amb), invert(s.shift()));
}

GroupElement g_map(const PartialIsometry& s) {
  if (s.is_zero()) throw UsageError("g_map is undefined on the zero element");
  return s.shift();
}

std::optional<GroupElement> apply(const Ambient& amb, const PartialIsometry& s,
                                  const GroupElement& x) {
  if (s.is_zero() || !ideal_contains(amb, s.domain(), x)) return std::nullopt;
  return multiply(s.shift(), x);
}

PartialIsometry from_word(const Ambient& amb, const HullWord& w) {
  PartialIsometry acc = PartialIsometry::one(amb);
  for (const HullLetter& l : w) {
    PartialIsometry v = PartialIsometry::generator(amb, amb.generators().at(static_cast<size_t>(l.gen)));
    if (l.star) v = adjoint(amb, v);
    acc = compose(amb, acc, v);
    if (acc.is_zero()) return acc;
  }
  return acc;
}

HullEnumeration hull_enumerate(const Ambient& amb, int depth, size_t cap) {
  if (depth < 0) throw UsageError("hull depth must be >= 0");
  struct Entry {
    PartialIsometry s;
    HullWord w;
  };
  std::vector<Entry> all;
  std::map<std::string, size_t> seen; // canonical key -> index

  auto key = [&](const PartialIsometry& s) {
    if (s.is_zero()) return std::string("0");
    return amb.print_element(s.shift()) + "|" + print_ideal(amb, s.domain());
  };

  bool budget_hit = false;
  std::vector<size_t> frontier;
  auto add = [&](const PartialIsometry& s, const HullWord& w) {
    if (all.size() >= cap) {
      budget_hit = true;
      return;
    }
    auto [it, fresh] = seen.emplace(key(s), all.size());
    if (!fresh) return;
    all.push_back(Entry{s, w});
    frontier.push_back(all.size() - 1);
  };

  add(PartialIsometry::zero(), HullWord{});
  frontier.clear();
  add(PartialIsometry::one(amb), HullWord{});

  size_t ngens = amb.generators().size();
  for (int round = 0; round < depth && !frontier.empty(); ++round) {
    std::vector<size_t> cur;
    cur.swap(frontier);
    for (size_t idx : cur) {
      for (size_t gi = 0; gi < 2 * ngens; ++gi) {
        HullLetter l{static_cast<int>(gi % ngens), gi >= ngens};
        PartialIsometry v = PartialIsometry::generator(amb, amb.generators()[static_cast<size_t>(l.gen)]);
        if (l.star) v = adjoint(amb, v);
        PartialIsometry next = compose(amb, all[idx].s, v);
        HullWord w = all[idx].w;
        w.push_back(l);
        add(next, w);
      }
    }
  }

  std::vector<size_t> order(all.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    return PartialIsometry::less(all[i].s, all[j].s);
  });

  HullEnumeration out;
  out.budget_hit = budget_hit;
  for (size_t i : order) {
    out.elements.push_back(all[i].s);
    out.words.push_back(all[i].w);
  }
  return out;
}

} // namespace stonework
