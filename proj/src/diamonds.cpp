#include "latvar/diamonds.hpp"

#include "latvar/error.hpp"

#include <algorithm>

namespace latvar {

std::vector<Diamond> enumerate_diamonds(const Lattice& l) {
  std::vector<Diamond> out;
  const auto n = static_cast<ElementId>(l.size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x + 1; y < n; ++y)
      if (!l.comparable(x, y)) out.push_back({x, y, l.join(x, y), l.meet(x, y)});
  return out;
}

std::optional<ElementId> monomial_partner(const Diamond& d, ElementId alpha) {
  if (alpha == d.x) return d.y;
  if (alpha == d.y) return d.x;
  if (alpha == d.top) return d.bottom;
  if (alpha == d.bottom) return d.top;
  return std::nullopt;
}

BinomialRelation relation_of(const Diamond& d) { return {{d.x, d.y}, {d.top, d.bottom}}; }

std::vector<BinomialRelation> ideal_generators(const Lattice& l) {
  std::vector<BinomialRelation> out;
  for (const auto& d : enumerate_diamonds(l)) out.push_back(relation_of(d));
  return out;
}

PartnerSet partner_set(const Lattice& l, ElementId alpha) {
  l.ideal(alpha);
  const auto n = static_cast<ElementId>(l.size());
  std::vector<bool> mark(n, false);
  std::vector<ElementId> above;
  std::vector<ElementId> below;
  for (ElementId e = 0; e < n; ++e) {
    if (e == alpha) continue;
    if (!l.comparable(e, alpha))
      mark[e] = true;  // alpha in the incomparable pair, partner e
    else if (l.leq(alpha, e))
      above.push_back(e);
    else
      below.push_back(e);
  }
  // alpha as the meet of an incomparable pair: partner is their join.
  for (std::size_t i = 0; i < above.size(); ++i)
    for (std::size_t j = i + 1; j < above.size(); ++j)
      if (!l.comparable(above[i], above[j]) && l.meet(above[i], above[j]) == alpha)
        mark[l.join(above[i], above[j])] = true;
  // alpha as the join: partner is the meet.
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = i + 1; j < below.size(); ++j)
      if (!l.comparable(below[i], below[j]) && l.join(below[i], below[j]) == alpha)
        mark[l.meet(below[i], below[j])] = true;
  PartnerSet out{alpha, {}};
  for (ElementId e = 0; e < n; ++e)
    if (mark[e]) out.partners.push_back(e);
  return out;
}

PartnerTable partner_table(const Lattice& l) { return partner_table(l, enumerate_diamonds(l)); }

PartnerTable partner_table(const Lattice& l, const std::vector<Diamond>& diamonds) {
  const std::size_t n = l.size();
  std::vector<Bits> mates(n, Bits(n));
  std::vector<Bits> comembers(n, Bits(n));
  for (const auto& d : diamonds) {
    mates[d.x].set(d.y);
    mates[d.y].set(d.x);
    mates[d.top].set(d.bottom);
    mates[d.bottom].set(d.top);
    const ElementId corners[4] = {d.x, d.y, d.top, d.bottom};
    for (auto a : corners)
      for (auto b : corners)
        if (a != b) comembers[a].set(b);
  }
  PartnerTable t;
  t.diamond_count = diamonds.size();
  t.partners.resize(n);
  t.comember_counts.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (auto v = mates[e].find_first(); v != Bits::npos; v = mates[e].find_next(v))
      t.partners[e].push_back(static_cast<ElementId>(v));
    t.comember_counts[e] = comembers[e].count();
  }
  return t;
}

std::vector<std::size_t> partner_count_all(const Lattice& l) {
  const PartnerTable t = partner_table(l);
  std::vector<std::size_t> out(t.partners.size());
  std::transform(t.partners.begin(), t.partners.end(), out.begin(), [](const auto& p) { return p.size(); });
  return out;
}

}  // namespace latvar
