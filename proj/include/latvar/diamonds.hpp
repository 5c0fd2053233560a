#pragma once

// Diamonds {x, y, x v y, x ^ y} of a distributive lattice, the binomial
// generators of its Hibi ideal, and partner sets.

#include "latvar/lattice.hpp"

#include <utility>
#include <vector>

namespace latvar {

/// Keyed by its incomparable pair, x < y in canonical order.
struct Diamond {
  ElementId x;
  ElementId y;
  ElementId top;
  ElementId bottom;

  bool contains(ElementId e) const { return e == x || e == y || e == top || e == bottom; }
};

/// x_x * x_y - x_top * x_bottom.
struct BinomialRelation {
  std::pair<ElementId, ElementId> plus_pair;
  std::pair<ElementId, ElementId> minus_pair;  // (join, meet)
};

/// Elements whose variable shares a monomial with x_alpha in some relation.
struct PartnerSet {
  ElementId alpha;
  std::vector<ElementId> partners;  // ascending

  std::size_t size() const { return partners.size(); }
};

/// One diamond per incomparable pair, ordered by (x, y).
std::vector<Diamond> enumerate_diamonds(const Lattice& lattice);

/// Monomial mate of `alpha` in `d`, if alpha occurs in one of its monomials.
std::optional<ElementId> monomial_partner(const Diamond& d, ElementId alpha);

std::vector<BinomialRelation> ideal_generators(const Lattice& lattice);
BinomialRelation relation_of(const Diamond& d);

/// Partner set of one element, computed directly from pairs around alpha.
PartnerSet partner_set(const Lattice& lattice, ElementId alpha);

/// Both readings of the incidence set per element, from one diamond sweep.
struct PartnerTable {
  /// Partner sets (monomial mates), ascending.
  std::vector<std::vector<ElementId>> partners;
  /// Number of distinct elements sharing at least one diamond with alpha.
  std::vector<std::size_t> comember_counts;
  std::size_t diamond_count = 0;
};

PartnerTable partner_table(const Lattice& lattice);
PartnerTable partner_table(const Lattice& lattice, const std::vector<Diamond>& diamonds);

/// |E_alpha| for every alpha, in element order.
std::vector<std::size_t> partner_count_all(const Lattice& lattice);

}  // namespace latvar
