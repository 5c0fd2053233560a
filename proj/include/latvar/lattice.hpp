#pragma once

// Distributive lattices in Birkhoff form: the order ideals of a poset J'
// ordered by inclusion, with join = union and meet = intersection.
//
// Counting convention. J' is the poset of proper join-irreducibles; it does
// not contain the lattice minimum. The join-irreducible count used
// everywhere else in the library, |J|, counts the minimum as well, so
// |J| = |J'| + 1 = the cardinality of every maximal chain, and
// codim = |L| - |J|. This is the only place the +1 is defined; everything
// else calls ji_count() or codim().

#include "latvar/poset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace latvar {

using ElementId = std::uint32_t;

class Lattice {
public:
  Lattice() = default;

  /// The proper join-irreducible poset J'.
  const Poset& base() const { return base_; }
  const std::string& name() const { return base_.name(); }

  std::size_t size() const { return elements_.size(); }
  const OrderIdeal& ideal(ElementId e) const;
  const std::vector<OrderIdeal>& ideals() const { return elements_; }

  std::optional<ElementId> find(const Bits& members) const;
  /// Throws UnknownElement when `members` is not an ideal of the base.
  ElementId element_of(const Bits& members) const;

  ElementId bottom() const { return 0; }
  ElementId top() const { return static_cast<ElementId>(elements_.size() - 1); }

  bool leq(ElementId a, ElementId b) const { return ideal(a).subset_of(ideal(b)); }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }

  /// Union / intersection of the ideals. Throws UnknownElement on bad ids.
  ElementId join(ElementId a, ElementId b) const;
  ElementId meet(ElementId a, ElementId b) const;

  /// |J'| + 1: proper join-irreducibles plus the minimum.
  std::size_t ji_count() const { return base_.size() + 1; }
  /// |L| - ji_count().
  std::size_t codim() const { return size() - ji_count(); }

  /// Principal ideal of base element `j`.
  ElementId principal(std::size_t j) const { return principal_.at(j); }
  /// Base element generating `e` when `e` is a principal ideal.
  std::optional<std::size_t> generator(ElementId e) const;
  /// J as counted by ji_count(): the bottom followed by the
  /// principal ideals in base order.
  std::vector<ElementId> join_irreducibles() const;

  /// Lattice covers, computed from the ideal structure (an ideal covers
  /// another iff it has exactly one more member).
  std::vector<ElementId> lower_covers(ElementId e) const;
  std::vector<ElementId> upper_covers(ElementId e) const;
  /// Cover test straight from the order: a < b with nothing strictly between.
  bool is_cover(ElementId a, ElementId b) const;

  /// Display name: alias when ingested from a Hasse diagram, the J' label
  /// for principal ideals, "{a,b,...}" otherwise.
  std::string name(ElementId e) const;
  /// Ideal notation "{a,b}" regardless of aliases.
  std::string ideal_text(ElementId e) const;
  /// Accepts an alias, a J' label (its principal ideal), ideal notation, or
  /// "#k" for the k-th element in canonical order.
  ElementId resolve(std::string_view id) const;

  bool has_aliases() const { return !aliases_.empty(); }
  const std::vector<std::string>& aliases() const { return aliases_; }
  void set_aliases(std::vector<std::string> aliases);

private:
  friend Lattice birkhoff(const Poset& jposet, std::size_t cap);

  void check(ElementId e) const;

  Poset base_;
  std::vector<OrderIdeal> elements_;
  std::unordered_map<Bits, ElementId> index_;
  std::vector<ElementId> principal_;
  std::vector<std::string> aliases_;
  std::unordered_map<std::string, ElementId> alias_index_;
};

/// Lattice of order ideals of `jposet`. Throws SizeLimitExceeded past `cap`.
Lattice birkhoff(const Poset& jposet, std::size_t cap = kDefaultIdealCap);

/// Chain lattice with n >= 1 elements.
Lattice chain(std::size_t n);

/// Componentwise product, realized as Birkhoff of the disjoint union of the
/// factors' J' posets. Factor i's labels are prefixed with the letter 'a'+i.
Lattice product(std::span<const Lattice> factors, std::size_t cap = kDefaultIdealCap);
Lattice product(const Lattice& a, const Lattice& b, std::size_t cap = kDefaultIdealCap);
/// A single size gives chain(n) with unprefixed labels.
Lattice chain_product(std::span<const std::size_t> sizes, std::size_t cap = kDefaultIdealCap);

/// Ingests a lattice given by its Hasse diagram. Verifies the lattice
/// property and distributivity, recovers J' as the elements with exactly one
/// lower cover, rebuilds the Birkhoff form and checks it is isomorphic to
/// the input. The input labels become element aliases.
/// Throws NotALattice or NotDistributive (with the first failing triple in
/// canonical order).
Lattice from_raw(const PosetSpec& hasse);

/// The lattice as a raw poset: element names and lattice covers.
PosetSpec hasse_diagram(const Lattice& lattice);

/// Order dual, built as Birkhoff of the dual of J'.
Lattice dual(const Lattice& lattice);
/// Element bijection L -> dual(L): an ideal maps to its complement.
std::vector<ElementId> dual_element_map(const Lattice& lattice, const Lattice& dual_lattice);

struct Triple {
  ElementId x;
  ElementId y;
  ElementId z;
};

/// First triple (canonical order) with (x v y) ^ z != (x ^ z) v (y ^ z).
std::optional<Triple> find_distributivity_violation(const Lattice& lattice);
/// First pair violating x ^ (x v y) = x or x v (x ^ y) = x (z unused).
std::optional<Triple> find_absorption_violation(const Lattice& lattice);
/// First pair where join is not the least upper bound or meet not the
/// greatest lower bound under inclusion; z is the offending bound.
std::optional<Triple> find_bound_violation(const Lattice& lattice);
/// First (x, y, beta) with beta a proper join-irreducible, x v y >= beta,
/// and neither x >= beta nor y >= beta. z holds the principal ideal of beta.
std::optional<Triple> find_join_prime_violation(const Lattice& lattice);

struct ChainSurvey {
  std::size_t chains = 0;
  std::size_t min_cardinality = 0;
  std::size_t max_cardinality = 0;
};

/// Walks every maximal chain (bottom to top along covers) depth first.
/// Throws SizeLimitExceeded after `cap` chains.
ChainSurvey survey_maximal_chains(const Lattice& lattice, std::size_t cap = 1u << 16);

/// Number of incomparable unordered pairs, by direct pair scan.
std::size_t incomparable_pair_count(const Lattice& lattice);

}  // namespace latvar
