#pragma once

// Finite posets given by their cover relations, order ideals, and a few
// Hasse-graph predicates.

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace latvar {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Default cap on the number of order ideals a single enumeration may produce.
inline constexpr std::size_t kDefaultIdealCap = std::size_t{1} << 20;

/// Raw poset description: elements plus irredundant cover pairs (lo, hi).
struct PosetSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

/// Orders identifiers so that embedded digit runs compare numerically
/// ("a2" < "a10"); ties fall back to plain lexicographic order.
bool natural_less(std::string_view a, std::string_view b);

/// Downward-closed subset of a poset, as a bitset over its canonical order.
struct OrderIdeal {
  Bits members;

  bool contains(std::size_t i) const { return members.test(i); }
  std::size_t size() const { return members.count(); }
  bool subset_of(const OrderIdeal& other) const { return members.is_subset_of(other.members); }
  bool operator==(const OrderIdeal&) const = default;
};

/// Canonical ideal order: by cardinality, then lexicographically on the
/// sorted member indices.
bool canonical_less(const Bits& a, const Bits& b);

/// A validated poset. Elements are stored in canonical (natural-sorted)
/// order and the reflexive order relation is precomputed.
class Poset {
public:
  Poset() = default;

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// Index of a label; throws UnknownElement.
  std::size_t index(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;

  bool leq(std::size_t a, std::size_t b) const { return down_[b].test(a); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Principal ideal {x : x <= i}.
  const Bits& down(std::size_t i) const { return down_[i]; }
  /// Principal filter {x : x >= i}.
  const Bits& up(std::size_t i) const { return up_[i]; }
  const Bits& lower_covers(std::size_t i) const { return lower_covers_[i]; }
  const Bits& upper_covers(std::size_t i) const { return upper_covers_[i]; }

  /// Cover pairs (lo, hi) sorted by (lo, hi).
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  /// Elements in an order compatible with <= (lower elements first).
  const std::vector<std::size_t>& linear_extension() const { return linear_extension_; }

  Bits empty_set() const { return Bits(size()); }
  Bits full_set() const { return Bits(size()).set(); }

  PosetSpec spec() const;

private:
  friend Poset validate_poset(const PosetSpec& spec);

  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  std::vector<Bits> lower_covers_;
  std::vector<Bits> upper_covers_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::size_t> linear_extension_;
};

/// Validates a spec and precomputes the order. Throws DuplicateElement,
/// UnknownElement, CycleDetected, or RedundantCover; the message names the
/// offending element or pair.
Poset validate_poset(const PosetSpec& spec);

/// Every order ideal exactly once (including the empty one), sorted by
/// canonical_less. Throws SizeLimitExceeded past `cap` ideals.
std::vector<OrderIdeal> enumerate_order_ideals(const Poset& poset,
                                               std::size_t cap = kDefaultIdealCap);

/// Number of ideals without materializing them; stops counting at cap + 1.
std::size_t count_order_ideals(const Poset& poset, std::size_t cap = kDefaultIdealCap);

/// True iff the undirected Hasse graph is connected and acyclic. The empty
/// poset is not a tree.
bool hasse_is_tree(const Poset& poset);

/// Largest undirected Hasse degree over non-root vertices. Requires a unique
/// minimum (the root); throws NoUniqueMinimum otherwise.
std::size_t max_degree_except_root(const Poset& poset);

/// Same elements with every cover reversed.
Poset dualize(const Poset& poset);

/// Subposet induced on `keep`, with covers recomputed for the induced order.
Poset induced_subposet(const Poset& poset, const Bits& keep, std::string name = {});

/// Removes `root`, which must be the unique minimum. Used to turn a
/// join-irreducible poset with the lattice minimum into its proper part.
PosetSpec strip_root(const PosetSpec& spec, std::string_view root);

/// True iff `set` is downward closed.
bool is_order_ideal(const Poset& poset, const Bits& set);

}  // namespace latvar
