#pragma once

// Structural predicates (tree, honest, square), chain-product decomposition,
// pruning at a maximal join-irreducible, and executable forms of the pruning
// lemmas.

#include "latvar/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latvar {

/// The join-irreducible poset J = J' plus the lattice minimum, read off the
/// lattice itself: elements with exactly one lower cover, plus the bottom,
/// ordered as lattice elements. Labels are element names.
Poset ji_poset_with_root(const Lattice& lattice);

/// Lattice element behind each vertex of ji_poset_with_root, in poset order.
std::vector<ElementId> ji_elements(const Lattice& lattice);

/// Every cover of J is also a cover of L.
bool is_honest(const Lattice& lattice);
/// The Hasse graph of J (root included) is a tree.
bool is_tree_lattice(const Lattice& lattice);
/// Tree lattice whose non-root J vertices all have degree <= 2.
bool is_square_lattice(const Lattice& lattice);
/// is_tree_lattice(L) == is_honest(L).
bool verify_tree_honest_equivalence(const Lattice& lattice);
/// In a tree lattice every non-root element of J has exactly one lower
/// cover in J. Vacuously true for non-tree lattices.
bool unique_lower_cover_in_tree(const Lattice& lattice);

struct ChainDecomposition {
  /// n_i = branch length + 1, one per branch off the root.
  std::vector<std::size_t> factor_sizes;
  /// J' indices of each branch, bottom to top.
  std::vector<std::vector<std::size_t>> branches;
  /// Position of each element in every chain factor: |I_alpha ∩ branch_i|.
  std::vector<std::vector<std::size_t>> coordinates;
};

/// Splits the J tree at the root into chains and verifies that the
/// coordinate map is a lattice isomorphism onto the product. Throws NotSquare.
ChainDecomposition decompose_chain_product(const Lattice& lattice);

struct PruneResult {
  std::size_t beta = 0;                 // index in lattice.base()
  Lattice sublattice;                   // Birkhoff of J' minus beta
  std::vector<ElementId> complement;    // L minus the image, ascending
  std::vector<ElementId> embedding;     // sublattice element -> L element
};

/// Throws NotMaximalJoinIrreducible when beta is not maximal in J', and
/// CriterionMismatch if the complement differs from the up-set of beta.
PruneResult prune(const Lattice& lattice, std::size_t beta);

/// Maximal elements of J', as base indices.
std::vector<std::size_t> maximal_join_irreducibles(const Lattice& lattice);

struct BijectionCheck {
  std::size_t beta = 0;
  /// Unique lower cover of beta in J'; nullopt when it is the root.
  std::optional<std::size_t> predecessor;
  std::size_t source_size = 0;  // |B_beta1| inside the pruned lattice
  std::size_t target_size = 0;  // |B_beta|
  bool isomorphic = false;
};

/// x -> x v beta from the up-set of beta's predecessor in L_beta onto the
/// up-set of beta in L. Throws NoUniquePredecessor when beta has two or more
/// lower covers in J'.
BijectionCheck verify_bijection_lemma(const Lattice& lattice, std::size_t beta);

struct LemmaRow {
  ElementId alpha = 0;        // element of L (inside the pruned part)
  std::size_t gained = 0;     // |E_alpha(L)| - |E_alpha(L_beta)|
  std::size_t bound = 0;      // right-hand side of the inequality
  bool holds = false;
  bool equality = false;
  std::string note;           // construction failures, empty when clean
};

struct LemmaReport {
  std::size_t beta = 0;
  std::vector<LemmaRow> rows;
  std::size_t violations = 0;
  std::size_t strict = 0;     // rows with gained > bound
};

/// gained >= |L| - |L_beta| - 1 for every alpha in L_beta. Throws NotSquare.
LemmaReport verify_lemma_inequality(const Lattice& lattice, std::size_t beta);

/// gained >= |B_beta| - 1, re-running the three-case diamond construction
/// for every b1 in B_beta other than b = min{g in B_beta : g >= alpha}.
/// Throws NotSquare.
LemmaReport verify_lemma_greater(const Lattice& lattice, std::size_t beta);

struct ClassificationReport {
  bool tree = false;
  bool honest = false;
  bool square = false;
  std::optional<std::vector<std::size_t>> factors;
  std::vector<std::string> lemma_violations;
};

/// All predicates; on square lattices also runs the pruning lemmas at every
/// maximal join-irreducible and lists any violation.
ClassificationReport classify(const Lattice& lattice);

}  // namespace latvar
