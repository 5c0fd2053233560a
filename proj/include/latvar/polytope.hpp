#pragma once

// Order polytope of J': the 0/1 points x with 0 <= x_p <= 1 and x_p >= x_q
// whenever p is covered by q, i.e. the convex hull of the indicator vectors
// of order ideals. Vertices are indexed by lattice element.

#include "latvar/exact.hpp"
#include "latvar/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latvar {

struct Constraint {
  enum class Kind { Lower, Upper, Cover };
  Kind kind;
  std::size_t p;      // Lower: x_p >= 0. Upper: x_p <= 1. Cover: x_q <= x_p.
  std::size_t q = 0;  // Cover only; p is covered by q in J'
};

struct OrderPolytope {
  Poset base;
  std::size_t ambient_dim = 0;
  std::vector<Constraint> constraints;
  std::vector<Bits> vertices;  // indicator of L's element i, over base indices
  std::vector<std::pair<ElementId, ElementId>> edges;  // (u, v), u < v, sorted

  bool satisfies(const Bits& x) const;
  /// Constraints holding with equality at x, as a bitset over `constraints`.
  Bits tight(const Bits& x) const;
};

/// Constraints and vertices, then edges via polytope_edges.
OrderPolytope order_polytope(const Lattice& lattice);

/// Face test over the full vertex list: (u, v) is an edge iff no third
/// vertex is tight on every constraint tight at both. Cross-checked with the
/// criterion "u strictly inside v and v minus u connected in the Hasse graph
/// of J'"; throws CriterionMismatch when the two disagree.
std::vector<std::pair<ElementId, ElementId>> polytope_edges(const OrderPolytope& polytope);

/// The connectivity criterion alone.
std::vector<std::pair<ElementId, ElementId>> connectivity_edges(const OrderPolytope& polytope);

struct VertexConeReport {
  ElementId vertex = 0;
  std::vector<std::vector<int>> edge_directions;  // neighbour - vertex
  bool primitive = true;
  bool simple = false;
  std::optional<Integer> determinant;  // only when simple
  bool unimodular = false;
  std::string reason;  // empty when unimodular
};

VertexConeReport vertex_cone_report(const OrderPolytope& polytope, ElementId vertex);

struct ToricSmoothness {
  bool smooth = true;
  std::vector<VertexConeReport> vertices;
};

ToricSmoothness toric_smooth_all_vertices(const OrderPolytope& polytope);

/// Enumerates {0,1}^n and checks that a point is feasible iff it is an order
/// ideal and that each feasible point is a vertex (its tight normals have
/// rank n). Returns the number of feasible points; throws CriterionMismatch.
/// Throws SizeLimitExceeded for n > 20.
std::size_t verify_vertex_set(const OrderPolytope& polytope);

std::vector<int> coordinates(const OrderPolytope& polytope, ElementId vertex);

}  // namespace latvar
