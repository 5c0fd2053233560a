#include "latvar/polytope.hpp"

#include "latvar/error.hpp"

#include <algorithm>
#include <numeric>

namespace latvar {

bool OrderPolytope::satisfies(const Bits& x) const {
  for (const auto& c : constraints)
    if (c.kind == Constraint::Kind::Cover && x.test(c.q) && !x.test(c.p)) return false;
  return true;
}

Bits OrderPolytope::tight(const Bits& x) const {
  Bits t(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    switch (c.kind) {
      case Constraint::Kind::Lower: t[i] = !x.test(c.p); break;
      case Constraint::Kind::Upper: t[i] = x.test(c.p); break;
      case Constraint::Kind::Cover: t[i] = x.test(c.p) == x.test(c.q); break;
    }
  }
  return t;
}

OrderPolytope order_polytope(const Lattice& l) {
  OrderPolytope p;
  p.base = l.base();
  p.ambient_dim = p.base.size();
  for (std::size_t i = 0; i < p.ambient_dim; ++i) {
    p.constraints.push_back({Constraint::Kind::Lower, i});
    p.constraints.push_back({Constraint::Kind::Upper, i});
  }
  for (auto [lo, hi] : p.base.covers()) p.constraints.push_back({Constraint::Kind::Cover, lo, hi});
  for (const auto& ideal : l.ideals()) p.vertices.push_back(ideal.members);
  p.edges = polytope_edges(p);
  return p;
}

namespace {

std::vector<std::size_t> cardinality_starts(const std::vector<Bits>& vertices, std::size_t dim) {
  // vertices are in canonical order, hence sorted by cardinality
  std::vector<std::size_t> start(dim + 2, vertices.size());
  for (std::size_t i = vertices.size(); i-- > 0;) start[vertices[i].count()] = i;
  for (std::size_t k = dim + 1; k-- > 0;) start[k] = std::min(start[k], start[k + 1]);
  return start;
}

std::vector<std::pair<ElementId, ElementId>> face_test_edges(const OrderPolytope& p) {
  const std::size_t n = p.vertices.size();
  std::vector<Bits> tight;
  tight.reserve(n);
  for (const auto& v : p.vertices) tight.push_back(p.tight(v));
  const auto start = cardinality_starts(p.vertices, p.ambient_dim);

  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId u = 0; u < n; ++u)
    for (ElementId v = u + 1; v < n; ++v) {
      const Bits common = tight[u] & tight[v];
      const std::size_t lo = (p.vertices[u] & p.vertices[v]).count();
      const std::size_t hi = (p.vertices[u] | p.vertices[v]).count();
      bool edge = true;
      for (std::size_t w = start[lo]; w < start[hi + 1] && edge; ++w)
        if (w != u && w != v && common.is_subset_of(tight[w])) edge = false;
      if (edge) out.emplace_back(u, v);
    }
  return out;
}

bool connected_in_hasse(const Poset& base, const Bits& set) {
  const auto first = set.find_first();
  if (first == Bits::npos) return false;
  Bits seen(set.size());
  std::vector<std::size_t> stack{first};
  seen.set(first);
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    const Bits next = (base.upper_covers(x) | base.lower_covers(x)) & set & ~seen;
    for (auto y = next.find_first(); y != Bits::npos; y = next.find_next(y)) {
      seen.set(y);
      stack.push_back(y);
    }
  }
  return seen == set;
}

std::vector<std::vector<ElementId>> adjacency(const OrderPolytope& p) {
  std::vector<std::vector<ElementId>> adj(p.vertices.size());
  for (auto [u, v] : p.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

VertexConeReport cone_report(const OrderPolytope& p, ElementId vertex, const std::vector<ElementId>& neighbours) {
  VertexConeReport r;
  r.vertex = vertex;
  const std::size_t n = p.ambient_dim;
  const auto base = coordinates(p, vertex);
  std::vector<SparseRow> rows;
  for (auto w : neighbours) {
    const auto other = coordinates(p, w);
    std::vector<int> dir(n);
    SparseRow row;
    int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      dir[i] = other[i] - base[i];
      g = std::gcd(g, dir[i]);
      if (dir[i] != 0) row.push_back({i, Integer(dir[i])});
    }
    if (g != 1) r.primitive = false;
    r.edge_directions.push_back(std::move(dir));
    rows.push_back(std::move(row));
  }
  r.simple = neighbours.size() == n;
  if (!r.simple) {
    r.reason = "not simple (" + std::to_string(neighbours.size()) + " edges in dimension " + std::to_string(n) + ")";
    return r;
  }
  r.determinant = sparse_determinant(rows, n);
  r.unimodular = abs(*r.determinant) == 1;
  if (!r.unimodular) r.reason = "|det| = " + Integer(abs(*r.determinant)).get_str();
  return r;
}

}  // namespace

std::vector<std::pair<ElementId, ElementId>> connectivity_edges(const OrderPolytope& p) {
  std::vector<std::pair<ElementId, ElementId>> out;
  const std::size_t n = p.vertices.size();
  for (ElementId u = 0; u < n; ++u)
    for (ElementId v = u + 1; v < n; ++v) {
      const Bits& a = p.vertices[u];
      const Bits& b = p.vertices[v];
      if (a.is_proper_subset_of(b) && connected_in_hasse(p.base, b - a)) out.emplace_back(u, v);
      else if (b.is_proper_subset_of(a) && connected_in_hasse(p.base, a - b)) out.emplace_back(u, v);
    }
  return out;
}

std::vector<std::pair<ElementId, ElementId>> polytope_edges(const OrderPolytope& p) {
  auto face = face_test_edges(p);
  const auto conn = connectivity_edges(p);
  if (face != conn) {
    std::vector<std::pair<ElementId, ElementId>> diff;
    std::set_symmetric_difference(face.begin(), face.end(), conn.begin(), conn.end(), std::back_inserter(diff));
    throw Error(ErrorCode::CriterionMismatch,
                "edge criteria disagree on vertices #" + std::to_string(diff.front().first) + " and #" +
                    std::to_string(diff.front().second));
  }
  return face;
}

std::vector<int> coordinates(const OrderPolytope& p, ElementId vertex) {
  const Bits& x = p.vertices.at(vertex);
  std::vector<int> out(p.ambient_dim);
  for (std::size_t i = 0; i < p.ambient_dim; ++i) out[i] = x.test(i) ? 1 : 0;
  return out;
}

VertexConeReport vertex_cone_report(const OrderPolytope& p, ElementId vertex) {
  if (vertex >= p.vertices.size())
    throw Error(ErrorCode::UnknownElement, "vertex #" + std::to_string(vertex) + " out of range");
  std::vector<ElementId> neighbours;
  for (auto [u, v] : p.edges) {
    if (u == vertex) neighbours.push_back(v);
    if (v == vertex) neighbours.push_back(u);
  }
  std::sort(neighbours.begin(), neighbours.end());
  return cone_report(p, vertex, neighbours);
}

ToricSmoothness toric_smooth_all_vertices(const OrderPolytope& p) {
  ToricSmoothness t;
  const auto adj = adjacency(p);
  for (ElementId v = 0; v < p.vertices.size(); ++v) {
    t.vertices.push_back(cone_report(p, v, adj[v]));
    if (!t.vertices.back().unimodular) t.smooth = false;
  }
  return t;
}

std::size_t verify_vertex_set(const OrderPolytope& p) {
  const std::size_t n = p.ambient_dim;
  if (n > 20) throw Error(ErrorCode::SizeLimitExceeded, "vertex-set check limited to dimension 20");
  std::size_t feasible = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bits x(n, mask);
    const bool ok = p.satisfies(x);
    if (ok != is_order_ideal(p.base, x))
      throw Error(ErrorCode::CriterionMismatch, "0/1 point " + std::to_string(mask) + " feasible != ideal");
    if (!ok) continue;
    ++feasible;
    const Bits t = p.tight(x);
    std::vector<SparseRow> normals;
    for (auto i = t.find_first(); i != Bits::npos; i = t.find_next(i)) {
      const auto& c = p.constraints[i];
      if (c.kind == Constraint::Kind::Cover)
        normals.push_back({{std::min(c.p, c.q), Integer(c.p < c.q ? 1 : -1)}, {std::max(c.p, c.q), Integer(c.p < c.q ? -1 : 1)}});
      else
        normals.push_back({{c.p, Integer(1)}});
    }
    if (sparse_rank(normals, n) != n)
      throw Error(ErrorCode::CriterionMismatch, "feasible 0/1 point " + std::to_string(mask) + " is not a vertex");
  }
  if (feasible != p.vertices.size())
    throw Error(ErrorCode::CriterionMismatch, "feasible 0/1 points do not match the vertex list");
  return feasible;
}

}  // namespace latvar
