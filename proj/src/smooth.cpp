#include "latvar/smooth.hpp"

#include "latvar/classify.hpp"
#include "latvar/error.hpp"
#include "latvar/polytope.hpp"

namespace latvar {

const char* to_string(Verdict v) { return v == Verdict::Smooth ? "smooth" : "singular"; }

std::vector<ElementId> SmoothnessReport::singular() const {
  std::vector<ElementId> out;
  for (const auto& e : elements)
    if (e.verdict == Verdict::Singular) out.push_back(e.alpha);
  return out;
}

JacobianAtPoint jacobian_at(const Lattice& l, const CoordinatePoint& point) {
  return jacobian_at(l, enumerate_diamonds(l), point);
}

namespace {

// Rows for the listed diamonds only; the caller guarantees every other row is zero.
JacobianAtPoint jacobian_rows(const Lattice& l, const std::vector<Diamond>& diamonds,
                              const std::vector<std::size_t>& rows, const CoordinatePoint& point) {
  l.ideal(point.alpha);
  if (point.value == 0) throw Error(ErrorCode::InvalidArgument, "coordinate value must be nonzero");
  JacobianAtPoint j;
  j.row_count = diamonds.size();
  j.column_count = l.size();
  const Rational minus = -point.value;
  for (auto r : rows) {
    const auto rel = relation_of(diamonds[r]);
    JacobianRow row{r, {}};
    // d/dx_a of s * x_a * x_b is s * x_b, evaluated at the point; x_b is
    // zero there unless b is alpha, so only those terms are added.
    auto differentiate = [&](std::pair<ElementId, ElementId> m, int sign) {
      const Rational& v = sign > 0 ? point.value : minus;
      if (m.second == point.alpha) row.entries[m.first] += v;
      if (m.first == point.alpha) row.entries[m.second] += v;
    };
    differentiate(rel.plus_pair, 1);
    differentiate(rel.minus_pair, -1);
    std::erase_if(row.entries, [](const auto& kv) { return kv.second == 0; });
    if (!row.entries.empty()) j.rows.push_back(std::move(row));
  }
  return j;
}

// Every monomial is quadratic, so a row vanishes unless alpha is a corner.
std::vector<std::vector<std::size_t>> incidence(const Lattice& l, const std::vector<Diamond>& diamonds) {
  std::vector<std::vector<std::size_t>> out(l.size());
  for (std::size_t r = 0; r < diamonds.size(); ++r)
    for (auto e : {diamonds[r].x, diamonds[r].y, diamonds[r].top, diamonds[r].bottom}) out[e].push_back(r);
  return out;
}

}  // namespace

JacobianAtPoint jacobian_at(const Lattice& l, const std::vector<Diamond>& diamonds, const CoordinatePoint& point) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < diamonds.size(); ++r)
    if (diamonds[r].contains(point.alpha)) rows.push_back(r);
  return jacobian_rows(l, diamonds, rows, point);
}

std::size_t rank_of(const JacobianAtPoint& jac) {
  SparseEliminator elim(jac.column_count);
  for (const auto& row : jac.rows) {
    Integer lcm = 1;
    for (const auto& [col, v] : row.entries)
      if (v.get_den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    SparseRow ints;
    for (const auto& [col, v] : row.entries)
      ints.push_back({col, lcm == 1 ? v.get_num() : Integer(v.get_num() * (lcm / v.get_den()))});
    elim.add_row(std::move(ints));
  }
  return elim.rank();
}

namespace {

std::size_t checked_rank(const Lattice& l, const JacobianAtPoint& jacobian, const CoordinatePoint& point,
                         std::size_t partners) {
  const std::size_t rank = rank_of(jacobian);
  if (rank != partners)
    throw Error(ErrorCode::RankMismatch, "rank " + std::to_string(rank) + " != |E| " + std::to_string(partners) +
                                             " at '" + l.name(point.alpha) + "' in '" + l.name() + "'");
  return rank;
}

Verdict verdict_for(const Lattice& l, ElementId alpha, std::size_t rank) {
  if (rank > l.codim())
    throw Error(ErrorCode::RankExceedsCodim, "rank " + std::to_string(rank) + " > codim " +
                                                 std::to_string(l.codim()) + " at '" + l.name(alpha) + "'");
  return rank == l.codim() ? Verdict::Smooth : Verdict::Singular;
}

}  // namespace

std::size_t rank_at(const Lattice& l, const CoordinatePoint& point) {
  return checked_rank(l, jacobian_at(l, point), point, partner_set(l, point.alpha).size());
}

PointVerdict is_smooth_at(const Lattice& l, const CoordinatePoint& point) {
  PointVerdict v;
  v.alpha = point.alpha;
  v.partners = partner_set(l, point.alpha).size();
  v.rank = checked_rank(l, jacobian_at(l, point), point, v.partners);
  v.codim = l.codim();
  v.verdict = verdict_for(l, point.alpha, v.rank);
  return v;
}

SmoothnessReport smoothness_report(const Lattice& l) {
  const auto diamonds = enumerate_diamonds(l);
  const PartnerTable table = partner_table(l, diamonds);
  const auto rows = incidence(l, diamonds);
  SmoothnessReport rep;
  rep.origin = l.codim() == 0 ? Verdict::Smooth : Verdict::Singular;
  for (ElementId a = 0; a < l.size(); ++a) {
    ElementReport e;
    e.alpha = a;
    e.partners = table.partners[a];
    e.codim = l.codim();
    if (e.partners.size() > e.codim) {
      // counted before the rank check so the report shows it if that throws
      ++rep.excess;
    } else {
      ++rep.deficit_histogram[e.codim - e.partners.size()];
    }
    e.rank = checked_rank(l, jacobian_rows(l, diamonds, rows[a], {a, 1}), {a, 1}, e.partners.size());
    e.verdict = verdict_for(l, a, e.rank);
    if (e.verdict == Verdict::Singular) rep.all_smooth = false;
    if (e.partners.size() < e.codim) rep.theorem_b_holds = false;
    rep.elements.push_back(std::move(e));
  }
  return rep;
}

TheoremCheck verify_theorem_a(const Lattice& l) { return verify_theorem_a(l, smoothness_report(l)); }

TheoremCheck verify_theorem_a(const Lattice& l, const SmoothnessReport& report) {
  TheoremCheck c;
  for (const auto& e : report.elements)
    if (e.partners.size() >= e.codim && e.verdict != Verdict::Smooth) {
      c.holds = false;
      c.witnesses.push_back(l.name(e.alpha) + ": |E|=" + std::to_string(e.partners.size()) + " >= codim but singular");
    }
  return c;
}

TheoremCheck verify_theorem_b(const Lattice& l) {
  if (!is_square_lattice(l)) throw Error(ErrorCode::NotSquare, "lattice '" + l.name() + "' is not a square lattice");
  TheoremCheck c;
  const auto counts = partner_count_all(l);
  for (ElementId a = 0; a < l.size(); ++a)
    if (counts[a] < l.codim()) {
      c.holds = false;
      c.witnesses.push_back(l.name(a) + ": |E|=" + std::to_string(counts[a]) + " < codim " +
                            std::to_string(l.codim()));
    }
  return c;
}

std::size_t oracle_agreement(const Lattice& l) { return oracle_agreement(l, smoothness_report(l)); }

std::size_t oracle_agreement(const Lattice& l, const SmoothnessReport& rep) {
  const auto toric = toric_smooth_all_vertices(order_polytope(l));
  for (ElementId a = 0; a < l.size(); ++a) {
    const bool jacobian = rep.elements[a].verdict == Verdict::Smooth;
    if (jacobian != toric.vertices[a].unimodular)
      throw Error(ErrorCode::OracleDisagreement,
                  "at '" + l.name(a) + "' in '" + l.name() + "': Jacobian says " + to_string(rep.elements[a].verdict) +
                      ", vertex cone " + (toric.vertices[a].unimodular ? "unimodular" : toric.vertices[a].reason));
  }
  return l.size();
}

TheoremCheck verify_theorem_c(const Lattice& l) {
  if (!is_square_lattice(l)) throw Error(ErrorCode::NotSquare, "lattice '" + l.name() + "' is not a square lattice");
  return verify_theorem_c(l, smoothness_report(l));
}

TheoremCheck verify_theorem_c(const Lattice& l, const SmoothnessReport& report) {
  if (!is_square_lattice(l)) throw Error(ErrorCode::NotSquare, "lattice '" + l.name() + "' is not a square lattice");
  oracle_agreement(l, report);
  TheoremCheck c;
  for (const auto& e : report.elements)
    if (e.verdict != Verdict::Smooth) {
      c.holds = false;
      c.witnesses.push_back(l.name(e.alpha) + ": rank " + std::to_string(e.rank) + " < codim " +
                            std::to_string(e.codim));
    }
  return c;
}

}  // namespace latvar
