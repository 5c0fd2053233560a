#pragma once

// Jacobian of the Hibi ideal at the coordinate points p_alpha, smoothness
// verdicts, and the checks for the three smoothness statements.

#include "latvar/diamonds.hpp"
#include "latvar/exact.hpp"
#include "latvar/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latvar {

/// The point with coordinate `value` at alpha and 0 elsewhere.
struct CoordinatePoint {
  ElementId alpha = 0;
  Rational value = 1;
};

struct JacobianRow {
  std::size_t relation;                    // index into enumerate_diamonds
  std::map<ElementId, Rational> entries;   // column -> nonzero derivative
};

/// Rows for every diamond relation; only the nonzero ones are stored.
struct JacobianAtPoint {
  std::size_t row_count = 0;
  std::size_t column_count = 0;
  std::vector<JacobianRow> rows;
};

JacobianAtPoint jacobian_at(const Lattice& lattice, const CoordinatePoint& point);
JacobianAtPoint jacobian_at(const Lattice& lattice, const std::vector<Diamond>& diamonds,
                            const CoordinatePoint& point);

/// Exact rank by elimination. Throws RankMismatch if it differs from the
/// partner count, which it must equal structurally.
std::size_t rank_at(const Lattice& lattice, const CoordinatePoint& point);
std::size_t rank_of(const JacobianAtPoint& jacobian);

enum class Verdict { Smooth, Singular };
const char* to_string(Verdict v);

struct PointVerdict {
  ElementId alpha = 0;
  std::size_t partners = 0;  // |E_alpha|
  std::size_t rank = 0;
  std::size_t codim = 0;
  Verdict verdict = Verdict::Singular;
};

/// Smooth iff rank == codim. Throws RankExceedsCodim if rank > codim.
PointVerdict is_smooth_at(const Lattice& lattice, const CoordinatePoint& point);

struct ElementReport {
  ElementId alpha = 0;
  std::vector<ElementId> partners;
  std::size_t rank = 0;
  std::size_t codim = 0;
  Verdict verdict = Verdict::Singular;
};

struct SmoothnessReport {
  std::vector<ElementReport> elements;
  /// All coordinates zero: singular unless codim is 0.
  Verdict origin = Verdict::Smooth;
  bool all_smooth = true;
  bool theorem_b_holds = true;
  /// codim - |E_alpha| -> number of elements.
  std::map<std::size_t, std::size_t> deficit_histogram;
  /// Elements with |E_alpha| > codim; always 0 unless something is broken.
  std::size_t excess = 0;

  std::vector<ElementId> singular() const;
};

/// One diamond sweep, then exact elimination at every coordinate point.
SmoothnessReport smoothness_report(const Lattice& lattice);

struct TheoremCheck {
  bool holds = true;
  std::vector<std::string> witnesses;
};

/// Every alpha with |E_alpha| >= codim is smooth.
TheoremCheck verify_theorem_a(const Lattice& lattice);
TheoremCheck verify_theorem_a(const Lattice& lattice, const SmoothnessReport& report);
/// |E_alpha| >= codim for all alpha. Throws NotSquare.
TheoremCheck verify_theorem_b(const Lattice& lattice);
/// Every coordinate point smooth and every polytope vertex unimodular.
/// Throws NotSquare, or OracleDisagreement when the two verdicts differ.
TheoremCheck verify_theorem_c(const Lattice& lattice);
TheoremCheck verify_theorem_c(const Lattice& lattice, const SmoothnessReport& report);

/// Pointwise comparison of the Jacobian verdict with vertex-cone
/// unimodularity. Returns the number of points compared; throws
/// OracleDisagreement naming the first mismatch.
std::size_t oracle_agreement(const Lattice& lattice);
std::size_t oracle_agreement(const Lattice& lattice, const SmoothnessReport& report);

}  // namespace latvar
