#pragma once

#include <cstdint>
#include <vector>

#include "knotord/curve.hpp"
#include "knotord/knot_expr.hpp"

namespace knotord {

// Right arcs of a curve together with the concordance data the cabling rules
// consume.
struct ArcSummary {
  std::vector<Arc> arcs;
  std::int64_t tau = 0;
  int epsilon = 0;
};

ArcSummary summarize(const PegCurve& c);

// Length map for a noninitial right arc eta_n^{ab} under (p,q)-cabling; the
// arc type is preserved. Throws InvalidArc.
Arc transform_noninitial(const Arc& a, std::int64_t p);

// Length map for an initial right arc of a curve with epsilon = 1, split into
// the regimes q < p(2tau - 1), p(2tau - 1) < q < 2p tau and q > 2p tau. The
// result is noninitial and keeps its bottom sign. Throws InvalidArc or
// BoundaryCase.
Arc transform_initial(const Arc& a, std::int64_t p, std::int64_t q, std::int64_t tau);

struct ArcRuleResult {
  std::int64_t ord = 0;
  std::vector<Arc> transformed;
  // The guaranteed length-p arc is strictly longer than every transformed arc.
  bool floor_dominates = false;
};

// Ord of the (p,q)-cable: the longest transformed right arc, floored at p.
// An empty summary (unknot) yields the torus knot value min(p,q) - 1.
// Throws EpsilonUnsupported for nonempty summaries with epsilon != 1.
ArcRuleResult cable_ord_arcrule_detail(const ArcSummary& s, std::int64_t p, std::int64_t q);
std::int64_t cable_ord_arcrule(const ArcSummary& s, std::int64_t p, std::int64_t q);

// Peg-diagram cabling of a monotone staircase: p copies scaled vertically by
// p, copy k lowered by kq, loose ends joined, peg columns merged into one and
// the result pulled tight. Throws NonMonotoneInput.
PegCurve cable_curve_geometric(const PegCurve& c, std::int64_t p, std::int64_t q);

struct OrdBounds {
  std::int64_t low = 0;
  std::int64_t high = 0;
};

// p(ord - 1) clamped at 0 <= Ord(K_{p,q}) <= p(ord + 1) - 1.
OrdBounds explicit_bounds(std::int64_t ord_k, std::int64_t p);

// Arc summary of an L-space knot, read from the staircase of its Alexander
// polynomial. Throws NotLSpaceForm when the expression is not known to be an
// L-space knot (e.g. an intermediate cable outside the guard).
ArcSummary lspace_summary(const KnotExpr& k);

// Engine B on an expression: the outermost cable by arc rules, companions via
// lspace_summary. For non-cables, the curve's Ord.
std::int64_t arcrule_ord(const KnotExpr& k);

// Engine C on an expression: curves of base knots from their polynomials,
// every cable operator applied geometrically.
PegCurve geometric_curve(const KnotExpr& k);

}  // namespace knotord
