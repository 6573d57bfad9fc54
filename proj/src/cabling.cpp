#include "knotord/cabling.hpp"

#include <algorithm>
#include <string>

#include "knotord/alexander.hpp"
#include "knotord/errors.hpp"

namespace knotord {

namespace {

void require_pattern(std::int64_t p, std::int64_t q) {
  if (p < 2) throw ValidityError("cable needs p >= 2");
  if (q < 1) throw ValidityError("cable needs q >= 1");
  if (gcd64(p, q) != 1) throw ValidityError("cable needs gcd(p,q) = 1");
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  for (std::int64_t x = 1; x < m; ++x) {
    if (floor_mod(a * x, m) == 1) return x;
  }
  return 0;
}

// Geometry of the unmerged diagram, in quarter-height units so that every
// feature sits on a distinct residue class mod 4:
//   pegs                   4m
//   preimage of mu, jumps  4m + 2  (between pegs m and m+1)
//   crossings, ends        4m + 3
// Copy k hugs column x = k; its right/left arcs run at x = k +- delta and the
// joining segment towards copy k+1 runs at x = k + 1/2.
//
// Sliding the pegs horizontally into one column maps the line mu back to a
// path that climbs through the pegs in height order, jumping sideways between
// pegs m and m+1 from column(m) to column(m+1). Crossings of the cable curve
// with mu are exactly the crossings of the unmerged curve with these jumps.
class MergedColumn {
 public:
  MergedColumn(std::int64_t p, std::int64_t q) : p_(p), q_inv_(inverse_mod(floor_mod(q, p), p)) {}

  // Column whose scaled pegs p*j - k*q contain height m.
  std::int64_t column(std::int64_t m) const { return floor_mod(-floor_mod(m, p_) * q_inv_, p_); }

  enum class Lane { LeftOfColumn, RightOfColumn };

  // Appends the gaps whose jump is met by a vertical run at lane/column from
  // quarter height y_from to y_to, in traversal order.
  void run(Lane lane, std::int64_t k, std::int64_t y_from, std::int64_t y_to,
           std::vector<std::int64_t>& out) const {
    auto met = [&](std::int64_t m) {
      const std::int64_t a = std::min(column(m), column(m + 1));
      const std::int64_t b = std::max(column(m), column(m + 1));
      return lane == Lane::LeftOfColumn ? (a < k && k <= b) : (a <= k && k < b);
    };
    if (y_from > y_to) {
      for (std::int64_t m = floor_div(y_from - 3, 4); 4 * m + 2 > y_to; --m) {
        if (4 * m + 2 < y_from && met(m)) out.push_back(m);
      }
    } else {
      for (std::int64_t m = floor_div(y_from - 2, 4); 4 * m + 2 < y_to; ++m) {
        if (4 * m + 2 > y_from && met(m)) out.push_back(m);
      }
    }
  }

 private:
  static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
  }

  std::int64_t p_;
  std::int64_t q_inv_;
};

}  // namespace

ArcSummary summarize(const PegCurve& c) {
  return ArcSummary{right_arcs(c), tau_from_curve(c), eps_from_curve(c)};
}

Arc transform_noninitial(const Arc& a, std::int64_t p) {
  if (a.initial) throw InvalidArc("transform_noninitial: arc is initial");
  if (a.side != Side::Right) throw InvalidArc("transform_noninitial: not a right arc");
  if (a.length < 1) throw InvalidArc("transform_noninitial: zero-length arc");
  if (a.top_sign == Sign::Zero || a.bottom_sign == Sign::Zero) {
    throw InvalidArc("transform_noninitial: essential endpoint on a noninitial arc");
  }
  if (p < 2) throw ValidityError("cable needs p >= 2");
  const std::int64_t n = a.length;
  Arc out = a;
  const bool top_plus = a.top_sign == Sign::Plus;
  const bool bottom_plus = a.bottom_sign == Sign::Plus;
  if (!top_plus && bottom_plus) {
    out.length = p * n - p + 1;
  } else if (top_plus && !bottom_plus) {
    out.length = p * n + p - 1;
  } else {
    out.length = p * n;
  }
  return out;
}

Arc transform_initial(const Arc& a, std::int64_t p, std::int64_t q, std::int64_t tau) {
  if (!a.initial) throw InvalidArc("transform_initial: arc is not initial");
  if (a.side != Side::Right) throw InvalidArc("transform_initial: not a right arc");
  if (a.bottom_sign == Sign::Zero) throw InvalidArc("transform_initial: bottom endpoint is essential");
  require_pattern(p, q);
  const std::int64_t low = p * (2 * tau - 1);
  const std::int64_t high = 2 * p * tau;
  if (q == low || q == high) {
    throw BoundaryCase("transform_initial: q = " + std::to_string(q) + " is a regime boundary");
  }
  const std::int64_t n = a.length;
  Arc out = a;
  out.initial = false;
  const bool bottom_minus = a.bottom_sign == Sign::Minus;
  if (q < low) {
    out.length = bottom_minus ? p * n : p * n - p + 1;
    out.top_sign = Sign::Minus;
  } else if (q < high) {
    out.length = bottom_minus ? p * n + p - 2 * p * tau + q - 1 : p * n - 2 * p * tau + q;
    out.top_sign = Sign::Minus;
  } else {
    out.length = bottom_minus ? p * n + p - 1 : p * n;
    out.top_sign = Sign::Plus;
  }
  return out;
}

ArcRuleResult cable_ord_arcrule_detail(const ArcSummary& s, std::int64_t p, std::int64_t q) {
  require_pattern(p, q);
  ArcRuleResult r;
  if (s.arcs.empty()) {
    r.ord = std::min(p, q) - 1;
    return r;
  }
  if (s.epsilon != 1) {
    throw EpsilonUnsupported("arc rules for initial arcs need epsilon = 1, got " + std::to_string(s.epsilon));
  }
  std::int64_t longest = 0;
  for (const auto& a : s.arcs) {
    Arc t = a.initial ? transform_initial(a, p, q, s.tau) : transform_noninitial(a, p);
    longest = std::max(longest, t.length);
    r.transformed.push_back(t);
  }
  r.floor_dominates = p > longest;
  r.ord = std::max(longest, p);
  return r;
}

std::int64_t cable_ord_arcrule(const ArcSummary& s, std::int64_t p, std::int64_t q) {
  return cable_ord_arcrule_detail(s, p, q).ord;
}

PegCurve cable_curve_geometric(const PegCurve& c, std::int64_t p, std::int64_t q) {
  if (!c.is_monotone()) throw NonMonotoneInput("geometric cabling needs a monotone staircase curve");
  require_pattern(p, q);
  using Lane = MergedColumn::Lane;
  const MergedColumn merged(p, q);
  const auto& h = c.crossings();

  std::vector<std::int64_t> gaps;
  for (std::int64_t k = 0; k < p; ++k) {
    // Quarter heights of this copy's crossings and of its essential ends.
    std::vector<std::int64_t> y(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) y[i] = 4 * (p * (h[i] - 1) - k * q) + 3;
    const std::int64_t end = -4 * k * q - 1;

    merged.run(Lane::LeftOfColumn, k, end, y.front(), gaps);
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
      const Lane lane = i % 2 == 0 ? Lane::RightOfColumn : Lane::LeftOfColumn;
      merged.run(lane, k, y[i], y[i + 1], gaps);
    }
    merged.run(Lane::RightOfColumn, k, y.back(), end, gaps);
    if (k + 1 < p) {
      // The joining run at x = k + 1/2 meets the same jumps as the right lane.
      merged.run(Lane::RightOfColumn, k, end, end - 4 * q, gaps);
    }
  }

  std::vector<std::int64_t> reduced = reduce_zero_arcs(std::move(gaps));
  if (reduced.empty()) throw Error("internal defect: cabled curve lost all crossings");
  const auto [lo, hi] = std::minmax_element(reduced.begin(), reduced.end());
  const std::int64_t centre2 = *lo + *hi;
  if (centre2 % 2 != 0) throw Error("internal defect: cabled curve is not symmetric");
  for (auto& v : reduced) v -= centre2 / 2;
  return PegCurve(std::move(reduced));
}

OrdBounds explicit_bounds(std::int64_t ord_k, std::int64_t p) {
  return OrdBounds{std::max<std::int64_t>(0, p * (ord_k - 1)), p * (ord_k + 1) - 1};
}

ArcSummary lspace_summary(const KnotExpr& k) {
  if (!is_lspace_knot(k)) {
    throw NotLSpaceForm(k.to_string() + " is not known to be an L-space knot");
  }
  return summarize(curve_from_alexander(alexander(k)));
}

std::int64_t arcrule_ord(const KnotExpr& k) {
  if (!k.is_cable()) return ord_from_curve(curve_from_alexander(alexander(k)));
  const auto& c = k.as_cable();
  return cable_ord_arcrule(lspace_summary(*c.companion), c.p, c.q);
}

PegCurve geometric_curve(const KnotExpr& k) {
  if (!k.is_cable()) return curve_from_alexander(alexander(k));
  const auto& c = k.as_cable();
  return cable_curve_geometric(geometric_curve(*c.companion), c.p, c.q);
}

}  // namespace knotord
