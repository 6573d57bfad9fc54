#include <gtest/gtest.h>

#include "knotord/alexander.hpp"
#include "knotord/cabling.hpp"
#include "knotord/errors.hpp"
#include "oracles.hpp"

using namespace knotord;

namespace {

ArcSummary S(const char* poly) { return summarize(curve_from_alexander(LaurentPoly::parse(poly))); }
const char* kTrefoil = "t - 1 + t^-1";
const char* kT34 = "t^3 - t^2 + 1 - t^-2 + t^-3";

Arc eta(std::int64_t n, Sign top, Sign bottom, bool initial = false) {
  return Arc{Side::Right, n, top, bottom, initial};
}

// Every L-space-form polynomial of genus g: exponents {0} plus a symmetric
// subset of {1..g} that contains g.
std::vector<LaurentPoly> lspace_forms_of_genus(std::int64_t g) {
  std::vector<LaurentPoly> out;
  for (std::uint32_t mask = 0; mask < (1u << (g - 1)); ++mask) {
    std::vector<std::int64_t> pos{g};
    for (std::int64_t e = g - 1; e >= 1; --e) {
      if (mask & (1u << (e - 1))) pos.push_back(e);
    }
    std::vector<std::pair<Exponent, Coeff>> terms;
    int sign = 1;
    for (auto e : pos) {
      terms.emplace_back(e, sign);
      terms.emplace_back(-e, sign);
      sign = -sign;
    }
    terms.emplace_back(0, sign);
    out.push_back(LaurentPoly::from_terms(std::move(terms)));
  }
  return out;
}

}  // namespace

TEST(Cabling, SummaryOfTrefoil) {
  const auto s = S(kTrefoil);
  EXPECT_EQ(s.tau, 1);
  EXPECT_EQ(s.epsilon, 1);
  ASSERT_EQ(s.arcs.size(), 1u);
}

TEST(Cabling, NoninitialRules) {
  EXPECT_EQ(transform_noninitial(eta(2, Sign::Plus, Sign::Minus), 2).length, 5);
  EXPECT_EQ(transform_noninitial(eta(1, Sign::Plus, Sign::Plus), 3).length, 3);
  EXPECT_EQ(transform_noninitial(eta(3, Sign::Minus, Sign::Plus), 2).length, 5);
  EXPECT_EQ(transform_noninitial(eta(3, Sign::Minus, Sign::Minus), 2).length, 6);
  const auto t = transform_noninitial(eta(2, Sign::Plus, Sign::Minus), 2);
  EXPECT_EQ(t.top_sign, Sign::Plus);
  EXPECT_EQ(t.bottom_sign, Sign::Minus);
  EXPECT_THROW(transform_noninitial(eta(0, Sign::Plus, Sign::Minus), 2), InvalidArc);
  EXPECT_THROW(transform_noninitial(eta(1, Sign::Zero, Sign::Minus), 2), InvalidArc);
}

TEST(Cabling, InitialRules) {
  const auto a = eta(1, Sign::Minus, Sign::Minus, true);
  EXPECT_EQ(transform_initial(a, 2, 3, 1).length, 2);
  EXPECT_EQ(transform_initial(a, 2, 5, 1).length, 3);
  EXPECT_EQ(transform_initial(a, 3, 2, 1).length, 3);
  EXPECT_FALSE(transform_initial(a, 2, 5, 1).initial);
  // Both regime boundaries are multiples of p, so no coprime pattern lands on them.
  EXPECT_THROW(transform_initial(a, 2, 4, 1), ValidityError);
  EXPECT_THROW(transform_initial(eta(1, Sign::Minus, Sign::Minus, false), 2, 3, 1), InvalidArc);
}

TEST(Cabling, ArcRuleOrd) {
  EXPECT_EQ(cable_ord_arcrule(S(kTrefoil), 2, 5), 3);
  EXPECT_EQ(cable_ord_arcrule(S(kT34), 2, 7), 5);
  EXPECT_EQ(cable_ord_arcrule(S(kTrefoil), 3, 2), 3);
  EXPECT_EQ(cable_ord_arcrule(S(kTrefoil), 2, 3), 2);
  EXPECT_EQ(cable_ord_arcrule(S("1"), 3, 5), 2);
  ArcSummary eps0 = S(kTrefoil);
  eps0.epsilon = 0;
  EXPECT_THROW(cable_ord_arcrule(eps0, 2, 3), EpsilonUnsupported);
}

TEST(Cabling, GeometricExamples) {
  const auto tre = curve_from_alexander(LaurentPoly::parse(kTrefoil));
  const auto c23 = cable_curve_geometric(tre, 2, 3);
  EXPECT_EQ(ord_from_curve(c23), 2);
  EXPECT_EQ(c23, curve_from_alexander(alexander(parse_knot("C(2,3;T(2,3))"))));
  EXPECT_EQ(ord_from_curve(cable_curve_geometric(tre, 2, 5)), 3);
  EXPECT_FALSE(cable_curve_geometric(tre, 3, 2).is_monotone());
  EXPECT_THROW(cable_curve_geometric(PegCurve({-1, 0, 1}), 2, 3), NonMonotoneInput);
}

TEST(Cabling, UnknotCablesAreTorusCurves) {
  const PegCurve unknot({0});
  for (std::int64_t p = 2; p <= 7; ++p) {
    for (std::int64_t q = 2; q <= 15; ++q) {
      if (gcd64(p, q) != 1) continue;
      EXPECT_EQ(cable_curve_geometric(unknot, p, q), curve_from_alexander(torus_alexander(p, q))) << p << "," << q;
    }
  }
}

TEST(Cabling, GuardedGeometricCablesAreStaircases) {
  for (const char* k : {"T(2,3)", "T(2,5)", "T(3,4)", "T(3,5)", "C(2,3;T(2,3))"}) {
    const auto knot = parse_knot(k);
    const auto d = alexander(knot);
    const auto g = genus_from_alexander(d);
    const auto curve = curve_from_alexander(d);
    for (std::int64_t p = 2; p <= 4; ++p) {
      for (std::int64_t q = 1; q <= 2 * p * g + 3; ++q) {
        if (gcd64(p, q) != 1) continue;
        const auto cabled = cable_curve_geometric(curve, p, q);
        EXPECT_EQ(cabled.is_monotone(), lspace_cable_guard(g, p, q)) << k << " " << p << "," << q;
        if (cabled.is_monotone()) {
          EXPECT_EQ(cabled, curve_from_alexander(alexander(KnotExpr::cable(p, q, knot)))) << k << " " << p << "," << q;
        }
      }
    }
  }
}

TEST(Cabling, ArcRulesMatchGeometryOnAllSmallForms) {
  std::size_t cases = 0;
  for (std::int64_t g = 1; g <= 6; ++g) {
    for (const auto& d : lspace_forms_of_genus(g)) {
      const auto curve = curve_from_alexander(d);
      const auto summary = summarize(curve);
      for (std::int64_t p = 2; p <= 4; ++p) {
        for (std::int64_t q = 1; q <= 2 * p * g + 3; ++q) {
          if (gcd64(p, q) != 1) continue;
          ++cases;
          EXPECT_EQ(cable_ord_arcrule(summary, p, q), ord_from_curve(cable_curve_geometric(curve, p, q)))
              << d.to_string() << " " << p << "," << q;
        }
      }
    }
  }
  EXPECT_GT(cases, 1000u);
}

TEST(Cabling, MultiplicativeForStaircasesWithUnitTopGap) {
  for (std::int64_t g = 2; g <= 6; ++g) {
    for (const auto& d : lspace_forms_of_genus(g)) {
      if (neighbour_gaps(d).front() != 1) continue;
      const auto summary = summarize(curve_from_alexander(d));
      const auto ord = ord_from_alexander(d);
      for (std::int64_t p = 2; p <= 4; ++p) {
        for (std::int64_t q = 1; q <= 2 * p * g + 3; ++q) {
          if (gcd64(p, q) != 1) continue;
          EXPECT_EQ(cable_ord_arcrule(summary, p, q) + 1, p * (ord + 1)) << d.to_string() << " " << p << "," << q;
        }
      }
    }
  }
}

TEST(Cabling, GuardedArcRulesMatchBruteForceGap) {
  for (const char* k : {"T(2,3)", "T(2,5)", "T(3,4)", "T(3,7)", "T(4,5)"}) {
    const auto d = alexander(parse_knot(k));
    const auto g = genus_from_alexander(d);
    const auto summary = summarize(curve_from_alexander(d));
    const auto dense = oracle::to_dense(d);
    for (std::int64_t p = 2; p <= 4; ++p) {
      for (std::int64_t q = p * (2 * g - 1); q <= p * (2 * g - 1) + 12; ++q) {
        if (gcd64(p, q) != 1) continue;
        EXPECT_EQ(cable_ord_arcrule(summary, p, q), oracle::max_gap(oracle::cable(dense, p, q))) << k << " " << p << "," << q;
      }
    }
  }
}

TEST(Cabling, ExplicitBounds) {
  auto b = explicit_bounds(1, 2);
  EXPECT_EQ(b.low, 0);
  EXPECT_EQ(b.high, 3);
  b = explicit_bounds(2, 3);
  EXPECT_EQ(b.low, 3);
  EXPECT_EQ(b.high, 8);
  b = explicit_bounds(0, 5);
  EXPECT_EQ(b.low, 0);
  EXPECT_EQ(b.high, 4);
}

TEST(Cabling, RecursiveHelpers) {
  const auto k = parse_knot("C(2,31;C(2,11;T(3,4)))");
  EXPECT_EQ(arcrule_ord(k), ord_from_alexander(alexander(k)));
  EXPECT_EQ(ord_from_curve(geometric_curve(k)), arcrule_ord(k));
  EXPECT_THROW(lspace_summary(parse_knot("C(2,1;T(2,3))")), NotLSpaceForm);
}
