#include <gtest/gtest.h>

#include "knotord/alexander.hpp"
#include "knotord/errors.hpp"
#include "oracles.hpp"

using namespace knotord;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
}  // namespace

TEST(Alexander, TorusExamples) {
  EXPECT_EQ(torus_alexander(2, 3), P("t - 1 + t^-1"));
  EXPECT_EQ(torus_alexander(3, 4), P("t^3 - t^2 + 1 - t^-2 + t^-3"));
  EXPECT_EQ(torus_alexander(2, 5), P("t^2 - t + 1 - t^-1 + t^-2"));
  EXPECT_TRUE(torus_alexander(1, 7).is_one());
}

TEST(Alexander, TorusMatchesDenseOracle) {
  for (std::int64_t p = 2; p <= 12; ++p) {
    for (std::int64_t q = 2; q <= 15; ++q) {
      if (gcd64(p, q) != 1) continue;
      const auto d = torus_alexander(p, q);
      EXPECT_EQ(d, oracle::from_dense(oracle::torus(p, q))) << p << "," << q;
      EXPECT_EQ(d, torus_alexander(q, p));
      EXPECT_EQ(genus_from_alexander(d), (p - 1) * (q - 1) / 2);
    }
  }
}

TEST(Alexander, CablingFormula) {
  EXPECT_EQ(alexander(parse_knot("C(2,3;T(2,3))")), P("t^3 - t^2 + 1 - t^-2 + t^-3"));
  EXPECT_EQ(alexander(parse_knot("T(3,4)")), P("t^3 - t^2 + 1 - t^-2 + t^-3"));
  EXPECT_TRUE(alexander(KnotExpr::unknot()).is_one());
  const auto companion = oracle::torus(3, 4);
  EXPECT_EQ(alexander(parse_knot("C(2,11;T(3,4))")), oracle::from_dense(oracle::cable(companion, 2, 11)));
  EXPECT_EQ(alexander(parse_knot("C(3,1;T(3,4))")), oracle::from_dense(oracle::cable(companion, 3, 1)));
}

TEST(Alexander, LSpaceForm) {
  EXPECT_TRUE(is_lspace_form(P("t - 1 + t^-1")));
  EXPECT_FALSE(is_lspace_form(P("t^2 - 3*t + 5 - 3*t^-1 + t^-2")));
  EXPECT_TRUE(is_lspace_form(P("1")));
  EXPECT_FALSE(is_lspace_form(P("-t + 3 - t^-1")));
  EXPECT_FALSE(is_lspace_form(P("t^2 - t^1 + 1")));
}

TEST(Alexander, OrdAndGenus) {
  EXPECT_EQ(ord_from_alexander(P("t - 1 + t^-1")), 1);
  EXPECT_EQ(ord_from_alexander(P("t^3 - t^2 + 1 - t^-2 + t^-3")), 2);
  EXPECT_EQ(ord_from_alexander(P("1")), 0);
  EXPECT_EQ(genus_from_alexander(P("t - 1 + t^-1")), 1);
  EXPECT_EQ(genus_from_alexander(alexander(parse_knot("C(2,3;T(2,3))"))), 3);
  EXPECT_EQ(genus_from_alexander(P("1")), 0);
  EXPECT_THROW(ord_from_alexander(P("t^2 - 3*t + 5 - 3*t^-1 + t^-2")), NotLSpaceForm);
}

TEST(Alexander, TorusOrdIsMinMinusOne) {
  for (std::int64_t p = 2; p <= 15; ++p) {
    for (std::int64_t q = p + 1; q <= 15; ++q) {
      if (gcd64(p, q) != 1) continue;
      const auto d = torus_alexander(p, q);
      ASSERT_TRUE(is_lspace_form(d));
      EXPECT_EQ(ord_from_alexander(d) + 1, p) << p << "," << q;
      EXPECT_EQ(ord_from_alexander(d), oracle::max_gap(oracle::torus(p, q)));
    }
  }
}

TEST(Alexander, CableGuard) {
  EXPECT_TRUE(lspace_cable_guard(1, 2, 3));
  EXPECT_FALSE(lspace_cable_guard(3, 2, 7));
  EXPECT_TRUE(lspace_cable_guard(0, 5, 1));
  EXPECT_TRUE(lspace_cable_guard(3, 2, 10));
}

TEST(Alexander, GuardMatchesFormOfCablePolynomial) {
  for (const char* k : {"T(2,3)", "T(2,5)", "T(3,4)", "T(3,5)"}) {
    const auto companion = parse_knot(k);
    const auto g = genus_from_alexander(alexander(companion));
    for (std::int64_t p = 2; p <= 4; ++p) {
      for (std::int64_t q = 1; q <= 2 * p * g + 3; ++q) {
        if (gcd64(p, q) != 1) continue;
        const auto d = alexander(KnotExpr::cable(p, q, companion));
        if (lspace_cable_guard(g, p, q)) {
          EXPECT_TRUE(is_lspace_form(d)) << k << " " << p << "," << q;
        }
      }
    }
  }
}

TEST(Alexander, LeadingFormCheck) {
  EXPECT_TRUE(leading_form_check(alexander(parse_knot("C(2,11;T(3,4))")), 6));
  EXPECT_FALSE(leading_form_check(alexander(parse_knot("C(2,3;T(2,3))")), 4));
  EXPECT_TRUE(leading_form_check(P("t - 1 + t^-1"), 2));
  EXPECT_THROW(leading_form_check(P("1"), 2), NotLSpaceForm);
}

TEST(Alexander, LSpaceKnotPredicate) {
  EXPECT_TRUE(is_lspace_knot(parse_knot("T(2,3)")));
  EXPECT_TRUE(is_lspace_knot(parse_knot("C(2,3;T(2,3))")));
  EXPECT_FALSE(is_lspace_knot(parse_knot("C(2,1;T(2,3))")));
  // The outer guard needs q >= 2(2*11 - 1) = 42.
  EXPECT_FALSE(is_lspace_knot(parse_knot("C(2,31;C(2,11;T(3,4)))")));
  EXPECT_TRUE(is_lspace_knot(parse_knot("C(2,43;C(2,11;T(3,4)))")));
  EXPECT_FALSE(is_lspace_knot(parse_knot("C(2,43;C(2,7;T(3,4)))")));
}

TEST(Alexander, Profile) {
  const auto prof = lspace_profile(P("t^3 - t^2 + 1 - t^-2 + t^-3"));
  EXPECT_TRUE(prof.is_lspace_form);
  EXPECT_EQ(prof.genus, 3);
  EXPECT_EQ(prof.ord, 2);
  EXPECT_EQ(prof.tau, 3);
  EXPECT_EQ(prof.epsilon, 1);
}
