#pragma once

#include <cstdint>

#include <json.hpp>

#include "knotord/knot_expr.hpp"
#include "knotord/laurent.hpp"

namespace knotord {

// Invariants read off an Alexander polynomial of L-space form.
struct LSpaceProfile {
  std::int64_t genus = 0;
  std::int64_t ord = 0;
  std::int64_t tau = 0;
  int epsilon = 0;
  bool is_lspace_form = false;
};

// Symmetrized (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)). Returns 1 when
// either index is 1.
LaurentPoly torus_alexander(std::int64_t p, std::int64_t q);

// Recursive evaluation of the cabling formula
//   Delta_{K_{p,q}}(t) = Delta_K(t^p) * Delta_{T_{p,q}}(t).
LaurentPoly alexander(const KnotExpr& k);

// All coefficients +-1, signs alternating from a leading +1, odd term count,
// palindromic.
bool is_lspace_form(const LaurentPoly& d);

// Largest difference of neighbouring exponents (0 for d = 1). Throws
// NotLSpaceForm.
std::int64_t ord_from_alexander(const LaurentPoly& d);

// Top exponent. Throws NotLSpaceForm.
std::int64_t genus_from_alexander(const LaurentPoly& d);

// Gap maximum without the L-space precondition. Only meaningful as a form
// check when the polynomial does not come from an L-space knot.
std::int64_t gap_maximum(const LaurentPoly& d);

// The (p,q)-cable of an L-space knot of genus g is an L-space knot iff
// q >= p(2g - 1).
bool lspace_cable_guard(std::int64_t g, std::int64_t p, std::int64_t q);

// True iff, after shifting the lowest exponent to 0, the three lowest terms
// are 1 - t + t^b. Throws NotLSpaceForm when d is not of L-space form or d = 1.
bool leading_form_check(const LaurentPoly& d, std::int64_t b);

LSpaceProfile lspace_profile(const LaurentPoly& d);

// Whether the expression denotes an L-space knot as far as this library can
// tell: torus knots are; raw polynomials are trusted when of L-space form;
// cables need an L-space companion and the cable guard.
bool is_lspace_knot(const KnotExpr& k);

nlohmann::ordered_json to_json(const LSpaceProfile& p);

}  // namespace knotord
