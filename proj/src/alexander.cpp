#include "knotord/alexander.hpp"

#include <algorithm>

#include "knotord/errors.hpp"

namespace knotord {

namespace {

LaurentPoly t_power_minus_one(std::int64_t e) {
  return LaurentPoly::monomial(1, e) - LaurentPoly::constant(1);
}

void require_lspace(const LaurentPoly& d) {
  if (!is_lspace_form(d)) throw NotLSpaceForm("not of L-space form: " + d.to_string());
}

}  // namespace

LaurentPoly torus_alexander(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw ValidityError("torus indices must be positive");
  if (gcd64(p, q) != 1) throw ValidityError("torus indices must be coprime");
  if (p == 1 || q == 1) return LaurentPoly::constant(1);
  std::int64_t pq;
  if (__builtin_mul_overflow(p, q, &pq)) throw DegreeOverflow();
  const LaurentPoly num = t_power_minus_one(pq) * t_power_minus_one(1);
  const LaurentPoly den = t_power_minus_one(p) * t_power_minus_one(q);
  try {
    return symmetrize(divide_exact(num, den));
  } catch (const NotDivisible&) {
    throw Error("internal defect: torus Alexander quotient is not exact");
  }
}

LaurentPoly alexander(const KnotExpr& k) {
  if (k.is_raw()) return k.as_raw().poly;
  if (k.is_torus()) return torus_alexander(k.as_torus().p, k.as_torus().q);
  const auto& c = k.as_cable();
  return symmetrize(compose_power(alexander(*c.companion), c.p) * torus_alexander(c.p, c.q));
}

bool is_lspace_form(const LaurentPoly& d) {
  if (d.is_zero() || d.size() % 2 == 0) return false;
  const auto& terms = d.terms();
  if (terms.back().coeff != 1) return false;
  int expected = 1;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (it->coeff != expected) return false;
    expected = -expected;
  }
  return is_palindromic(d);
}

std::int64_t gap_maximum(const LaurentPoly& d) {
  const auto gaps = neighbour_gaps(d);
  if (gaps.empty()) return 0;
  return *std::max_element(gaps.begin(), gaps.end());
}

std::int64_t ord_from_alexander(const LaurentPoly& d) {
  require_lspace(d);
  return gap_maximum(d);
}

std::int64_t genus_from_alexander(const LaurentPoly& d) {
  require_lspace(d);
  return d.max_exponent();
}

bool lspace_cable_guard(std::int64_t g, std::int64_t p, std::int64_t q) {
  if (g == 0) return true;
  return q >= p * (2 * g - 1);
}

bool leading_form_check(const LaurentPoly& d, std::int64_t b) {
  require_lspace(d);
  if (d.is_one()) throw NotLSpaceForm("leading form is undefined for the trivial polynomial");
  const LaurentPoly shifted = d.shifted(-d.min_exponent());
  const auto& t = shifted.terms();
  return t[0].exp == 0 && t[0].coeff == 1 && t[1].exp == 1 && t[1].coeff == -1 && t[2].exp == b &&
         t[2].coeff == 1;
}

LSpaceProfile lspace_profile(const LaurentPoly& d) {
  LSpaceProfile out;
  out.is_lspace_form = is_lspace_form(d);
  if (!out.is_lspace_form) {
    if (!d.is_zero()) out.genus = std::max<std::int64_t>(0, d.max_exponent());
    return out;
  }
  out.genus = d.max_exponent();
  out.ord = gap_maximum(d);
  out.tau = out.genus;
  out.epsilon = out.genus > 0 ? 1 : 0;
  return out;
}

bool is_lspace_knot(const KnotExpr& k) {
  if (k.is_torus()) return true;
  if (k.is_raw()) return is_lspace_form(k.as_raw().poly);
  const auto& c = k.as_cable();
  if (!is_lspace_knot(*c.companion)) return false;
  return lspace_cable_guard(alexander(*c.companion).max_exponent(), c.p, c.q);
}

nlohmann::ordered_json to_json(const LSpaceProfile& p) {
  nlohmann::ordered_json j;
  j["genus"] = p.genus;
  j["ord"] = p.ord;
  j["tau"] = p.tau;
  j["epsilon"] = p.epsilon;
  j["is_lspace_form"] = p.is_lspace_form;
  return j;
}

}  // namespace knotord
