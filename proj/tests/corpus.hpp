#pragma once

// Generated L-space-form polynomials shared by the property tests.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knotord/alexander.hpp"
#include "knotord/knot_expr.hpp"

namespace corpus {

// Torus knots and guarded cables of depth 1 and 2, deduplicated by polynomial.
inline std::vector<std::pair<knotord::KnotExpr, knotord::LaurentPoly>> lspace_knots() {
  using knotord::KnotExpr;
  std::vector<std::pair<KnotExpr, knotord::LaurentPoly>> out;
  std::set<std::string> seen;
  auto add = [&](const KnotExpr& k) {
    auto d = knotord::alexander(k);
    if (seen.insert(d.to_string()).second) out.emplace_back(k, std::move(d));
  };
  std::vector<KnotExpr> tori;
  for (std::int64_t a = 2; a <= 10; ++a) {
    for (std::int64_t b = a + 1; b <= 17; ++b) {
      if (knotord::gcd64(a, b) == 1) tori.push_back(KnotExpr::torus(a, b));
    }
  }
  for (const auto& t : tori) add(t);
  auto guarded_cables = [](const KnotExpr& k, std::int64_t p_max, int count) {
    std::vector<KnotExpr> cables;
    const auto g = knotord::genus_from_alexander(knotord::alexander(k));
    for (std::int64_t p = 2; p <= p_max; ++p) {
      int taken = 0;
      for (std::int64_t q = p * (2 * g - 1); taken < count; ++q) {
        if (knotord::gcd64(p, q) != 1) continue;
        cables.push_back(KnotExpr::cable(p, q, k));
        ++taken;
      }
    }
    return cables;
  };
  for (std::size_t i = 0; i < tori.size() && i < 16; ++i) {
    for (const auto& c1 : guarded_cables(tori[i], 3, 4)) {
      add(c1);
      if (knotord::genus_from_alexander(knotord::alexander(c1)) <= 20) {
        for (const auto& c2 : guarded_cables(c1, 2, 1)) add(c2);
      }
    }
  }
  return out;
}

}  // namespace corpus
