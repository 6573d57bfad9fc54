#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotord {

using Coeff = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

// Integer-coefficient Laurent polynomial in one variable t, kept in canonical
// sparse form: terms sorted by ascending exponent, no zero coefficients. The
// zero polynomial has no terms.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;

  static LaurentPoly constant(const Coeff& c);
  static LaurentPoly monomial(const Coeff& c, Exponent e);
  // Combines like terms and drops zeros; input order is irrelevant.
  static LaurentPoly from_terms(std::vector<std::pair<Exponent, Coeff>> terms);
  // Parses the text form, e.g. "t^3 - t^2 + 1 - t^-2 + t^-3" or "2*t - 3".
  // Throws ParseError with the byte offset of the first bad character.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Precondition for the following four: !is_zero().
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  const Coeff& leading_coefficient() const;
  const Coeff& trailing_coefficient() const;

  Coeff coefficient(Exponent e) const;
  Coeff evaluate_at_one() const;

  // t^s * f.
  LaurentPoly shifted(Exponent s) const;
  // f(t^-1).
  LaurentPoly inverted() const;

  // Text form, terms in decreasing exponent order; "0" for the zero polynomial.
  std::string to_string() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  std::vector<Term> terms_;
};

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);

// f(t^p) for p >= 1.
LaurentPoly compose_power(const LaurentPoly& f, std::int64_t p);

// Exact quotient q with q * b == a. Throws NotDivisible otherwise.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Shifts f by the unique power of t that makes it palindromic, and fixes the
// overall sign: value +1 at t = 1 when |f(1)| = 1, otherwise positive leading
// coefficient. Throws NotSymmetrizable.
LaurentPoly symmetrize(const LaurentPoly& f);

bool is_palindromic(const LaurentPoly& f);

// Exponents with nonzero coefficient, strictly decreasing.
std::vector<Exponent> exponents_desc(const LaurentPoly& f);

// Differences of neighbouring exponents in decreasing order: entry i-1 holds
// alpha_{i-1} - alpha_i for i = 1..size-1.
std::vector<Exponent> neighbour_gaps(const LaurentPoly& f);

}  // namespace knotord
