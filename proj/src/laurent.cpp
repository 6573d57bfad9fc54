#include "knotord/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "knotord/errors.hpp"

namespace knotord {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw DegreeOverflow();
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw DegreeOverflow();
  return r;
}

Exponent checked_neg(Exponent a) { return checked_mul(a, -1); }

// Recursive-descent reader for the polynomial text form.
class PolyReader {
 public:
  explicit PolyReader(std::string_view text) : text_(text) {}

  LaurentPoly read() {
    std::vector<std::pair<Exponent, Coeff>> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      terms.push_back(read_term(sign));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  std::pair<Exponent, Coeff> read_term(int sign) {
    Coeff coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_digits();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 't') throw ParseError("expected 't' after '*'", pos_);
      }
    }
    Exponent exp = 0;
    if (peek() == 't') {
      get();
      exp = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        exp = read_exponent();
      }
    } else if (!have_coeff) {
      throw ParseError("expected a term", pos_);
    }
    if (sign < 0) coeff = -coeff;
    return {exp, coeff};
  }

  Exponent read_exponent() {
    char close = 0;
    if (peek() == '(') close = ')';
    if (peek() == '{') close = '}';
    if (close) {
      get();
      skip_ws();
    }
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    std::size_t start = pos_;
    Coeff value = read_digits();
    if (value > Coeff(std::numeric_limits<Exponent>::max())) {
      throw ParseError("exponent out of range", start);
    }
    Exponent e = static_cast<Exponent>(value);
    if (close) {
      skip_ws();
      if (peek() != close) throw ParseError(std::string("expected '") + close + "'", pos_);
      get();
    }
    return negative ? -e : e;
  }

  Coeff read_digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected a digit", pos_);
    }
    Coeff v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::constant(const Coeff& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Coeff& c, Exponent e) {
  if (c == 0) return {};
  return LaurentPoly(std::vector<Term>{{e, c}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<Exponent, Coeff>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& [e, c] : terms) {
    if (!out.empty() && out.back().exp == e) {
      out.back().coeff += c;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back({e, std::move(c)});
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyReader(text).read(); }

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

Exponent LaurentPoly::min_exponent() const { return terms_.front().exp; }
Exponent LaurentPoly::max_exponent() const { return terms_.back().exp; }
const Coeff& LaurentPoly::leading_coefficient() const { return terms_.back().coeff; }
const Coeff& LaurentPoly::trailing_coefficient() const { return terms_.front().coeff; }

Coeff LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

Coeff LaurentPoly::evaluate_at_one() const {
  Coeff sum = 0;
  for (const auto& t : terms_) sum += t.coeff;
  return sum;
}

LaurentPoly LaurentPoly::shifted(Exponent s) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exp = checked_add(t.exp, s);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::inverted() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out.push_back({checked_neg(it->exp), it->coeff});
  }
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->coeff < 0;
    const Coeff magnitude = negative ? Coeff(-it->coeff) : it->coeff;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (it->exp == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << '*';
    os << 't';
    if (it->exp != 1) os << '^' << it->exp;
  }
  return os.str();
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return LaurentPoly(std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->exp < i->exp) {
      out.push_back(*j++);
    } else {
      Coeff c = i->coeff + j->coeff;
      if (c != 0) out.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<Exponent, Coeff> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      acc[checked_add(x.exp, y.exp)] += x.coeff * y.coeff;
    }
  }
  std::vector<LaurentPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) out.push_back({e, std::move(c)});
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly compose_power(const LaurentPoly& f, std::int64_t p) {
  if (p < 1) throw Error("compose_power requires p >= 1");
  std::vector<std::pair<Exponent, Coeff>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.emplace_back(checked_mul(t.exp, p), t.coeff);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Any exact quotient has exponents in [a.min - b.min, a.max - b.max].
  const Exponent lowest = checked_add(a.min_exponent(), checked_neg(b.min_exponent()));
  std::vector<std::pair<Exponent, Coeff>> quotient;
  LaurentPoly rem = a;
  while (!rem.is_zero()) {
    const Exponent e = checked_add(rem.max_exponent(), checked_neg(b.max_exponent()));
    if (e < lowest) throw NotDivisible();
    const Coeff& top = rem.leading_coefficient();
    const Coeff& lead = b.leading_coefficient();
    if (top % lead != 0) throw NotDivisible();
    Coeff c = top / lead;
    rem = rem - LaurentPoly::monomial(c, e) * b;
    quotient.emplace_back(e, std::move(c));
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

bool is_palindromic(const LaurentPoly& f) { return f == f.inverted(); }

LaurentPoly symmetrize(const LaurentPoly& f) {
  if (f.is_zero()) throw NotSymmetrizable();
  const Exponent span_sum = checked_add(f.min_exponent(), f.max_exponent());
  if (span_sum % 2 != 0) throw NotSymmetrizable();
  LaurentPoly g = f.shifted(-(span_sum / 2));
  if (!is_palindromic(g)) throw NotSymmetrizable();
  const Coeff at_one = g.evaluate_at_one();
  if (at_one == 1 || at_one == -1) {
    if (at_one < 0) g = -g;
  } else if (g.leading_coefficient() < 0) {
    g = -g;
  }
  return g;
}

std::vector<Exponent> exponents_desc(const LaurentPoly& f) {
  std::vector<Exponent> out;
  out.reserve(f.size());
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) out.push_back(it->exp);
  return out;
}

std::vector<Exponent> neighbour_gaps(const LaurentPoly& f) {
  const auto exps = exponents_desc(f);
  std::vector<Exponent> out;
  for (std::size_t i = 1; i < exps.size(); ++i) out.push_back(exps[i - 1] - exps[i]);
  return out;
}

}  // namespace knotord
