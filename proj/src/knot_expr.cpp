#include "knotord/knot_expr.hpp"

#include <cctype>
#include <numeric>

#include "knotord/errors.hpp"

namespace knotord {

namespace {

class KnotReader {
 public:
  explicit KnotReader(std::string_view text) : text_(text) {}

  KnotExpr read_all() {
    KnotExpr k = read_knot();
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    return k;
  }

 private:
  KnotExpr read_knot() {
    skip_ws();
    if (at_end()) throw ParseError("expected a knot expression", pos_);
    if (text_.substr(pos_, 4) == "poly") {
      pos_ += 4;
      return read_raw();
    }
    const char c = peek();
    if (c == 'T') {
      ++pos_;
      expect('(');
      const auto p = read_int();
      expect(',');
      const auto q = read_int();
      expect(')');
      return KnotExpr::torus(p, q);
    }
    if (c == 'C') {
      ++pos_;
      expect('(');
      const auto p = read_int();
      expect(',');
      const auto q = read_int();
      expect(';');
      KnotExpr companion = read_knot();
      expect(')');
      return KnotExpr::cable(p, q, std::move(companion));
    }
    throw ParseError("expected 'T(', 'C(' or 'poly('", pos_);
  }

  KnotExpr read_raw() {
    expect('(');
    const std::size_t start = pos_;
    int depth = 0;
    while (!at_end()) {
      const char c = peek();
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    if (at_end()) throw ParseError("unterminated poly(", pos_);
    const std::string_view body = text_.substr(start, pos_ - start);
    ++pos_;
    LaurentPoly poly;
    try {
      poly = LaurentPoly::parse(body);
    } catch (const ParseError& e) {
      throw ParseError("bad polynomial", start + e.offset());
    }
    std::string label(body);
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front()))) label.erase(0, 1);
    return KnotExpr::raw(poly, label);
  }

  std::int64_t read_int() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = text_[pos_++] == '-';
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected an integer", pos_);
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, text_[pos_] - '0', &v)) {
        throw ParseError("integer out of range", start);
      }
      ++pos_;
    }
    return negative ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

KnotExpr KnotExpr::torus(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) {
    throw ValidityError("T(" + std::to_string(p) + "," + std::to_string(q) + "): need p, q >= 2");
  }
  if (gcd64(p, q) != 1) {
    throw ValidityError("T(" + std::to_string(p) + "," + std::to_string(q) + "): p and q share factor " +
                        std::to_string(gcd64(p, q)));
  }
  return KnotExpr(Torus{p, q});
}

KnotExpr KnotExpr::cable(std::int64_t p, std::int64_t q, KnotExpr companion) {
  const std::string where = "C(" + std::to_string(p) + "," + std::to_string(q) + ";...)";
  if (p < 2) throw ValidityError(where + ": need p >= 2");
  if (q < 1) throw ValidityError(where + ": need q >= 1");
  if (gcd64(p, q) != 1) {
    throw ValidityError(where + ": p and q share factor " + std::to_string(gcd64(p, q)));
  }
  return KnotExpr(Cable{p, q, std::make_shared<const KnotExpr>(std::move(companion))});
}

KnotExpr KnotExpr::raw(const LaurentPoly& poly, std::string label) {
  LaurentPoly sym;
  try {
    sym = symmetrize(poly);
  } catch (const NotSymmetrizable&) {
    throw ValidityError("poly(" + poly.to_string() + "): not symmetrizable");
  }
  if (label.empty()) label = sym.to_string();
  return KnotExpr(Raw{std::move(sym), std::move(label)});
}

int KnotExpr::cable_depth() const {
  if (const auto* c = std::get_if<Cable>(&node_)) return 1 + c->companion->cable_depth();
  return 0;
}

std::string KnotExpr::to_string() const {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Torus>) {
          return "T(" + std::to_string(n.p) + "," + std::to_string(n.q) + ")";
        } else if constexpr (std::is_same_v<T, Cable>) {
          return "C(" + std::to_string(n.p) + "," + std::to_string(n.q) + ";" + n.companion->to_string() + ")";
        } else {
          return "poly(" + n.poly.to_string() + ")";
        }
      },
      node_);
}

bool operator==(const KnotExpr& a, const KnotExpr& b) {
  if (a.node_.index() != b.node_.index()) return false;
  if (a.is_torus()) return a.as_torus() == b.as_torus();
  if (a.is_raw()) return a.as_raw().poly == b.as_raw().poly;
  const auto& ca = a.as_cable();
  const auto& cb = b.as_cable();
  return ca.p == cb.p && ca.q == cb.q && *ca.companion == *cb.companion;
}

KnotExpr parse_knot(std::string_view text) { return KnotReader(text).read_all(); }

nlohmann::ordered_json to_json(const KnotExpr& k) {
  nlohmann::ordered_json j;
  if (k.is_torus()) {
    j["kind"] = "torus";
    j["p"] = k.as_torus().p;
    j["q"] = k.as_torus().q;
  } else if (k.is_cable()) {
    j["kind"] = "cable";
    j["p"] = k.as_cable().p;
    j["q"] = k.as_cable().q;
    j["companion"] = to_json(*k.as_cable().companion);
  } else {
    j["kind"] = "raw";
    j["poly"] = k.as_raw().poly.to_string();
    j["label"] = k.as_raw().label;
  }
  return j;
}

KnotExpr knot_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "torus") return KnotExpr::torus(j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>());
  if (kind == "cable") {
    return KnotExpr::cable(j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>(),
                           knot_from_json(j.at("companion")));
  }
  if (kind == "raw") {
    return KnotExpr::raw(LaurentPoly::parse(j.at("poly").get<std::string>()), j.value("label", std::string{}));
  }
  throw ValidityError("unknown knot kind '" + kind + "'");
}

}  // namespace knotord
