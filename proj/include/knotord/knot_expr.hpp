#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "knotord/laurent.hpp"

namespace knotord {

class KnotExpr;

struct Torus {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const Torus&, const Torus&) = default;
};

struct Cable {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::shared_ptr<const KnotExpr> companion;
};

struct Raw {
  LaurentPoly poly;  // symmetrized
  std::string label;
};

// Abstract syntax of a knot description. Immutable; companions are shared.
//
//   knot  := torus | cable | raw
//   torus := "T(" int "," int ")"
//   cable := "C(" int "," int ";" knot ")"
//   raw   := "poly(" polytext ")"
class KnotExpr {
 public:
  using Node = std::variant<Torus, Cable, Raw>;

  // Validating constructors; throw ValidityError.
  static KnotExpr torus(std::int64_t p, std::int64_t q);
  static KnotExpr cable(std::int64_t p, std::int64_t q, KnotExpr companion);
  static KnotExpr raw(const LaurentPoly& poly, std::string label = {});
  static KnotExpr unknot() { return raw(LaurentPoly::constant(1), "unknot"); }

  const Node& node() const { return node_; }
  bool is_torus() const { return std::holds_alternative<Torus>(node_); }
  bool is_cable() const { return std::holds_alternative<Cable>(node_); }
  bool is_raw() const { return std::holds_alternative<Raw>(node_); }
  const Torus& as_torus() const { return std::get<Torus>(node_); }
  const Cable& as_cable() const { return std::get<Cable>(node_); }
  const Raw& as_raw() const { return std::get<Raw>(node_); }

  // Number of nested cable operators.
  int cable_depth() const;

  // Canonical text form, re-parseable: "T(2,3)", "C(2,3;T(2,3))", "poly(t - 1 + t^-1)".
  std::string to_string() const;

  friend bool operator==(const KnotExpr& a, const KnotExpr& b);

 private:
  explicit KnotExpr(Node n) : node_(std::move(n)) {}
  Node node_;
};

// Whitespace-insensitive parse. Throws ParseError (with byte offset) for
// syntax errors and ValidityError for range/gcd violations.
KnotExpr parse_knot(std::string_view text);

// Stable field names: kind, p, q, companion, poly, label.
nlohmann::ordered_json to_json(const KnotExpr& k);
KnotExpr knot_from_json(const nlohmann::json& j);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace knotord
