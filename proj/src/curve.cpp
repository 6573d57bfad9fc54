#include "knotord/curve.hpp"

#include <algorithm>
#include <sstream>

#include "knotord/alexander.hpp"
#include "knotord/errors.hpp"

namespace knotord {

namespace {

constexpr std::int64_t kEssentialHeight = 0;

Sign direction(std::int64_t from, std::int64_t to) {
  if (to > from) return Sign::Plus;
  if (to < from) return Sign::Minus;
  return Sign::Zero;
}

}  // namespace

char sign_char(Sign s) {
  switch (s) {
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
    case Sign::Plus: return '+';
  }
  return '?';
}

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

PegCurve::PegCurve(std::vector<std::int64_t> crossings) : crossings_(std::move(crossings)) {
  if (crossings_.size() % 2 == 0) {
    throw ValidityError("a curve joining the two strip edges crosses mu an odd number of times");
  }
  segments_.reserve(crossings_.size() - 1);
  for (std::size_t i = 0; i + 1 < crossings_.size(); ++i) {
    const std::int64_t d = crossings_[i] - crossings_[i + 1];
    segments_.push_back({i % 2 == 0 ? Side::Right : Side::Left, d < 0 ? -d : d});
  }
}

bool PegCurve::is_monotone() const {
  return std::adjacent_find(crossings_.begin(), crossings_.end(),
                            [](std::int64_t a, std::int64_t b) { return a <= b; }) == crossings_.end();
}

std::string Arc::type_name() const {
  std::string s = "eta_" + std::to_string(length) + "^{";
  s += sign_char(top_sign);
  s += sign_char(bottom_sign);
  s += '}';
  return s;
}

PegCurve curve_from_alexander(const LaurentPoly& d) {
  if (!is_lspace_form(d)) throw NotLSpaceForm("not of L-space form: " + d.to_string());
  return PegCurve(exponents_desc(d));
}

std::vector<Arc> arcs(const PegCurve& c) {
  const auto& h = c.crossings();
  const std::size_t n = h.size();
  // Height reached on the far side of mu after crossing i, looking backwards
  // (towards the left end) or forwards (towards the right end).
  auto before = [&](std::size_t i) { return i == 0 ? kEssentialHeight : h[i - 1]; };
  auto after = [&](std::size_t i) { return i + 1 == n ? kEssentialHeight : h[i + 1]; };

  std::vector<Arc> out;
  out.reserve(c.segments().size());
  for (std::size_t i = 0; i < c.segments().size(); ++i) {
    const auto& seg = c.segments()[i];
    Arc a;
    a.side = seg.side;
    a.length = seg.pegs;
    a.initial = i == 0 || i + 2 == n;
    // Endpoints are crossings i and i+1; the neighbour of crossing i lies
    // before it, the neighbour of crossing i+1 after it.
    const Sign at_first = direction(h[i], before(i));
    const Sign at_second = direction(h[i + 1], after(i + 1));
    if (h[i] >= h[i + 1]) {
      a.top_sign = at_first;
      a.bottom_sign = at_second;
    } else {
      a.top_sign = at_second;
      a.bottom_sign = at_first;
    }
    out.push_back(a);
  }
  return out;
}

std::vector<Arc> right_arcs(const PegCurve& c) {
  std::vector<Arc> out;
  for (const auto& a : arcs(c)) {
    if (a.side == Side::Right) out.push_back(a);
  }
  return out;
}

std::int64_t ord_from_curve(const PegCurve& c) {
  std::int64_t best = 0;
  for (const auto& seg : c.segments()) {
    if (seg.side == Side::Right) best = std::max(best, seg.pegs);
  }
  return best;
}

std::int64_t tau_from_curve(const PegCurve& c) { return c.crossings().front(); }

int eps_from_curve(const PegCurve& c) {
  const auto& h = c.crossings();
  const std::int64_t next = h.size() > 1 ? h[1] : kEssentialHeight;
  if (next < h[0]) return 1;
  if (next > h[0]) return -1;
  return 0;
}

std::vector<std::int64_t> reduce_zero_arcs(std::vector<std::int64_t> crossings) {
  std::vector<std::int64_t> stack;
  stack.reserve(crossings.size());
  for (std::int64_t h : crossings) {
    if (!stack.empty() && stack.back() == h) {
      stack.pop_back();
    } else {
      stack.push_back(h);
    }
  }
  return stack;
}

nlohmann::ordered_json to_json(const PegCurve& c) {
  nlohmann::ordered_json j;
  j["crossings"] = c.crossings();
  j["essential_ends"] = {c.essential_ends().first, c.essential_ends().second};
  auto segs = nlohmann::ordered_json::array();
  const auto as = arcs(c);
  for (std::size_t i = 0; i < as.size(); ++i) {
    nlohmann::ordered_json s;
    s["side"] = side_name(as[i].side);
    s["from"] = c.crossings()[i];
    s["to"] = c.crossings()[i + 1];
    s["pegs"] = as[i].length;
    s["type"] = as[i].type_name();
    s["initial"] = as[i].initial;
    segs.push_back(std::move(s));
  }
  j["segments"] = std::move(segs);
  return j;
}

PegCurve curve_from_json(const nlohmann::json& j) {
  return PegCurve(j.at("crossings").get<std::vector<std::int64_t>>());
}

std::string to_text(const PegCurve& c) {
  std::ostringstream os;
  os << "pegcurve 1\ncrossings";
  for (auto h : c.crossings()) os << ' ' << h;
  os << '\n';
  const auto as = arcs(c);
  for (std::size_t i = 0; i < as.size(); ++i) {
    os << "arc " << i << ' ' << side_name(as[i].side) << ' ' << c.crossings()[i] << ' '
       << c.crossings()[i + 1] << " length=" << as[i].length << ' ' << as[i].type_name();
    if (as[i].initial) os << " initial";
    os << '\n';
  }
  return os.str();
}

}  // namespace knotord
