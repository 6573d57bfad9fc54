#pragma once

// Lifted immersed curves of knot complements, restricted to the component
// gamma_0 that connects to the strip edges.
//
// The curve lives in the strip [-1/2, 1/2] x R. Pegs (lifts of the basepoint)
// sit on the vertical line mu = {0} x R at half-integer heights, so every
// crossing of the curve with mu is at an integer height. The curve enters
// from the left edge, crosses mu a finite (odd) number of times and leaves
// through the right edge; both ends attach at height 0. Consecutive crossings
// are joined by an arc lying alternately on the right and left of mu, the
// first one on the right.
//
// Orientation signs of an arc endpoint describe where the curve goes on the
// other side of mu after leaving the arc at that endpoint: '+' towards a
// higher crossing, '-' towards a lower one. An essential end counts as
// height 0 and gives '0' when it leaves level with the endpoint. For the trefoil staircase
//
//             left  |  right
//    1       .------+------.
//           /       |       )   right arc 1 -> 0: initial, eta_1^{--}
//    0  ---'   .----+------'           .---  right edge at height 0
//              (    |                 /
//   -1         `----+----------------'
//
// the top sign of the right arc is '-' because the essential end drops to
// height 0, and the bottom sign is '-' because the left arc continues down to
// -1. Every noninitial right arc of a monotone staircase is of type
// eta_n^{+-}: its top neighbour climbs to the previous crossing, its bottom
// neighbour descends to the next one.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knotord/laurent.hpp"

namespace knotord {

enum class Side { Left, Right };
enum class Sign { Minus, Zero, Plus };

char sign_char(Sign s);
const char* side_name(Side s);

struct Segment {
  Side side = Side::Right;
  std::int64_t pegs = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

class PegCurve {
 public:
  // Crossing heights listed along the curve from the left essential end to the
  // right one. Throws ValidityError unless the count is odd.
  explicit PegCurve(std::vector<std::int64_t> crossings);

  const std::vector<std::int64_t>& crossings() const { return crossings_; }
  const std::vector<Segment>& segments() const { return segments_; }
  std::pair<std::int64_t, std::int64_t> essential_ends() const { return {0, 0}; }

  // Strictly decreasing crossing heights.
  bool is_monotone() const;

  friend bool operator==(const PegCurve&, const PegCurve&) = default;

 private:
  std::vector<std::int64_t> crossings_;
  std::vector<Segment> segments_;
};

struct Arc {
  Side side = Side::Right;
  std::int64_t length = 0;
  Sign top_sign = Sign::Minus;
  Sign bottom_sign = Sign::Minus;
  bool initial = false;

  // "eta_3^{+-}"
  std::string type_name() const;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Staircase curve of an L-space knot: one crossing per exponent, right arcs
// between alpha_{2i} and alpha_{2i+1}, left arcs between alpha_{2i+1} and
// alpha_{2i+2}. Throws NotLSpaceForm.
PegCurve curve_from_alexander(const LaurentPoly& d);

// One arc per segment, in curve order.
std::vector<Arc> arcs(const PegCurve& c);
std::vector<Arc> right_arcs(const PegCurve& c);

std::int64_t ord_from_curve(const PegCurve& c);
// Height of the first crossing met from the left essential end; for monotone
// curves this is the highest crossing.
std::int64_t tau_from_curve(const PegCurve& c);
// +1 if the curve turns down after the tau crossing, -1 if up, 0 if it runs
// straight into the essential end.
int eps_from_curve(const PegCurve& c);

// Removes zero-length arcs: consecutive crossings at the same height bound a
// bigon with mu and cancel. Applied until no such pair remains.
std::vector<std::int64_t> reduce_zero_arcs(std::vector<std::int64_t> crossings);

nlohmann::ordered_json to_json(const PegCurve& c);
PegCurve curve_from_json(const nlohmann::json& j);

// Line-oriented dump used by golden tests and the CLI:
//   pegcurve 1
//   crossings 1 0 -1
//   arc 0 right 1 0 length=1 eta_1^{--} initial
//   arc 1 left 0 -1 length=1 eta_1^{++} initial
std::string to_text(const PegCurve& c);

}  // namespace knotord
