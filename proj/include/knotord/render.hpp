#pragma once

#include <string>

#include "knotord/curve.hpp"

namespace knotord {

// Layout constants for render_svg, in SVG user units.
struct SvgLayout {
  static constexpr int kUnitsPerHeight = 40;
  static constexpr int kStripWidth = 400;
  static constexpr int kCornerRadius = 8;
  static constexpr int kMargin = 60;
  static constexpr int kLegendWidth = 200;
};

// Strip picture of a peg curve: mu as the vertical centre line, strip borders,
// pegs at half-integer heights, crossings marked, right arcs coloured by type
// with a legend. Identical curves give identical bytes.
std::string render_svg(const PegCurve& c);

}  // namespace knotord
