#include "knotord/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace knotord {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

struct Frame {
  std::int64_t top = 0;     // highest height shown
  std::int64_t bottom = 0;  // lowest height shown
  std::int64_t mu_x = 0;

  std::int64_t y(std::int64_t h) const { return SvgLayout::kMargin + (top - h) * SvgLayout::kUnitsPerHeight; }
  // Half-integer heights h + 1/2.
  std::int64_t y_half(std::int64_t h) const { return y(h) - SvgLayout::kUnitsPerHeight / 2; }
};

// Horizontal run from mu out to x_far, vertical run, and back to mu, with
// rounded corners.
std::string bracket_path(const Frame& f, std::int64_t dir, std::int64_t reach, std::int64_t h1, std::int64_t h2) {
  const std::int64_t r = SvgLayout::kCornerRadius;
  const std::int64_t x0 = f.mu_x;
  const std::int64_t xf = f.mu_x + dir * reach;
  const std::int64_t y1 = f.y(h1);
  const std::int64_t y2 = f.y(h2);
  const std::int64_t vdir = y2 > y1 ? 1 : -1;
  std::ostringstream d;
  d << "M " << x0 << ' ' << y1 << " H " << xf - dir * r << " Q " << xf << ' ' << y1 << ' ' << xf << ' '
    << y1 + vdir * r << " V " << y2 - vdir * r << " Q " << xf << ' ' << y2 << ' ' << xf - dir * r << ' ' << y2
    << " H " << x0;
  return d.str();
}

// Path from a strip edge at height 0 to the crossing at height h.
std::string end_path(const Frame& f, std::int64_t dir, std::int64_t h) {
  const std::int64_t edge = f.mu_x + dir * SvgLayout::kStripWidth / 2;
  const std::int64_t y0 = f.y(0);
  std::ostringstream d;
  if (h == 0) {
    d << "M " << edge << ' ' << y0 << " H " << f.mu_x;
    return d.str();
  }
  const std::int64_t r = SvgLayout::kCornerRadius;
  const std::int64_t turn = f.mu_x + dir * (SvgLayout::kStripWidth / 2 - 2 * r);
  const std::int64_t yh = f.y(h);
  const std::int64_t vdir = yh > y0 ? 1 : -1;
  d << "M " << edge << ' ' << y0 << " H " << turn + dir * r << " Q " << turn << ' ' << y0 << ' ' << turn << ' '
    << y0 + vdir * r << " V " << yh - vdir * r << " Q " << turn << ' ' << yh << ' ' << turn - dir * r << ' ' << yh
    << " H " << f.mu_x;
  return d.str();
}

}  // namespace

std::string render_svg(const PegCurve& c) {
  const auto& xs = c.crossings();
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  Frame f;
  f.top = std::max<std::int64_t>(*hi, 0) + 1;
  f.bottom = std::min<std::int64_t>(*lo, 0) - 1;
  f.mu_x = SvgLayout::kMargin + SvgLayout::kStripWidth / 2;
  const std::int64_t width = 2 * SvgLayout::kMargin + SvgLayout::kStripWidth + SvgLayout::kLegendWidth;
  const std::int64_t height = 2 * SvgLayout::kMargin + (f.top - f.bottom) * SvgLayout::kUnitsPerHeight;
  const std::int64_t left = f.mu_x - SvgLayout::kStripWidth / 2;
  const std::int64_t right = f.mu_x + SvgLayout::kStripWidth / 2;

  const auto as = arcs(c);
  std::int64_t longest = 1;
  for (const auto& a : as) longest = std::max(longest, a.length);
  // Longer arcs reach further from mu so nested arcs stay apart.
  auto reach = [&](std::int64_t len) {
    const std::int64_t span = SvgLayout::kStripWidth / 2 - 4 * SvgLayout::kCornerRadius;
    return 2 * SvgLayout::kCornerRadius + span * len / longest;
  };

  std::map<std::string, std::string> colour;
  std::vector<std::string> legend_order;
  std::map<std::string, int> counts;
  for (const auto& a : as) {
    if (a.side != Side::Right) continue;
    const auto name = a.type_name();
    if (!colour.count(name)) {
      colour[name] = kPalette[legend_order.size() % std::size(kPalette)];
      legend_order.push_back(name);
    }
    ++counts[name];
  }

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  os << "<g class=\"strip\" stroke=\"#999999\" stroke-width=\"1\">\n";
  const std::int64_t y_top = f.y(f.top);
  const std::int64_t y_bot = f.y(f.bottom);
  os << "<line class=\"border\" x1=\"" << left << "\" y1=\"" << y_top << "\" x2=\"" << left << "\" y2=\"" << y_bot
     << "\"/>\n";
  os << "<line class=\"border\" x1=\"" << right << "\" y1=\"" << y_top << "\" x2=\"" << right << "\" y2=\"" << y_bot
     << "\"/>\n";
  os << "<line class=\"mu\" x1=\"" << f.mu_x << "\" y1=\"" << y_top << "\" x2=\"" << f.mu_x << "\" y2=\"" << y_bot
     << "\" stroke=\"#333333\" stroke-dasharray=\"4 3\"/>\n";
  os << "</g>\n";

  os << "<g class=\"labels\" font-family=\"monospace\" font-size=\"12\" fill=\"#333333\">\n";
  for (std::int64_t h = f.top; h >= f.bottom; --h) {
    os << "<text x=\"" << left - 10 << "\" y=\"" << f.y(h) + 4 << "\" text-anchor=\"end\">" << h << "</text>\n";
  }
  os << "<text x=\"" << f.mu_x + 4 << "\" y=\"" << y_top - 6 << "\">mu</text>\n";
  os << "</g>\n";

  os << "<g class=\"pegs\" fill=\"black\">\n";
  for (std::int64_t h = f.top - 1; h >= f.bottom; --h) {
    os << "<circle class=\"peg\" cx=\"" << f.mu_x << "\" cy=\"" << f.y_half(h) << "\" r=\"3\"/>\n";
  }
  os << "</g>\n";

  os << "<g class=\"curve\" fill=\"none\" stroke-width=\"2\">\n";
  os << "<path class=\"end\" stroke=\"black\" d=\"" << end_path(f, -1, xs.front()) << "\"/>\n";
  for (std::size_t i = 0; i < as.size(); ++i) {
    const auto& a = as[i];
    const bool is_right = a.side == Side::Right;
    const std::string stroke = is_right ? colour[a.type_name()] : "#555555";
    os << "<path class=\"arc " << side_name(a.side) << "\" data-type=\"" << a.type_name() << "\" stroke=\"" << stroke
       << "\" d=\"" << bracket_path(f, is_right ? 1 : -1, reach(a.length), xs[i], xs[i + 1]) << "\"/>\n";
  }
  os << "<path class=\"end\" stroke=\"black\" d=\"" << end_path(f, 1, xs.back()) << "\"/>\n";
  os << "</g>\n";

  os << "<g class=\"crossings\" fill=\"#cc0000\">\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << "<circle class=\"crossing\" cx=\"" << f.mu_x << "\" cy=\"" << f.y(xs[i]) << "\" r=\"2\"/>\n";
  }
  os << "</g>\n";

  os << "<g class=\"legend\" font-family=\"monospace\" font-size=\"12\">\n";
  const std::int64_t lx = right + SvgLayout::kMargin;
  std::int64_t ly = SvgLayout::kMargin;
  os << "<text x=\"" << lx << "\" y=\"" << ly << "\">right arcs</text>\n";
  for (const auto& name : legend_order) {
    ly += 18;
    os << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 20 << "\" y2=\"" << ly - 4
       << "\" stroke=\"" << colour[name] << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << lx + 26 << "\" y=\"" << ly << "\">" << name << " x" << counts[name] << "</text>\n";
  }
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace knotord
