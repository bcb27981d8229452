#include "curvelab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "curvelab/errors.hpp"
#include "curvelab/io.hpp"

namespace curvelab {

namespace {

std::string coord(double v) { return format_fixed(v, 4); }

const char* kStyles =
    "    .base { fill: none; stroke: #222222; stroke-width: 1.5; }\n"
    "    .evolutoid { fill: none; stroke: #3366cc; stroke-width: 0.8; }\n"
    "    .ses { fill: none; stroke: #cc3333; stroke-width: 1.2; }\n"
    "    .sigma { fill: none; stroke: #aa7700; stroke-width: 1.2; }\n"
    "    .asymptote { fill: none; stroke: #339933; stroke-width: 0.6; stroke-dasharray: 4 2; }\n"
    "    .marker { fill: #cc3333; stroke: none; }\n";

}  // namespace

std::string to_string(LayerStyle style) {
  switch (style) {
    case LayerStyle::base: return "base";
    case LayerStyle::evolutoid: return "evolutoid";
    case LayerStyle::ses: return "ses";
    case LayerStyle::sigma: return "sigma";
    case LayerStyle::asymptote: return "asymptote";
    case LayerStyle::marker: return "marker";
  }
  return "unknown";
}

bool PlotLayer::empty() const noexcept {
  if (!markers.empty()) return false;
  return std::all_of(polylines.begin(), polylines.end(), [](const auto& p) { return p.empty(); });
}

std::string render_svg(const PlotScene& scene) {
  if (scene.layers.empty()) throw SpecError("layers", "a plot needs at least one layer");
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = x0;
  double x1 = -x0;
  double y1 = -x0;
  const auto grow = [&](const Vec2& p) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  };
  for (std::size_t i = 0; i < scene.layers.size(); ++i) {
    const PlotLayer& layer = scene.layers[i];
    if (layer.empty()) throw SpecError("layers/" + std::to_string(i), "layer has no points");
    for (const auto& line : layer.polylines)
      for (const Vec2& p : line) grow(p);
    for (const Marker& m : layer.markers) grow(m.at);
  }
  double w = x1 - x0;
  double h = y1 - y0;
  const double pad = 0.05 * std::max({w, h, 1e-9});
  x0 -= pad;
  y0 -= pad;
  w += 2.0 * pad;
  h += 2.0 * pad;
  const double r = 0.006 * std::max(w, h);

  // y is flipped so that the picture has the usual orientation.
  const auto px = [&](const Vec2& p) { return coord(p.x) + " " + coord(-p.y); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + coord(x0) + " " + coord(-(y0 + h)) + " " + coord(w) +
       " " + coord(h) + "\" width=\"800\" height=\"" + coord(800.0 * h / w) + "\">\n";
  s += "  <style>\n";
  s += kStyles;
  s += "  </style>\n";
  for (const PlotLayer& layer : scene.layers) {
    const std::string cls = to_string(layer.style);
    if (!layer.polylines.empty()) {
      std::string d;
      for (const auto& line : layer.polylines) {
        for (std::size_t k = 0; k < line.size(); ++k) {
          if (!d.empty()) d += " ";
          d += (k == 0 ? "M " : "L ") + px(line[k]);
        }
      }
      s += "  <path class=\"" + cls + "\" d=\"" + d + "\"/>\n";
    }
    if (!layer.markers.empty()) {
      s += "  <g class=\"marker\">\n";
      for (const Marker& m : layer.markers) {
        s += "    <circle cx=\"" + coord(m.at.x) + "\" cy=\"" + coord(-m.at.y) + "\" r=\"" + coord(r) + "\">";
        s += "<title>" + m.label + "</title></circle>\n";
      }
      s += "  </g>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

void render_svg(const PlotScene& scene, const std::string& path) { write_text_file(path, render_svg(scene)); }

}  // namespace curvelab
