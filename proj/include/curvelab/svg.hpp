#pragma once

#include <string>
#include <vector>

#include "curvelab/vec.hpp"

namespace curvelab {

enum class LayerStyle { base, evolutoid, ses, sigma, asymptote, marker };
std::string to_string(LayerStyle style);

struct Marker {
  Vec2 at;
  std::string label;
};

/// Polyline layers become one <path> each (a subpath per polyline); marker
/// layers become labelled circles.
struct PlotLayer {
  LayerStyle style{LayerStyle::base};
  std::vector<std::vector<Vec2>> polylines;
  std::vector<Marker> markers;

  bool empty() const noexcept;
};

struct PlotScene {
  std::vector<PlotLayer> layers;
};

/// Deterministic SVG text: layers in order, coordinates rounded to 1e−4,
/// viewport fitted to the data with a 5% margin, y pointing up. Throws
/// SpecError for an empty scene or an empty layer.
std::string render_svg(const PlotScene& scene);

/// render_svg followed by write_text_file; nothing is written on SpecError.
void render_svg(const PlotScene& scene, const std::string& path);

}  // namespace curvelab
