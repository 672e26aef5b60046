#pragma once

#include <optional>
#include <string>

#include "tropsing/tropical_curve.hpp"

namespace tropsing {

struct SvgOptions {
  double panel = 400;     // side length of one panel in px
  double padding = 0.2;   // extra room around the curve's vertices, relative to their extent
  std::optional<Point2> singular_point = Point2{0, 0};
};

/// Cells, marked points (black) and unmarked points (white).
std::string render_subdivision_svg(const PointConfiguration& config, const MarkedSubdivision& ms,
                                   const SvgOptions& options = {});

/// Curve with weight labels on edges of weight at least two, rays clipped
/// to the viewport, and the singular point circled. The y-axis points up.
std::string render_curve_svg(const PointConfiguration& config, const TropicalCurve& curve,
                             const SvgOptions& options = {});

/// Subdivision and curve side by side.
std::string render_svg(const PointConfiguration& config, const TropicalCurve& curve, const SvgOptions& options = {});

}  // namespace tropsing
