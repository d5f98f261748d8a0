#pragma once

#include <string>

#include "chartforge/layout.hpp"
#include "chartforge/raster.hpp"
#include "chartforge/spec.hpp"

namespace chartforge {

/// Standalone SVG 1.1 document; byte-identical for equal specs.
std::string render_svg(const ChartSpec& spec);
std::string render_svg(const LayoutPlan& plan);

/// 800x800 RGB raster drawn from the same layout as the SVG.
RasterImage rasterize(const ChartSpec& spec);
RasterImage rasterize(const LayoutPlan& plan);

/// Black or white, whichever reads better on `fill`.
Rgb contrast_color(Rgb fill);

}  // namespace chartforge
