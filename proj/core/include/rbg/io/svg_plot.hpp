#pragma once

#include "rbg/types.hpp"

#include <string>
#include <vector>

namespace rbg::io {

/// One polyline of a plot.
struct PlotSeries {
    std::string label;
    Vector x;
    Vector y;
};

/// Writes a static SVG line chart (fixed palette, axes, legend). Output is
/// deterministic for identical inputs.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series);

} // namespace rbg::io
