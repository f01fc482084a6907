#pragma once

#include <string>
#include <vector>

namespace railyard {

struct SvgCurve {
    std::vector<std::pair<double, double>> points;  // drawn as disconnected dots
    std::string color = "#111111";
    double size = 1.6;
};

struct SvgHeatmap {
    std::vector<double> xs, ys;           // cell centers
    std::vector<std::vector<double>> z;   // z[iy][ix] in [0, zmax]
    double zmax = 2.0;
};

/// Deterministic SVG with axes; curves drawn atop the optional heatmap.
/// Throws when everything is empty.
std::string render_curves(const std::vector<SvgCurve>& curves, const SvgHeatmap* heatmap,
                          int width = 640, int height = 640);

}  // namespace railyard
