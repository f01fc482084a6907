#include "railyard/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace railyard {

std::string render_curves(const std::vector<SvgCurve>& curves, const SvgHeatmap* heatmap,
                          int width, int height) {
    bool any = heatmap && !heatmap->xs.empty();
    for (const auto& c : curves) any = any || !c.points.empty();
    if (!any) throw std::invalid_argument("render_curves: empty dataset");

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& c : curves)
        for (auto [x, y] : c.points) grow(x, y);
    if (heatmap)
        for (double x : heatmap->xs)
            for (double y : heatmap->ys) grow(x, y);
    double padx = 0.05 * (xmax - xmin + 1e-12), pady = 0.05 * (ymax - ymin + 1e-12);
    xmin -= padx, xmax += padx, ymin -= pady, ymax += pady;

    const int ml = 46, mb = 36, mt = 12, mr = 12;
    double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (heatmap && !heatmap->xs.empty()) {
        double cw = pw / heatmap->xs.size(), chh = ph / heatmap->ys.size();
        for (size_t iy = 0; iy < heatmap->ys.size(); ++iy) {
            for (size_t ix = 0; ix < heatmap->xs.size(); ++ix) {
                double v = std::clamp(heatmap->z[iy][ix] / heatmap->zmax, 0.0, 1.0);
                int shade = static_cast<int>(std::lround(245 - 180 * v));
                os << "<rect x=\"" << px(heatmap->xs[ix]) - cw / 2 << "\" y=\""
                   << py(heatmap->ys[iy]) - chh / 2 << "\" width=\"" << cw << "\" height=\"" << chh
                   << "\" fill=\"rgb(" << shade << "," << shade << "," << shade << ")\"/>\n";
            }
        }
    }

    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
       << mt + ph << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
       << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        double x = xmin + (xmax - xmin) * k / 4.0;
        double y = ymin + (ymax - ymin) * k / 4.0;
        os << "<text x=\"" << px(x) << "\" y=\"" << height - 14
           << "\" font-size=\"11\" text-anchor=\"middle\">" << x << "</text>\n";
        os << "<text x=\"" << 6 << "\" y=\"" << py(y) + 4 << "\" font-size=\"11\">" << y
           << "</text>\n";
    }

    for (const auto& c : curves)
        for (auto [x, y] : c.points)
            os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << c.size
               << "\" fill=\"" << c.color << "\"/>\n";

    os << "</svg>\n";
    return os.str();
}

}  // namespace railyard
