#include "railyard/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace railyard {

bool ContourSpec::contains(const Complex& z) const {
    for (const auto& c : components)
        if (std::abs(z - c.center) < c.radius) return true;
    return false;
}

std::string ContourSpec::validate() const {
    std::ostringstream os;
    for (size_t i = 0; i < components.size(); ++i) {
        if (components[i].radius <= 0) os << "component " << i << " has nonpositive radius; ";
        for (size_t j = i + 1; j < components.size(); ++j) {
            double d = std::abs(components[i].center - components[j].center);
            if (d <= components[i].radius + components[j].radius)
                os << "components " << i << " and " << j << " intersect; ";
        }
    }
    for (const auto& p : required_inside)
        if (!contains(p)) os << "required-inside point (" << p.real() << "," << p.imag() << ") escapes; ";
    for (const auto& p : required_outside)
        if (contains(p)) os << "required-outside point (" << p.real() << "," << p.imag() << ") is enclosed; ";
    // points must also stay clear of the curves themselves
    for (const auto& c : components) {
        auto near_curve = [&](const Complex& p) {
            return std::abs(std::abs(p - c.center) - c.radius) < 1e-9 * (1.0 + c.radius);
        };
        for (const auto& p : required_inside)
            if (near_curve(p)) os << "a required-inside point lies on a component; ";
        for (const auto& p : required_outside)
            if (near_curve(p)) os << "a required-outside point lies on a component; ";
    }
    return os.str();
}

namespace {

Complex circle_sum(const std::function<Complex(Complex)>& f, const Circle& c, long n) {
    // (1/2 pi i) oint f dz = (r / n) sum f(center + r e^{i th_k}) e^{i th_k}
    Complex acc = 0.0;
    for (long k = 0; k < n; ++k) {
        double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        Complex e(std::cos(th), std::sin(th));
        acc += f(c.center + c.radius * e) * e;
    }
    return acc * (c.radius / static_cast<double>(n));
}

}  // namespace

QuadratureResult integrate_contour(const std::function<Complex(Complex)>& f,
                                   const ContourSpec& contour, double tol, long node_cap) {
    std::string bad = contour.validate();
    if (!bad.empty()) throw std::invalid_argument("integrate_contour: invalid contour: " + bad);
    QuadratureResult res;
    res.value = 0.0;
    for (const auto& c : contour.components) {
        long n = 64;
        Complex prev = circle_sum(f, c, n);
        for (;;) {
            n *= 2;
            Complex cur = circle_sum(f, c, n);
            double err = std::abs(cur - prev);
            if (err <= tol * (1.0 + std::abs(cur))) {
                res.value += cur;
                res.error_estimate += err;
                res.nodes_used += n;
                break;
            }
            if (n >= node_cap)
                throw std::runtime_error(
                    "integrate_contour: no convergence at node cap (err=" + std::to_string(err) +
                    ", radius=" + std::to_string(c.radius) + ")");
            prev = cur;
        }
    }
    return res;
}

namespace {

double min_modulus(const std::vector<Complex>& v) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& z : v) m = std::min(m, std::abs(z));
    return m;
}

double max_modulus(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace

ContourSpec make_contour(const std::vector<Complex>& inside, const std::vector<Complex>& outside,
                         double min_gap) {
    ContourSpec spec;
    spec.required_inside = inside;
    spec.required_outside = outside;

    double rin = max_modulus(inside);
    double rout = outside.empty() ? std::numeric_limits<double>::infinity() : min_modulus(outside);
    if (rout > rin * (1.0 + min_gap) && rout > rin + 1e-300) {
        double radius = std::isinf(rout) ? (rin == 0.0 ? 1.0 : 2.0 * rin)
                                         : std::sqrt(std::max(rin, 1e-12) * rout);
        if (rin == 0.0 && !std::isinf(rout)) radius = 0.5 * rout;
        spec.components.push_back({Complex(0.0, 0.0), radius});
        std::string bad = spec.validate();
        if (bad.empty()) return spec;
        spec.components.clear();
    }

    // Union of circles around clusters of inside points. Greedy: sort the
    // inside points, start a cluster, and extend while the next point is
    // closer to the cluster than any outside point is.
    std::vector<Complex> pts = inside;
    std::sort(pts.begin(), pts.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Complex& a, const Complex& b) { return std::abs(a - b) < 1e-14; }),
              pts.end());

    auto dist_to_outside = [&](const Complex& z) {
        double d = std::numeric_limits<double>::infinity();
        for (const auto& o : outside) d = std::min(d, std::abs(z - o));
        return d;
    };

    size_t i = 0;
    std::vector<std::vector<Complex>> clusters;
    while (i < pts.size()) {
        std::vector<Complex> cluster{pts[i]};
        size_t j = i + 1;
        while (j < pts.size()) {
            double gap = std::abs(pts[j] - pts[j - 1]);
            if (gap < 0.5 * std::min(dist_to_outside(pts[j]), dist_to_outside(pts[j - 1]))) {
                cluster.push_back(pts[j]);
                ++j;
            } else {
                break;
            }
        }
        clusters.push_back(std::move(cluster));
        i = j;
    }

    for (const auto& cluster : clusters) {
        Complex lo = cluster.front(), hi = cluster.back();
        Complex center = 0.5 * (lo + hi);
        double spread = 0.0;
        for (const auto& p : cluster) spread = std::max(spread, std::abs(p - center));
        double clearance = std::numeric_limits<double>::infinity();
        for (const auto& o : outside) clearance = std::min(clearance, std::abs(o - center));
        if (std::isinf(clearance)) clearance = spread + 1.0;
        double radius = 0.5 * (spread + clearance);
        if (radius <= spread * (1.0 + min_gap) || clearance <= spread * (1.0 + min_gap))
            throw std::runtime_error(
                "make_contour: cannot separate inside cluster from outside points "
                "(spread=" + std::to_string(spread) + ", clearance=" + std::to_string(clearance) + ")");
        spec.components.push_back({center, radius});
    }

    // shrink components until pairwise disjoint
    for (size_t a = 0; a < spec.components.size(); ++a) {
        for (size_t b = a + 1; b < spec.components.size(); ++b) {
            auto &ca = spec.components[a], &cb = spec.components[b];
            double d = std::abs(ca.center - cb.center);
            if (ca.radius + cb.radius >= d) {
                double scale = 0.9 * d / (ca.radius + cb.radius);
                ca.radius *= scale;
                cb.radius *= scale;
            }
        }
    }

    std::string bad = spec.validate();
    if (!bad.empty()) throw std::runtime_error("make_contour: " + bad);
    return spec;
}

}  // namespace railyard
