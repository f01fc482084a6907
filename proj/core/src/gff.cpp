#include "railyard/gff.hpp"

#include <cmath>
#include <numbers>

namespace railyard {

namespace {

// (1/2 pi i)^2 oint oint F(z, w) dz dw over two circles, trapezoid with
// simultaneous node doubling.
Complex circle_pair_integral(const std::function<Complex(Complex, Complex)>& F, const Circle& cz,
                             const Circle& cw, double tol, long cap = 1 << 12) {
    auto value = [&](long n) {
        std::vector<Complex> ez(n);
        for (long k = 0; k < n; ++k) {
            double th = 2.0 * std::numbers::pi * k / static_cast<double>(n);
            ez[k] = Complex(std::cos(th), std::sin(th));
        }
        Complex acc = 0.0;
        for (long a = 0; a < n; ++a) {
            Complex z = cz.center + cz.radius * ez[a];
            Complex row = 0.0;
            for (long b = 0; b < n; ++b) row += F(z, cw.center + cw.radius * ez[b]) * ez[b];
            acc += row * ez[a];
        }
        return acc * (cz.radius * cw.radius / static_cast<double>(n) / static_cast<double>(n));
    };
    long n = 96;
    Complex prev = value(n);
    for (;;) {
        n *= 2;
        Complex cur = value(n);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        if (n >= cap) throw std::runtime_error("gff_covariance: quadrature did not converge");
        prev = cur;
    }
}

ContourSpec scaled_contour(const GChi& g, double scale) {
    ContourSpec base = g.moment_contour();
    for (auto& c : base.components) c.radius *= scale;
    std::string bad = base.validate();
    if (!bad.empty())
        throw std::runtime_error("gff_covariance: scaled contour invalid: " + bad);
    return base;
}

}  // namespace

double gff_covariance_scaled(const AsymptoticSpec& spec, double chi_d, double chi_h, int k_d,
                             int k_h, double outer_scale, double inner_scale, double tol) {
    spec.validate();
    // the finite-size nesting degenerates to: the larger-chi contour inside
    double chi_out = std::min(chi_d, chi_h), chi_in = std::max(chi_d, chi_h);
    int k_out = chi_d <= chi_h ? k_d : k_h;
    int k_in = chi_d <= chi_h ? k_h : k_d;
    GChi g_out(spec, chi_out), g_in(spec, chi_in);

    ContourSpec outer = scaled_contour(g_out, outer_scale);
    ContourSpec inner = scaled_contour(g_in, inner_scale);
    // the two curves must not touch
    for (const auto& a : outer.components)
        for (const auto& b : inner.components) {
            double d = std::abs(a.center - b.center);
            bool disjoint_curves = d > a.radius + b.radius || a.radius > d + b.radius ||
                                   b.radius > d + a.radius;
            if (!disjoint_curves)
                throw std::runtime_error("gff_covariance: contours intersect; adjust scales");
        }

    double nb = static_cast<double>(spec.n) * spec.beta;
    double pref = static_cast<double>(k_d) * k_h * nb * nb;
    Complex total = 0.0;
    auto F = [&](Complex z, Complex w) {
        Complex diff = z - w;
        return g_out.pow_alpha(z, k_out) * g_in.pow_alpha(w, k_in) / (diff * diff);
    };
    for (const auto& cz : outer.components)
        for (const auto& cw : inner.components) total += circle_pair_integral(F, cz, cw, tol);
    Complex val = pref * total;
    if (std::abs(val.imag()) > 1e-7 * (1.0 + std::abs(val)))
        throw std::runtime_error("gff_covariance: nonreal result");
    return val.real();
}

double gff_covariance(const AsymptoticSpec& spec, double chi_d, double chi_h, int k_d, int k_h,
                      double tol) {
    return gff_covariance_scaled(spec, chi_d, chi_h, k_d, k_h, 1.0, 0.45, tol);
}

}  // namespace railyard
