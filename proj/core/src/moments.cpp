#include "railyard/moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace railyard {

KernelValues kernel_values(Complex z, Complex w, double t) {
    KernelValues kv;
    Complex r = w / z;
    auto safe_div = [](Complex num, Complex den) {
        if (std::abs(den) == 0.0) throw std::domain_error("kernel_values: pole hit");
        return num / den;
    };
    kv.T_LL = safe_div((1.0 - r) * (1.0 - r), (1.0 - r / t) * (1.0 - t * r));
    kv.T_LR = safe_div((1.0 + t * r) * (1.0 + t * r), (1.0 + t * t * r) * (1.0 + r));
    kv.T_RL = safe_div((1.0 + r / t) * (1.0 + r / t), (1.0 + r / (t * t)) * (1.0 + r));
    kv.D_density = safe_div(Complex(1.0, 0.0), w);
    return kv;
}

Complex moment_integrand_factor(const RailYardSpec& spec, int i, double t, Complex w) {
    Complex f = 1.0;
    LR ai = spec.a_at(i);
    // an R reference column uses the same factor shapes at 1/t
    double te = ai == LR::L ? t : 1.0 / t;
    for (int j = i; j <= spec.r(); ++j) {
        if (spec.b_at(j) != Sign::Minus) continue;
        double xj = spec.x_at(j).to_double();
        if (spec.a_at(j) == ai)
            f *= (w - xj) / (w - te * xj);
        else
            f *= (w + te * xj) / (w + xj);
    }
    for (int j = spec.l; j < i; ++j) {
        if (spec.b_at(j) != Sign::Plus) continue;
        double xj = spec.x_at(j).to_double();
        if (spec.a_at(j) == ai)
            f *= (te - w * xj) / (te * (1.0 - w * xj));
        else
            f *= te * (1.0 + w * xj) / (te + w * xj);
    }
    return f;
}

void moment_pole_sets(const RailYardSpec& spec, int i, double t, std::vector<Complex>& inside,
                      std::vector<Complex>& outside) {
    inside.clear();
    outside.clear();
    LR ai = spec.a_at(i);
    double te = ai == LR::L ? t : 1.0 / t;
    for (int j = i; j <= spec.r(); ++j) {
        if (spec.b_at(j) != Sign::Minus) continue;
        double xj = spec.x_at(j).to_double();
        inside.push_back(spec.a_at(j) == ai ? Complex(te * xj, 0) : Complex(-xj, 0));
    }
    for (int j = spec.l; j < i; ++j) {
        if (spec.b_at(j) != Sign::Plus) continue;
        double xj = spec.x_at(j).to_double();
        outside.push_back(spec.a_at(j) == ai ? Complex(1.0 / xj, 0) : Complex(-te / xj, 0));
    }
}

namespace {

void require_interior(const RailYardSpec& spec, int i, const char* who) {
    if (i <= spec.l || i > spec.r())
        throw std::invalid_argument(std::string(who) + ": column must be interior (l < i <= r)");
}

void require_interior_L(const RailYardSpec& spec, int i, const char* who) {
    require_interior(spec, i, who);
    if (spec.a_at(i) != LR::L)
        throw std::invalid_argument(std::string(who) + ": column must carry letter L");
}

struct Annulus {
    double lo, hi;  // admissible circle radii
};

Annulus column_annulus(const RailYardSpec& spec, int i, double t, const char* who) {
    std::vector<Complex> inside, outside;
    moment_pole_sets(spec, i, t, inside, outside);
    double rin = 0.0, rout = std::numeric_limits<double>::infinity();
    for (const auto& p : inside) rin = std::max(rin, std::abs(p));
    for (const auto& p : outside) rout = std::min(rout, std::abs(p));
    if (std::isinf(rout)) rout = 2.0 * std::max(rin, 1.0);
    if (rout <= rin * 1.05)
        throw std::runtime_error(std::string(who) +
                                 ": no circle separates the enclosed poles from the excluded ones "
                                 "(try smaller x or a different t)");
    return {rin * 1.02, rout * 0.98};
}

Complex double_circle_integral(const std::function<Complex(Complex, Complex)>& f, double rz,
                               double rw, double tol, long cap = 1 << 13) {
    // (1/2 pi i)^2 oint oint f(z, w) dz dw over origin-centered circles
    auto value = [&](long n) {
        Complex acc = 0.0;
        std::vector<Complex> ez(n), zs(n), ws(n);
        for (long k = 0; k < n; ++k) {
            double th = 2.0 * std::numbers::pi * k / static_cast<double>(n);
            ez[k] = Complex(std::cos(th), std::sin(th));
            zs[k] = rz * ez[k];
            ws[k] = rw * ez[k];
        }
        for (long a = 0; a < n; ++a) {
            Complex row = 0.0;
            for (long b = 0; b < n; ++b) row += f(zs[a], ws[b]) * ez[b];
            acc += row * ez[a];
        }
        // (i dz)(i dw) against the 1/(2 pi i)^2 normalization and the angular
        // steps collapses to rz rw / n^2 on the e^{i theta}-weighted sum
        return acc * (rz * rw / static_cast<double>(n) / static_cast<double>(n));
    };
    long n = 128;
    Complex prev = value(n);
    for (;;) {
        n *= 2;
        Complex cur = value(n);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        if (n >= cap)
            throw std::runtime_error("finite_covariance_11: quadrature did not converge");
        prev = cur;
    }
}

}  // namespace

double finite_moment_k1(const RailYardSpec& spec, int i, double t, double tol) {
    require_interior(spec, i, "finite_moment_k1");
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("finite_moment_k1: t in (0,1)");
    std::vector<Complex> inside, outside;
    moment_pole_sets(spec, i, t, inside, outside);
    inside.push_back(0.0);
    ContourSpec contour = make_contour(inside, outside);
    auto f = [&](Complex w) { return moment_integrand_factor(spec, i, t, w) / w; };
    QuadratureResult q = integrate_contour(f, contour, tol);
    if (std::abs(q.value.imag()) > 1e-9 * (1.0 + std::abs(q.value)))
        throw std::runtime_error("finite_moment_k1: nonreal result");
    return q.value.real();
}

double finite_covariance_11(const RailYardSpec& spec, int i_d, int i_h, double t, double tol) {
    require_interior_L(spec, i_d, "finite_covariance_11");
    require_interior_L(spec, i_h, "finite_covariance_11");
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("finite_covariance_11: t in (0,1)");
    int c1 = std::min(i_d, i_h), c2 = std::max(i_d, i_h);

    Annulus a1 = column_annulus(spec, c1, t, "finite_covariance_11");
    Annulus a2 = column_annulus(spec, c2, t, "finite_covariance_11");

    auto f1 = [&](Complex z) { return moment_integrand_factor(spec, c1, t, z); };
    auto f2 = [&](Complex w) { return moment_integrand_factor(spec, c2, t, w); };
    auto coupled = [&](Complex z, Complex w) {
        return f1(z) * f2(w) * (kernel_values(z, w, t).T_LL - 1.0) / (z * w);
    };

    // The later column's contour must sit strictly inside t times the earlier
    // one. When no such pair of circles exists the covariance series itself
    // need not converge (gamma_1 grows like t^{-l(lambda)} against the weight
    // decay), so this is a hard error, not a fallback.
    double rz = a1.hi;
    double rw = std::min(a2.hi, t * rz * 0.96);
    if (rw <= a2.lo)
        throw std::runtime_error(
            "finite_covariance_11: contour nesting infeasible (inner annulus (" +
            std::to_string(a2.lo) + ", " + std::to_string(a2.hi) + ") vs t * outer " +
            std::to_string(t * rz) + "); the covariance may not be finite at this t");
    Complex val = double_circle_integral(coupled, rz, rw, tol);
    if (std::abs(val.imag()) > 1e-8 * (1.0 + std::abs(val)))
        throw std::runtime_error("finite_covariance_11: nonreal result");
    return val.real();
}

}  // namespace railyard
