#include "railyard/frozen_boundary.hpp"

#include <cmath>
#include <numbers>

namespace railyard {

namespace {

constexpr double kAvoid = 1e-9;

// f is strictly increasing on each open interval between its breakpoints;
// finds the solution of f = target inside (lo, hi) (either end may be
// infinite: f -> 0 at -infinity on the leftmost piece and at +infinity on the
// rightmost).
std::optional<double> solve_on_piece(const AsymptoticSpec& spec, double lo, double hi,
                                     double target, double tol) {
    auto f = [&](double s) { return f_function(spec, s); };
    double a, b;
    if (std::isinf(lo) && std::isinf(hi)) return std::nullopt;
    if (std::isinf(lo)) {
        // range (0, +inf) ... actually (f(-inf)=0) increasing to +inf at hi-
        if (!(target > 0)) return std::nullopt;
        b = hi - kAvoid * (1.0 + std::abs(hi));
        if (f(b) < target) return std::nullopt;
        a = hi - 1.0;
        for (int k = 0; k < 200 && f(a) > target; ++k) a = hi - (hi - a) * 2.0;
        if (f(a) > target) return std::nullopt;
    } else if (std::isinf(hi)) {
        // increasing from -inf at lo+ to 0 at +infinity
        if (!(target < 0)) return std::nullopt;
        a = lo + kAvoid * (1.0 + std::abs(lo));
        if (f(a) > target) return std::nullopt;
        b = lo + 1.0;
        for (int k = 0; k < 200 && f(b) < target; ++k) b = lo + (b - lo) * 2.0;
        if (f(b) < target) return std::nullopt;
    } else {
        a = lo + kAvoid * (1.0 + std::abs(lo));
        b = hi - kAvoid * (1.0 + std::abs(hi));
        if (a >= b) return std::nullopt;
        if (f(a) > target || f(b) < target) return std::nullopt;
    }
    for (int it = 0; it < 200 && b - a > tol * (1.0 + std::abs(a)); ++it) {
        double mid = 0.5 * (a + b);
        (f(mid) < target ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

}  // namespace

FrozenBoundaryResult frozen_boundary(const AsymptoticSpec& spec, const std::vector<double>& u_grid,
                                     double bisect_tol) {
    spec.validate();
    FrozenBoundaryResult out;
    std::vector<double> breaks = f_breakpoints(spec);
    std::vector<double> sing = s_points(spec);
    double v0 = spec.V.front(), vm = spec.V.back();

    for (double u : u_grid) {
        if (u == 0.0) {
            out.diagnostics.push_back("u=0 skipped");
            continue;
        }
        bool near_sing = false;
        for (double s : sing)
            if (std::abs(u - s) < 1e-9 * (1.0 + std::abs(s))) near_sing = true;
        if (near_sing) {
            out.diagnostics.push_back("u=" + std::to_string(u) + " lies on the singular set");
            continue;
        }
        // 0 = u dlog gtilde = f(e^{-chi}/u) + u g(u)
        Complex gc = g_function(spec, Complex(u, 0.0));
        double target = -(u * gc.real());

        std::vector<CurvePoint> candidates;
        // monotone pieces: (-inf, b1), (b1, b2), ..., (bK, +inf)
        for (size_t piece = 0; piece <= breaks.size(); ++piece) {
            double lo = piece == 0 ? -std::numeric_limits<double>::infinity() : breaks[piece - 1];
            double hi = piece == breaks.size() ? std::numeric_limits<double>::infinity()
                                               : breaks[piece];
            auto sol = solve_on_piece(spec, lo, hi, target, bisect_tol);
            if (!sol) continue;
            double s = *sol;
            if (!(s * u > 0)) continue;                    // e^{-chi} = s u must be positive
            double chi = -std::log(s * u);
            if (!(chi > v0 + 1e-9 && chi < vm - 1e-9)) continue;
            bool on_boundary = false;
            for (double v : spec.V)
                if (std::abs(chi - v) < 1e-9) on_boundary = true;
            if (on_boundary) continue;
            // Damped Newton on F(chi) = dlog gtilde_chi(u) drives the
            // double-root derivative residual to rounding level
            auto F_at = [&](double c) { return GChi(spec, c).dlog(Complex(u, 0.0)).real(); };
            double Fcur = F_at(chi);
            for (int it = 0; it < 30 && std::abs(Fcur) > 0; ++it) {
                double dF = 0.0;
                for (int j = 1; j <= spec.n; ++j) {
                    double c = std::exp(-chi) / spec.tau_at(j);
                    if (spec.a(j) == LR::L)
                        dF -= c / ((u - c) * (u - c));
                    else
                        dF -= c / ((u + c) * (u + c));
                }
                if (std::abs(dF) < 1e-300) break;
                double step = Fcur / dF;
                if (!std::isfinite(step)) break;
                bool improved = false;
                for (int damp = 0; damp < 20; ++damp) {
                    double cand = chi - step;
                    if (cand > v0 + 1e-9 && cand < vm - 1e-9) {
                        double Fc = F_at(cand);
                        if (std::abs(Fc) < std::abs(Fcur)) {
                            chi = cand;
                            Fcur = Fc;
                            improved = true;
                            break;
                        }
                    }
                    step *= 0.5;
                }
                if (!improved) break;
            }
            if (!(chi > v0 + 1e-9 && chi < vm - 1e-9)) continue;
            GChi g(spec, chi);
            Complex gt = g.gtilde(Complex(u, 0.0));
            if (!(gt.real() > 0.0) || std::abs(gt.imag()) > 1e-9 * (1.0 + std::abs(gt)))
                continue;  // branch mismatch: G_chi(u) must be positive real
            double Gval = std::pow(gt.real(), spec.beta);
            double kappa = -std::log(Gval) / spec.n;
            CurvePoint pt;
            pt.u = u;
            pt.chi = chi;
            pt.kappa = kappa;
            pt.res_value = std::abs(g.value(Complex(u, 0.0)).real() - std::exp(-spec.n * kappa));
            // d/dw G = G * beta * dlog(gtilde); |G| = e^{-n kappa}
            pt.res_deriv = std::abs(Gval * spec.beta * g.dlog(Complex(u, 0.0)));
            if (pt.res_value > 1e-8 || pt.res_deriv > 1e-8) {
                out.diagnostics.push_back(
                    "u=" + std::to_string(u) +
                    ": double-root residuals not certifiable in double precision "
                    "(res_value=" + std::to_string(pt.res_value) +
                    ", res_deriv=" + std::to_string(pt.res_deriv) +
                    "); the point hugs the singular set");
                continue;
            }
            candidates.push_back(pt);
        }
        if (candidates.empty()) {
            out.diagnostics.push_back("u=" + std::to_string(u) +
                                      ": no admissible branch (point off the curve window)");
            continue;
        }
        if (candidates.size() > 1)
            out.diagnostics.push_back("u=" + std::to_string(u) + ": " +
                                      std::to_string(candidates.size()) +
                                      " branches passed the positivity check; keeping the first");
        out.points.push_back(candidates.front());
    }
    return out;
}

std::vector<double> default_u_grid(const AsymptoticSpec& spec, int per_interval) {
    std::vector<double> sing = s_points(spec);
    std::vector<double> knots = sing;
    knots.push_back(0.0);
    std::sort(knots.begin(), knots.end());
    std::vector<double> grid;
    double span = knots.back() - knots.front();
    // interior stretches
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        double lo = knots[i], hi = knots[i + 1];
        for (int k = 1; k < per_interval; ++k) {
            double f = static_cast<double>(k) / per_interval;
            // cluster toward the endpoints where the curve sweeps fast
            double warped = 0.5 - 0.5 * std::cos(f * std::numbers::pi);
            grid.push_back(lo + (hi - lo) * warped);
        }
    }
    // geometric extensions beyond the extremes
    for (int k = 1; k <= per_interval; ++k) {
        double step = span * 0.08 * std::pow(1.18, k);
        grid.push_back(knots.back() + step);
        grid.push_back(knots.front() - step);
    }
    return grid;
}

}  // namespace railyard
