#include "railyard/limit_shape.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <json.hpp>
#include <numbers>

namespace railyard {

namespace {

std::vector<Complex> polynomial_roots(std::vector<double> coeffs) {
    // strip tiny leading (highest-degree) coefficients relative to the norm
    double norm = 0.0;
    for (double c : coeffs) norm = std::max(norm, std::abs(c));
    if (norm == 0.0) throw std::runtime_error("polynomial_roots: zero polynomial");
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-13 * norm) coeffs.pop_back();
    int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    std::vector<Complex> roots;
    for (int i = 0; i < deg; ++i) roots.push_back(es.eigenvalues()[i]);
    return roots;
}

// one Newton step on gtilde(w)^beta - s using the logarithmic derivative
Complex polish_root(const GChi& g, double s, Complex w) {
    for (int it = 0; it < 2; ++it) {
        Complex gv = g.value(w);
        if (!std::isfinite(gv.real()) || !std::isfinite(gv.imag())) break;
        Complex val = gv - s;
        Complex deriv = gv * static_cast<double>(g.beta()) * g.dlog(w);
        if (!(std::abs(deriv) > 1e-300)) break;
        Complex step = val / deriv;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        if (std::abs(step) > 0.5 * (1.0 + std::abs(w))) break;  // keep the polish local
        w -= step;
    }
    return w;
}

constexpr double kImagTolScale = 1e-9;

}  // namespace

RootClassification solve_roots(const GChi& g, double kappa) {
    double s = std::exp(-static_cast<double>(g.period()) * kappa);
    RootClassification rc;
    auto roots = polynomial_roots(g.cleared_polynomial(s));
    for (auto& w : roots) {
        w = polish_root(g, s, w);
        double res = std::abs(g.value(w) - s) / (1.0 + std::abs(s));
        if (std::isfinite(res)) rc.max_residual = std::max(rc.max_residual, res);
    }
    rc.all_roots = roots;

    std::vector<Complex> upper;
    for (const auto& w : roots) {
        double tol = kImagTolScale * (1.0 + std::abs(w));
        if (std::abs(w.imag()) <= tol)
            rc.real_roots.push_back(w.real());
        else if (w.imag() > 0)
            upper.push_back(w);
    }
    std::sort(rc.real_roots.begin(), rc.real_roots.end());

    if (upper.size() > 1) {
        // roots within each other's tolerance count once (clustered eigenvalues)
        std::vector<Complex> distinct;
        for (const auto& w : upper) {
            bool dup = false;
            for (const auto& v : distinct)
                if (std::abs(w - v) < 1e-7 * (1.0 + std::abs(w))) dup = true;
            if (!dup) distinct.push_back(w);
        }
        upper = distinct;
    }
    if (upper.size() > 1)
        throw RootCountError("solve_roots: more than one conjugate pair at chi=" +
                             std::to_string(g.chi()) + ", kappa=" + std::to_string(kappa) +
                             "; run check_assumptions");
    if (upper.size() == 1) {
        rc.w_plus = upper.front();
        double im = upper.front().imag();
        rc.region = im > 1e-7 * (1.0 + std::abs(upper.front())) ? Region::Liquid : Region::Boundary;
    } else {
        // a near-double real root marks the frozen boundary
        rc.region = Region::Frozen;
        for (size_t i = 0; i + 1 < rc.real_roots.size(); ++i)
            if (std::abs(rc.real_roots[i + 1] - rc.real_roots[i]) <
                1e-8 * (1.0 + std::abs(rc.real_roots[i])))
                rc.region = Region::Boundary;
    }
    return rc;
}

RootClassification solve_roots(const AsymptoticSpec& spec, double chi, double kappa) {
    return solve_roots(GChi(spec, chi), kappa);
}

namespace {

double principal_arg(Complex z) { return std::arg(z); }  // range (-pi, pi]

// complex-coefficient clearing of gtilde(w)^beta = s
std::vector<Complex> cleared_polynomial_c(const GChi& g, Complex s) {
    auto expand = [&](const std::vector<double>& pts, int power) {
        std::vector<Complex> c{1.0};
        for (double pt : pts) {
            for (int rep = 0; rep < power; ++rep) {
                std::vector<Complex> nc(c.size() + 1, 0.0);
                for (size_t i = 0; i < c.size(); ++i) {
                    nc[i] += c[i];
                    nc[i + 1] -= c[i] / pt;
                }
                c = std::move(nc);
            }
        }
        return c;
    };
    std::vector<Complex> num = expand(g.zeros(), g.beta());
    std::vector<Complex> den = expand(g.poles(), g.beta());
    double cb = std::exp(static_cast<double>(g.beta()) * g.log_const());
    std::vector<Complex> poly(std::max(num.size(), den.size()), 0.0);
    for (size_t i = 0; i < num.size(); ++i) poly[i] += cb * num[i];
    for (size_t i = 0; i < den.size(); ++i) poly[i] -= s * den[i];
    return poly;
}

std::vector<Complex> polynomial_roots_c(std::vector<Complex> coeffs) {
    double norm = 0.0;
    for (const auto& c : coeffs) norm = std::max(norm, std::abs(c));
    if (norm == 0.0) throw std::runtime_error("polynomial_roots_c: zero polynomial");
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-13 * norm) coeffs.pop_back();
    int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    std::vector<Complex> roots;
    for (int i = 0; i < deg; ++i) roots.push_back(es.eigenvalues()[i]);
    return roots;
}

// Tracks every root branch of gtilde^beta = zeta from zeta = huge down to
// zeta = s_target (1 + i delta), following the Stieltjes prescription of a
// small positive imaginary part so branches never collide. Returns the roots
// matched to the enclosed poles (R_chi), grouped per pole in order.
std::vector<Complex> track_roots_to(const GChi& g, double s_target) {
    const auto& rchi = g.enclosed();
    const Complex dir(1.0, 1e-7);
    std::vector<Complex> tracked;
    for (double p : g.poles())
        for (int k = 0; k < g.beta(); ++k) tracked.push_back(Complex(p, 0.0));

    double s0 = std::max(1e10, 1e6 * (1.0 + std::abs(s_target)));
    double l0 = std::log(s0), l1 = std::log(s_target);

    auto roots_at = [&](double pos) {
        Complex s = std::exp(l0 + (l1 - l0) * pos) * dir;
        auto roots = polynomial_roots_c(cleared_polynomial_c(g, s));
        for (auto& w : roots) {
            for (int it = 0; it < 2; ++it) {
                Complex gv = g.value(w);
                if (!std::isfinite(gv.real()) || !std::isfinite(gv.imag())) break;
                Complex val = gv - s;
                Complex deriv = gv * static_cast<double>(g.beta()) * g.dlog(w);
                if (!(std::abs(deriv) > 1e-300)) break;
                Complex step = val / deriv;
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
                if (std::abs(step) > 0.5 * (1.0 + std::abs(w))) break;
                w -= step;
            }
        }
        return roots;
    };

    double pos = 0.0, step = 1.0 / 32.0;
    int guard = 0;
    while (pos < 1.0) {
        if (++guard > 100000) throw std::runtime_error("density: root continuation stalled");
        double next = std::min(1.0, pos + step);
        auto roots = roots_at(next);
        if (roots.size() != tracked.size()) {
            step *= 0.5;
            if (step < 1e-7) throw std::runtime_error("density: root count changed along the path");
            continue;
        }
        double min_gap = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                min_gap = std::min(min_gap, std::abs(roots[i] - roots[j]));
        // greedy nearest-neighbour assignment with movement control
        std::vector<bool> used(roots.size(), false);
        std::vector<Complex> nxt(tracked.size());
        double max_move = 0.0;
        for (size_t i = 0; i < tracked.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            size_t bj = 0;
            for (size_t j = 0; j < roots.size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(roots[j] - tracked[i]);
                if (d < best) {
                    best = d;
                    bj = j;
                }
            }
            used[bj] = true;
            nxt[i] = roots[bj];
            max_move = std::max(max_move, best);
        }
        if (max_move > 0.35 * min_gap && step > 2e-7) {
            step *= 0.5;
            continue;
        }
        tracked = std::move(nxt);
        pos = next;
        step = std::min(step * 1.4, 1.0 / 16.0);
    }

    std::vector<Complex> out;
    size_t idx = 0;
    for (double p : g.poles()) {
        for (int k = 0; k < g.beta(); ++k, ++idx) {
            for (double q : rchi)
                if (std::abs(p - q) <= 1e-12 * (1.0 + std::abs(p))) {
                    out.push_back(tracked[idx]);
                    break;
                }
        }
    }
    return out;
}

// arg in (-pi, pi] with near-real values snapped to 0 or pi
double snapped_arg(Complex w) {
    if (std::abs(w.imag()) <= 1e-5 * (1.0 + std::abs(w)))
        return w.real() >= 0 ? 0.0 : std::numbers::pi;
    return principal_arg(w);
}

}  // namespace

double density(const GChi& g, double kappa) {
    RootClassification rc = solve_roots(g, kappa);
    if (rc.region == Region::Liquid)
        return 2.0 - 2.0 * principal_arg(*rc.w_plus) / std::numbers::pi;
    if (rc.region == Region::Boundary && rc.w_plus) {
        // one-sided limit: the pair has collapsed onto the real axis
        return rc.w_plus->real() > 0 ? 2.0 : 0.0;
    }
    double s = std::exp(-static_cast<double>(g.period()) * kappa);
    double g0 = g.value(Complex(0.0, 0.0)).real();
    double indicator = g0 > s ? 2.0 : 0.0;
    const auto& rchi = g.enclosed();
    if (rchi.empty()) return indicator;

    auto matched = track_roots_to(g, s);
    double sum = 0.0;
    size_t idx = 0;
    for (double xi : rchi) {
        // beta branches per pole; all were collected consecutively
        for (int k = 0; k < g.beta(); ++k, ++idx)
            sum += snapped_arg(matched[idx]) - snapped_arg(Complex(xi, 0.0));
    }
    return indicator - 2.0 / std::numbers::pi * sum;
}

double density(const AsymptoticSpec& spec, double chi, double kappa) {
    return density(GChi(spec, chi), kappa);
}

namespace {

bool is_liquid(const GChi& g, double kappa) {
    return solve_roots(g, kappa).region == Region::Liquid;
}

double bisect_edge(const GChi& g, double lo, double hi, bool lo_liquid, double tol = 1e-10) {
    for (int it = 0; it < 80 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (is_liquid(g, mid) == lo_liquid)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<std::pair<double, double>> liquid_bands(const AsymptoticSpec& spec, double chi) {
    GChi g(spec, chi);
    // scan a generous kappa range; G's points set the scale
    double scale = 1.0;
    for (double p : g.poles()) scale = std::max(scale, std::abs(std::log(std::abs(p)) ) );
    double lo = -8.0 * scale - 8.0, hi = 8.0 * scale + 8.0;
    int n = 1600;
    std::vector<std::pair<double, double>> bands;
    bool prev = is_liquid(g, lo);
    if (prev) throw std::runtime_error("liquid_bands: scan range does not bracket the support");
    double open = 0.0;
    for (int i = 1; i <= n; ++i) {
        double k = lo + (hi - lo) * i / n;
        bool cur = is_liquid(g, k);
        if (cur != prev) {
            double edge = bisect_edge(g, k - (hi - lo) / n, k, prev);
            if (cur)
                open = edge;
            else
                bands.emplace_back(open, edge);
            prev = cur;
        }
    }
    if (prev) throw std::runtime_error("liquid_bands: scan range does not bracket the support");
    return bands;
}

DensityProfile::DensityProfile(const AsymptoticSpec& spec, double chi)
    : g_(spec, chi), bands_(liquid_bands(spec, chi)) {
    double g0 = g_.value(Complex(0.0, 0.0)).real();
    if (!(g0 > 0)) throw std::runtime_error("DensityProfile: nonpositive G_chi(0)");
    kstar_ = -std::log(g0) / g_.period();
}

double DensityProfile::frozen_value(double kappa) const {
    // the frozen density is constant between consecutive breakpoints (band
    // edges and the indicator flip), so key the cache by stretch
    std::vector<double> cuts{kstar_};
    for (const auto& [lo, hi] : bands_) {
        cuts.push_back(lo);
        cuts.push_back(hi);
    }
    std::sort(cuts.begin(), cuts.end());
    int idx = 0;
    while (idx < static_cast<int>(cuts.size()) && kappa > cuts[idx]) ++idx;
    auto it = frozen_cache_.find(idx);
    if (it != frozen_cache_.end()) return it->second;
    double v = ::railyard::density(g_, kappa);
    frozen_cache_.emplace(idx, v);
    return v;
}

double DensityProfile::density(double kappa) const {
    RootClassification rc = solve_roots(g_, kappa);
    if (rc.region == Region::Liquid)
        return 2.0 - 2.0 * principal_arg(*rc.w_plus) / std::numbers::pi;
    if (rc.region == Region::Boundary && rc.w_plus) return rc.w_plus->real() > 0 ? 2.0 : 0.0;
    return frozen_value(kappa);
}

double DensityProfile::height(double kappa) const {
    auto simpson = [&](double a, double b) {
        int n = std::max(8, static_cast<int>(std::ceil((b - a) * 64)));
        if (n % 2) ++n;
        double s = 0.0;
        for (int i = 0; i <= n; ++i) {
            double x = a + (b - a) * i / n;
            double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            s += w * density(x);
        }
        return s * (b - a) / (3.0 * n);
    };
    if (bands_.empty()) {
        // fully frozen column: slope switches at the indicator flip
        double d_above = frozen_value(kstar_ + 1.0);
        return d_above * std::max(0.0, kappa - kstar_);
    }
    double h = 0.0;
    double cursor = std::min(bands_.front().first, kstar_);  // density vanishes below
    if (kappa <= cursor) return 0.0;
    auto frozen_piece = [&](double lo, double hi) {
        // split at the indicator flip if it lies inside
        double acc = 0.0;
        if (kstar_ > lo && kstar_ < hi) {
            acc += frozen_value(0.5 * (lo + kstar_)) * (kstar_ - lo);
            acc += frozen_value(0.5 * (kstar_ + hi)) * (hi - kstar_);
        } else {
            acc += frozen_value(0.5 * (lo + hi)) * (hi - lo);
        }
        return acc;
    };
    for (const auto& [blo, bhi] : bands_) {
        double gap_end = std::min(kappa, blo);
        if (gap_end > cursor) h += frozen_piece(cursor, gap_end);
        if (kappa <= blo) return h;
        h += simpson(blo, std::min(kappa, bhi));
        if (kappa <= bhi) return h;
        cursor = bhi;
    }
    h += frozen_piece(cursor, kappa);
    return h;
}

double limit_height(const AsymptoticSpec& spec, double chi, double kappa) {
    return DensityProfile(spec, chi).height(kappa);
}

Complex w_plus(const AsymptoticSpec& spec, double chi, double kappa) {
    RootClassification rc = solve_roots(spec, chi, kappa);
    if (rc.region != Region::Liquid)
        throw std::runtime_error("w_plus: (chi, kappa) is not in the liquid region");
    return *rc.w_plus;
}

LaplaceReport laplace_check(const AsymptoticSpec& spec, double chi, double alpha,
                            double quad_tol) {
    if (!(alpha > 0)) throw std::invalid_argument("laplace_check: alpha must be positive");
    GChi g(spec, chi);
    int n = spec.n;

    // contour side: 1/(n^2 alpha^2 pi i) oint [G]^alpha dw / w
    ContourSpec contour = g.moment_contour();
    QuadratureResult q = integrate_contour(
        [&](Complex w) { return g.pow_alpha(w, alpha) / w; }, contour, quad_tol);
    // integrate_contour already divides by 2 pi i, so multiply by 2:
    // 1/(pi i) = 2 * 1/(2 pi i)
    Complex contour_val = 2.0 * q.value / (static_cast<double>(n) * n * alpha * alpha);

    // transform side: int e^{-n alpha kappa} H(chi, kappa) dkappa; H vanishes
    // below the support and grows linearly (slope = terminal density) above,
    // so split at the last band edge and add the analytic tail.
    DensityProfile profile(spec, chi);
    const auto& bands = profile.bands();
    if (bands.empty()) throw std::runtime_error("laplace_check: no liquid band at this chi");
    double k0 = bands.front().first, k1 = bands.back().second;
    double a = static_cast<double>(n) * alpha;
    // numeric part on [k0, k1]
    int nn = 600;
    double acc = 0.0;
    std::vector<double> hs(nn + 1);
    // cumulative H via trapezoid on the density profile
    std::vector<double> ks(nn + 1), ds(nn + 1);
    for (int i = 0; i <= nn; ++i) {
        ks[i] = k0 + (k1 - k0) * i / nn;
        ds[i] = profile.density(ks[i]);
    }
    hs[0] = 0.0;
    for (int i = 1; i <= nn; ++i)
        hs[i] = hs[i - 1] + 0.5 * (ds[i] + ds[i - 1]) * (ks[i] - ks[i - 1]);
    for (int i = 1; i <= nn; ++i) {
        double f0 = std::exp(-a * ks[i - 1]) * hs[i - 1];
        double f1 = std::exp(-a * ks[i]) * hs[i];
        acc += 0.5 * (f0 + f1) * (ks[i] - ks[i - 1]);
    }
    // tail: H(kappa) = H(k1) + d_top (kappa - k1) for kappa > k1
    double d_top = profile.density(k1 + 0.5);
    acc += std::exp(-a * k1) * (hs[nn] / a + d_top / (a * a));

    LaplaceReport rep;
    rep.alpha = alpha;
    rep.transform_side = acc;
    rep.contour_side = contour_val.real();
    rep.imag_residual = std::abs(contour_val.imag());
    rep.rel_gap = std::abs(rep.transform_side - rep.contour_side) /
                  std::max(1e-300, std::abs(rep.contour_side));
    return rep;
}

std::string LaplaceReport::to_json() const {
    nlohmann::json j;
    j["alpha"] = alpha;
    j["transform_side"] = transform_side;
    j["contour_side"] = contour_side;
    j["imag_residual"] = imag_residual;
    j["rel_gap"] = rel_gap;
    return j.dump();
}

}  // namespace railyard
