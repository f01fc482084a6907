#include "railyard/gfactor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace railyard {

namespace {

constexpr double kPointTol = 1e-12;

bool same_point(double a, double b) { return std::abs(a - b) <= kPointTol * (1.0 + std::abs(a)); }

}  // namespace

GChi::GChi(const AsymptoticSpec& spec, double chi) : spec_(&spec), chi_(chi) {
    spec.validate();
    if (!(chi > spec.V.front() && chi < spec.V.back()))
        throw std::invalid_argument("GChi: chi must lie in (V_0, V_m)");
    for (double v : spec.V)
        if (same_point(chi, v))
            throw std::invalid_argument("GChi: chi coincides with a segment boundary V_p");

    // families: 0 = right same-letter, 1 = left same-letter, 2 = right
    // cross-letter, 3 = left cross-letter (reference letter L)
    for (int j = 1; j <= spec.n; ++j) {
        double tj = spec.tau_at(j);
        for (int p = 1; p <= spec.m; ++p) {
            double vp = spec.V[p], vpm1 = spec.V[p - 1];
            bool right = vp > chi;   // segment contributes right-side factors
            bool left = vpm1 < chi;  // segment contributes left-side factors
            if (spec.a(j) == LR::L) {
                if (right && spec.b(j, p) == Sign::Minus) {
                    double zero = std::exp(-std::max(vpm1, chi)) / tj;
                    double pole = std::exp(-vp) / tj;
                    fam_[0].push_back({zero, +1});
                    fam_[0].push_back({pole, -1});
                    fam_log_const_[0] += vp - std::max(vpm1, chi);
                    sets_.sets[0][0].push_back(pole);
                    sets_.sets[0][1].push_back(zero);
                }
                if (left && spec.b(j, p) == Sign::Plus) {
                    double zero = std::exp(-std::min(vp, chi)) / tj;
                    double pole = std::exp(-vpm1) / tj;
                    fam_[1].push_back({zero, +1});
                    fam_[1].push_back({pole, -1});
                    sets_.sets[1][0].push_back(pole);
                    sets_.sets[1][1].push_back(zero);
                }
            } else {
                if (right && spec.b(j, p) == Sign::Minus) {
                    double zero = -std::exp(-vp) / tj;
                    double pole = -std::exp(-std::max(vpm1, chi)) / tj;
                    fam_[2].push_back({zero, +1});
                    fam_[2].push_back({pole, -1});
                    fam_log_const_[2] += std::max(vpm1, chi) - vp;
                    sets_.sets[2][0].push_back(pole);
                    sets_.sets[2][1].push_back(zero);
                }
                if (left && spec.b(j, p) == Sign::Plus) {
                    double zero = -std::exp(-vpm1) / tj;
                    double pole = -std::exp(-std::min(vp, chi)) / tj;
                    fam_[3].push_back({zero, +1});
                    fam_[3].push_back({pole, -1});
                    sets_.sets[3][0].push_back(pole);
                    sets_.sets[3][1].push_back(zero);
                }
            }
        }
    }

    // combine and cancel matching zero/pole pairs exactly
    struct Netted {
        double point;
        int net;
    };
    std::vector<Netted> net;
    auto add = [&](double pt, int e) {
        for (auto& n : net) {
            if (same_point(n.point, pt)) {
                n.net += e;
                return;
            }
        }
        net.push_back({pt, e});
    };
    for (int f = 0; f < 4; ++f) {
        for (const auto& hf : fam_[f]) add(hf.point, hf.exponent);
        log_const_ += fam_log_const_[f];
    }
    for (const auto& n : net) {
        for (int k = 0; k < n.net; ++k) zeros_.push_back(n.point);
        for (int k = 0; k < -n.net; ++k) poles_.push_back(n.point);
    }
    std::sort(zeros_.begin(), zeros_.end());
    std::sort(poles_.begin(), poles_.end());

    // R_chi: surviving poles that stem from the right-side families
    for (double p : poles_) {
        bool from_right = false;
        for (int f : {0, 2})
            for (double q : sets_.sets[f][0])
                if (same_point(p, q)) from_right = true;
        bool seen = false;
        for (double q : r_chi_)
            if (same_point(p, q)) seen = true;
        if (from_right && !seen) r_chi_.push_back(p);
    }
    std::sort(r_chi_.begin(), r_chi_.end());
    sets_.r_chi = r_chi_;
}

GChi::FamilyValues GChi::family_values(Complex w) const {
    auto eval = [&](int f) {
        Complex v = std::exp(fam_log_const_[f]);
        for (const auto& hf : fam_[f]) {
            Complex base = 1.0 - w / hf.point;
            if (hf.exponent > 0)
                v *= base;
            else {
                if (std::abs(base) == 0.0) throw std::domain_error("GChi: pole hit in family value");
                v /= base;
            }
        }
        return v;
    };
    FamilyValues out;
    out.g1_right = eval(0);
    out.g1_left = eval(1);
    out.g0_right = eval(2);
    out.g0_left = eval(3);
    out.gtilde = out.g1_right * out.g1_left * out.g0_right * out.g0_left;
    return out;
}

Complex GChi::gtilde(Complex w) const {
    // exact pole hits propagate as IEEE infinities; callers guard with isfinite
    Complex v = std::exp(log_const_);
    for (double z : zeros_) v *= (1.0 - w / z);
    for (double p : poles_) v /= (1.0 - w / p);
    return v;
}

Complex GChi::value(Complex w) const {
    Complex g = gtilde(w);
    Complex out = 1.0;
    for (int k = 0; k < spec_->beta; ++k) out *= g;
    return out;
}

Complex GChi::pow_alpha(Complex w, double alpha) const {
    Complex log_sum(log_const_, 0.0);
    for (double z : zeros_) log_sum += std::log(1.0 - w / z);
    for (double p : poles_) log_sum -= std::log(1.0 - w / p);
    return std::exp(alpha * static_cast<double>(spec_->beta) * log_sum);
}

Complex GChi::dlog(Complex w) const {
    Complex s = 0.0;
    for (double z : zeros_) s += 1.0 / (w - z);
    for (double p : poles_) s -= 1.0 / (w - p);
    return s;
}

std::vector<double> GChi::excluded_points() const {
    std::vector<double> out;
    for (double z : zeros_) out.push_back(z);
    for (double p : poles_) {
        bool enclosed = false;
        for (double q : r_chi_)
            if (same_point(p, q)) enclosed = true;
        if (!enclosed) out.push_back(p);
    }
    return out;
}

ContourSpec GChi::moment_contour() const {
    std::vector<Complex> inside{Complex(0.0, 0.0)};
    for (double p : r_chi_) inside.push_back(p);
    std::vector<Complex> outside;
    for (double q : excluded_points()) outside.push_back(q);
    return make_contour(inside, outside);
}

std::vector<double> GChi::cleared_polynomial(double s) const {
    auto expand = [&](const std::vector<double>& pts, int power) {
        std::vector<double> c{1.0};
        for (double pt : pts) {
            for (int rep = 0; rep < power; ++rep) {
                // multiply by (1 - w/pt)
                std::vector<double> nc(c.size() + 1, 0.0);
                for (size_t i = 0; i < c.size(); ++i) {
                    nc[i] += c[i];
                    nc[i + 1] -= c[i] / pt;
                }
                c = std::move(nc);
            }
        }
        return c;
    };
    int beta = spec_->beta;
    std::vector<double> num = expand(zeros_, beta);
    std::vector<double> den = expand(poles_, beta);
    double cb = std::exp(static_cast<double>(beta) * log_const_);
    size_t deg = std::max(num.size(), den.size());
    std::vector<double> poly(deg, 0.0);
    for (size_t i = 0; i < num.size(); ++i) poly[i] += cb * num[i];
    for (size_t i = 0; i < den.size(); ++i) poly[i] -= s * den[i];
    return poly;
}

PoleZeroSets pole_zero_sets(const AsymptoticSpec& spec, double chi) {
    return GChi(spec, chi).family_sets();
}

namespace {

struct MFactor {
    double point;
    int exponent;
};

std::vector<MFactor> m_factors(const AsymptoticSpec& spec) {
    std::vector<MFactor> out;
    auto push = [&](double point, int e) {
        if (e != 0) out.push_back({point, e});
    };
    for (int j = 1; j <= spec.n; ++j) {
        double tj = spec.tau_at(j);
        int sgn = spec.a(j) == LR::L ? +1 : -1;  // L-points positive, R-points negative
        for (int p = 1; p <= spec.m - 1; ++p) {
            int e = (spec.b(j, p) == Sign::Plus ? 1 : 0) - (spec.b(j, p + 1) == Sign::Plus ? 1 : 0);
            push(sgn * std::exp(-spec.V[p]) / tj, sgn * e);
        }
        push(sgn * std::exp(-spec.V[0]) / tj,
             sgn * -(spec.b(j, 1) == Sign::Plus ? 1 : 0));
        push(sgn * std::exp(-spec.V[spec.m]) / tj,
             sgn * -(spec.b(j, spec.m) == Sign::Minus ? 1 : 0));
    }
    return out;
}

}  // namespace

Complex r_function(const AsymptoticSpec& spec, Complex w) {
    Complex v = 1.0;
    for (const auto& f : m_factors(spec)) {
        Complex base = 1.0 - w / f.point;
        for (int k = 0; k < std::abs(f.exponent); ++k) {
            if (f.exponent > 0)
                v *= base;
            else
                v /= base;
        }
    }
    return v;
}

Complex g_function(const AsymptoticSpec& spec, Complex w) {
    Complex s = 0.0;
    for (const auto& f : m_factors(spec)) s += static_cast<double>(f.exponent) / (w - f.point);
    return s;
}

double f_function(const AsymptoticSpec& spec, double s) {
    double v = 0.0;
    for (int j = 1; j <= spec.n; ++j) {
        if (spec.a(j) == LR::L)
            v += 1.0 / (1.0 - s / spec.tau_at(j));
        else
            v -= 1.0 / (1.0 + s / spec.tau_at(j));
    }
    return v;
}

Complex u_chi_function(const AsymptoticSpec& spec, double chi, Complex w) {
    double ell = 0.0;  // sum over L residues minus sum over R residues of the
                       // clipped minus-segment lengths right of chi
    Complex num = 1.0, den = 1.0;
    for (int j = 1; j <= spec.n; ++j) {
        double tj = spec.tau_at(j);
        double lj = 0.0;
        for (int p = 1; p <= spec.m; ++p)
            if (spec.b(j, p) == Sign::Minus && spec.V[p] > chi)
                lj += spec.V[p] - std::max(spec.V[p - 1], chi);
        if (spec.a(j) == LR::L) {
            ell += lj;
            den *= (1.0 - w * tj * std::exp(chi));
        } else {
            ell -= lj;
            num *= (1.0 + w * tj * std::exp(chi));
        }
    }
    return num / den * std::exp(-ell);
}

URDecomposition u_r_f_g(const AsymptoticSpec& spec, double chi, Complex w, double s_for_f) {
    URDecomposition out;
    out.u_chi = u_chi_function(spec, chi, w);
    out.r_part = r_function(spec, w);
    out.f_value = f_function(spec, s_for_f);
    out.g_value = g_function(spec, w);
    return out;
}

std::vector<double> f_breakpoints(const AsymptoticSpec& spec) {
    std::vector<double> pts;
    for (int j = 1; j <= spec.n; ++j)
        pts.push_back(spec.a(j) == LR::L ? spec.tau_at(j) : -spec.tau_at(j));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double a, double b) { return same_point(a, b); }),
              pts.end());
    return pts;
}

std::vector<double> s_points(const AsymptoticSpec& spec) {
    std::vector<double> pts;
    for (const auto& f : m_factors(spec)) pts.push_back(f.point);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double a, double b) { return same_point(a, b); }),
              pts.end());
    return pts;
}

}  // namespace railyard
