#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "railyard/gfactor.hpp"

namespace railyard {

enum class Region { Liquid, Frozen, Boundary };

struct RootClassification {
    std::vector<Complex> all_roots;
    std::vector<double> real_roots;
    std::optional<Complex> w_plus;  // upper-half-plane member of the pair
    Region region = Region::Frozen;
    double max_residual = 0.0;
};

/// Thrown when more than one conjugate pair survives the tolerance; indicates
/// an assumption failure (run check_assumptions).
struct RootCountError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Solves G_chi(w) = e^{-n kappa} by clearing denominators into a polynomial,
/// companion-matrix eigenvalues and one Newton polish per root.
RootClassification solve_roots(const AsymptoticSpec& spec, double chi, double kappa);
RootClassification solve_roots(const GChi& g, double kappa);

/// Slope of the limiting height function in the kappa direction, in [0, 2]:
/// 2 - 2 arg(w_+)/pi in the liquid region; in the frozen region the full
/// root/pole argument sum (tracked from kappa -> -infinity), which lands on
/// 0 or 2.
double density(const AsymptoticSpec& spec, double chi, double kappa);
double density(const GChi& g, double kappa);

/// kappa-integral of the density from below the support.
double limit_height(const AsymptoticSpec& spec, double chi, double kappa);

/// The unique upper-half-plane root of G_chi(w) = e^{-n kappa}; throws when
/// (chi, kappa) is not liquid.
Complex w_plus(const AsymptoticSpec& spec, double chi, double kappa);

struct LaplaceReport {
    double alpha;
    double transform_side;   // integral of e^{-n alpha kappa} H(chi, kappa)
    double contour_side;     // 1/(n^2 alpha^2 pi i) oint G^alpha dw/w
    double imag_residual;    // |Im| of the contour side
    double rel_gap;
    bool ok(double tol) const { return rel_gap < tol; }
    std::string to_json() const;
};

/// Both sides of the Laplace-transform identity for the rescaled height.
LaplaceReport laplace_check(const AsymptoticSpec& spec, double chi, double alpha,
                            double quad_tol = 1e-10);

/// Lower/upper kappa edges of the liquid band(s) at this chi, ordered.
std::vector<std::pair<double, double>> liquid_bands(const AsymptoticSpec& spec, double chi);

/// Per-column view of the density: liquid points are cheap root solves, and
/// the frozen stretches (where the density is constant between band edges and
/// the indicator flip at e^{-n kappa} = G_chi(0)) are continued once and
/// cached.
class DensityProfile {
public:
    DensityProfile(const AsymptoticSpec& spec, double chi);

    double density(double kappa) const;
    double height(double kappa) const;  // kappa-integral of the density
    const std::vector<std::pair<double, double>>& bands() const { return bands_; }
    const GChi& g() const { return g_; }

private:
    double frozen_value(double kappa) const;

    GChi g_;
    std::vector<std::pair<double, double>> bands_;
    double kstar_;  // indicator flip ordinate
    mutable std::map<int, double> frozen_cache_;
};

}  // namespace railyard
