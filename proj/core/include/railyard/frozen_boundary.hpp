#pragma once

#include <optional>
#include <string>
#include <vector>

#include "railyard/gfactor.hpp"

namespace railyard {

/// One point of the arctic curve, parametrized by the double root u.
struct CurvePoint {
    double u;
    double chi;
    double kappa;
    double res_value;  // |G_chi(u) - e^{-n kappa}|
    double res_deriv;  // |d/dw G_chi at u|
};

struct FrozenBoundaryResult {
    std::vector<CurvePoint> points;
    std::vector<std::string> diagnostics;  // skipped grid points and why
};

/// For each u off the chi-independent singular set: picks the branch interval
/// of f where the critical equation f(e^{-chi}/u) + u g(u) = 0 has its
/// admissible solution (the one making G_chi(u) positive with chi inside
/// (V_0, V_m)), solves by bisection on the monotone piece and reports the
/// double-root residuals.
FrozenBoundaryResult frozen_boundary(const AsymptoticSpec& spec, const std::vector<double>& u_grid,
                                     double bisect_tol = 1e-13);

/// Convenience grid: nu points per monotone stretch between the singular
/// points, extended geometrically beyond the extremes.
std::vector<double> default_u_grid(const AsymptoticSpec& spec, int per_interval = 40);

}  // namespace railyard
