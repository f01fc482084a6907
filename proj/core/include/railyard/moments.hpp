#pragma once

#include <complex>
#include <vector>

#include "railyard/contour.hpp"
#include "railyard/spec.hpp"

namespace railyard {

/// Pointwise interaction kernels for singleton variable sets, plus the k = 1
/// reduction of the D-measure density (which is just 1/w up to the 1/(2 pi i)
/// carried by the quadrature).
struct KernelValues {
    Complex T_LL;
    Complex T_LR;
    Complex T_RL;
    Complex D_density;  // 1/w for k = 1
};

KernelValues kernel_values(Complex z, Complex w, double t);

/// The product of single-variable moment factors for column i evaluated at w:
/// right factors over j >= i with b_j = -, left factors over j < i with
/// b_j = +, split by whether a_j matches a_i.
Complex moment_integrand_factor(const RailYardSpec& spec, int i, double t, Complex w);

/// Poles the moment contour must enclose (t x_j and -x_j on the minus side)
/// and exclude (1/x_j and -t/x_j on the plus side) for column i.
void moment_pole_sets(const RailYardSpec& spec, int i, double t, std::vector<Complex>& inside,
                      std::vector<Complex>& outside);

/// E[gamma_1(lambda^(M,i); t, t)] as a single contour integral. Column i must
/// be interior (l < i <= r); columns with letter R use the same factor shapes
/// evaluated at 1/t. Throws when no admissible contour exists.
double finite_moment_k1(const RailYardSpec& spec, int i, double t, double tol = 1e-12);

/// Cov(gamma_1(lambda^(M,i_d)), gamma_1(lambda^(M,i_h))) as a double contour
/// integral of the two single-column integrands against T_LL - 1, over nested
/// circles with the later column strictly inside t times the earlier one.
/// Both columns must be interior with letter L. Throws when no nested pair of
/// circles exists; in that regime the covariance series itself can diverge.
double finite_covariance_11(const RailYardSpec& spec, int i_d, int i_h, double t,
                            double tol = 1e-11);

}  // namespace railyard
