#pragma once

#include "railyard/gfactor.hpp"

namespace railyard {

/// Limiting covariance of the centered observables Q_{k_d}(chi_d),
/// Q_{k_h}(chi_h): the double contour integral of
/// [G_{chi_d}(z)]^{k_d beta} [G_{chi_h}(w)]^{k_h beta} / (z - w)^2 times
/// k_d k_h n^2 beta^2 / (2 pi i)^2, with both contours enclosing 0 and their
/// own enclosed-pole sets, disjoint, and the larger-chi contour nested inside
/// (the ordering the finite-size formulas degenerate to).
double gff_covariance(const AsymptoticSpec& spec, double chi_d, double chi_h, int k_d, int k_h,
                      double tol = 1e-10);

/// Same with explicit inner/outer radius scales for invariance tests:
/// each contour is the moment contour scaled by the factor.
double gff_covariance_scaled(const AsymptoticSpec& spec, double chi_d, double chi_h, int k_d,
                             int k_h, double outer_scale, double inner_scale, double tol = 1e-10);

}  // namespace railyard
