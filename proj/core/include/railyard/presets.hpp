#pragma once

#include <optional>
#include <string>
#include <vector>

#include "railyard/asymptotic_spec.hpp"
#include "railyard/spec.hpp"

namespace railyard {

/// Pyramid pattern on columns [-s .. s-1]: a_i = L for odd i, R for even i;
/// b_i = + for i < 0 and - for i >= 0. s must be odd and positive.
/// With explicit weights, x must list 2s values in column order; otherwise
/// the mesh profile x_i = tau_j e^{eps i} (plus side) / e^{-eps i} / tau_j
/// (minus side) with eps = 1/s is used.
RailYardSpec pyramid_finite(int s, const std::vector<Rational>& x);
RailYardSpec pyramid_finite_profile(int s, double tau1, double tau2);

/// The matching scaling data: n = 2, m = 2, V = (-v2, 0, v2), residue letters
/// (L, R), signs (+ on the first segment, - on the second), beta = 1.
AsymptoticSpec pyramid_asymptotic(double v2, double tau1, double tau2);

/// Steep-tiling pattern on [0 .. 2s]: a_i = L for odd i, R for even i, with a
/// caller-provided sign word and explicit weights (the paper fixes no
/// canonical normalization).
RailYardSpec steep_finite(int s, const std::vector<Sign>& signs, const std::vector<Rational>& x);

/// Aztec-diamond pattern on [1 .. 2n]: alternating L/R letters and +/- signs.
RailYardSpec aztec_finite(int n, const Rational& x);

}  // namespace railyard
