#pragma once

#include <complex>
#include <vector>

#include "railyard/asymptotic_spec.hpp"
#include "railyard/contour.hpp"

namespace railyard {

/// The eight per-family point sets of G_chi: family 1 is the right-side
/// same-letter factors, 2 the left-side same-letter, 3 the right-side
/// cross-letter, 4 the left-side cross-letter; index 1 holds the points where
/// the family denominator vanishes (poles), index 2 the numerator zeros.
struct PoleZeroSets {
    std::vector<double> sets[4][2];
    std::vector<double> r_chi;  // enclosed poles: family 1 and 3 poles after cancellation
};

/// One linear factor (1 - sign * w * tau * e^{V})^{exponent} in the
/// normalized basis; point = sign-carrying root -sign * e^{-V} / tau.
struct HatFactor {
    double point;  // the w where the factor vanishes (or blows up)
    int exponent;  // +1 numerator, -1 denominator (unit power; beta applied globally)
};

/// G_chi at a fixed chi, as the beta-th power of a rational function
/// gtilde(w) = C prod (w - z_i) / prod (w - p_i) with real points and C > 0.
class GChi {
public:
    GChi(const AsymptoticSpec& spec, double chi);

    double chi() const { return chi_; }
    int beta() const { return spec_->beta; }
    int period() const { return spec_->n; }

    /// Values of the four family products and their product gtilde at w.
    struct FamilyValues {
        Complex g1_right, g1_left, g0_right, g0_left, gtilde;
    };
    FamilyValues family_values(Complex w) const;

    Complex gtilde(Complex w) const;
    /// gtilde^beta (integer power; no branch ambiguity).
    Complex value(Complex w) const;
    /// [G_chi(w)]^alpha with the argument accumulated factor by factor, so the
    /// branch is real-positive where every factor is positive real.
    Complex pow_alpha(Complex w, double alpha) const;
    /// d/dw log gtilde(w).
    Complex dlog(Complex w) const;

    const std::vector<double>& zeros() const { return zeros_; }
    const std::vector<double>& poles() const { return poles_; }
    const std::vector<double>& enclosed() const { return r_chi_; }  // R_chi
    const PoleZeroSets& family_sets() const { return sets_; }
    double log_const() const { return log_const_; }

    /// All zeros and poles that a moment contour must leave outside.
    std::vector<double> excluded_points() const;

    /// Contour enclosing {0} and R_chi while excluding every other zero/pole.
    ContourSpec moment_contour() const;

    /// Real coefficients of C^beta prod (w - z)^beta - s prod (w - p)^beta,
    /// lowest degree first.
    std::vector<double> cleared_polynomial(double s) const;

private:
    const AsymptoticSpec* spec_;
    double chi_;
    std::vector<double> zeros_, poles_;  // unit power, after cancellation
    double log_const_ = 0.0;             // log C
    PoleZeroSets sets_;
    std::vector<double> r_chi_;
    // per-family factor lists in the normalized basis for family_values
    std::vector<HatFactor> fam_[4];
    double fam_log_const_[4] = {0, 0, 0, 0};
};

/// chi-dependent part U_chi, the chi-independent part R (computed from its
/// own telescoped factor list), and the frozen-boundary auxiliaries f and g:
/// gtilde_chi(w) = R(w) / U_chi(w), f(s) carries the chi-part of the critical
/// equation via s = e^{-chi} / u, and g is the chi-free remainder of
/// d log gtilde / dw.
struct URDecomposition {
    Complex u_chi;     // U_chi(w)
    Complex r_part;    // R(w)
    double f_value;    // f(s) for the s passed in
    Complex g_value;   // g(w)
};

URDecomposition u_r_f_g(const AsymptoticSpec& spec, double chi, Complex w, double s_for_f);

double f_function(const AsymptoticSpec& spec, double s);
Complex g_function(const AsymptoticSpec& spec, Complex w);
Complex r_function(const AsymptoticSpec& spec, Complex w);
Complex u_chi_function(const AsymptoticSpec& spec, double chi, Complex w);

/// Breakpoints of f: {tau_j : a_j = L} and {-tau_j : a_j = R}, sorted.
std::vector<double> f_breakpoints(const AsymptoticSpec& spec);

/// The chi-independent zeros and poles of gtilde (the set S the frozen
/// boundary parametrization must avoid).
std::vector<double> s_points(const AsymptoticSpec& spec);

PoleZeroSets pole_zero_sets(const AsymptoticSpec& spec, double chi);

}  // namespace railyard
