#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace railyard {

using Complex = std::complex<double>;

struct Circle {
    Complex center;
    double radius;
};

/// Positively oriented union of disjoint circles with bookkeeping of which
/// points must end up inside / outside.
struct ContourSpec {
    std::vector<Circle> components;
    std::vector<Complex> required_inside;
    std::vector<Complex> required_outside;

    bool contains(const Complex& z) const;
    /// Checks disjointness and the inside/outside annotations; returns an
    /// empty string when valid, else a diagnostic.
    std::string validate() const;
};

struct QuadratureResult {
    Complex value;
    double error_estimate = 0.0;
    long nodes_used = 0;
};

/// (1/2 pi i) oint f dz over the contour, by per-circle trapezoid sums with
/// node doubling until two refinements agree within tol. Spectrally accurate
/// for integrands analytic near the circles. Throws after node_cap nodes per
/// circle without convergence.
QuadratureResult integrate_contour(const std::function<Complex(Complex)>& f,
                                   const ContourSpec& contour, double tol = 1e-12,
                                   long node_cap = 1 << 20);

/// Constructs a contour enclosing `inside` and excluding `outside`. Tries a
/// single origin-centered circle with the geometric-mean radius first; when
/// the in/out moduli interleave it falls back to a union of circles around
/// clusters of inside points. Throws with a diagnostic when separation is
/// impossible (relative gap below min_gap).
ContourSpec make_contour(const std::vector<Complex>& inside, const std::vector<Complex>& outside,
                         double min_gap = 0.05);

}  // namespace railyard
