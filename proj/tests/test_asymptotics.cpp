#include <doctest.h>

#include <cmath>

#include "railyard/limit_shape.hpp"
#include "railyard/presets.hpp"

using namespace railyard;

namespace {

// Independent oracle: the pyramid G-function with V = (-1, 0, 1) and
// tau = (1, 1), written out by hand from the four factor families.
Complex pyramid_g_reference(double chi, Complex w) {
    double e = std::exp(1.0);
    auto lin = [&](Complex num_root, Complex den_root) {
        return (1.0 - w / num_root) / (1.0 - w / den_root);
    };
    if (chi < 0) {
        return lin(1.0, std::exp(-1.0)) * lin(std::exp(-chi), e) *
               lin(-std::exp(-1.0), -1.0) * lin(-e, -std::exp(-chi));
    }
    return lin(std::exp(-chi), std::exp(-1.0)) * lin(1.0, e) * lin(-std::exp(-1.0), -std::exp(-chi)) *
           lin(-e, -1.0);
}

}  // namespace

TEST_CASE("pyramid G matches the hand-written reference on both segments") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    for (double chi : {-0.475, -0.12, 0.3, 0.77}) {
        GChi g(spec, chi);
        for (Complex w : {Complex(0.3, 0.4), Complex(-1.2, 0.9), Complex(2.0, -0.3),
                          Complex(0.05, 0.0)}) {
            Complex ref = pyramid_g_reference(chi, w);
            CHECK(std::abs(g.gtilde(w) - ref) <= 1e-12 * (1.0 + std::abs(ref)));
        }
    }
}

TEST_CASE("family product equals the combined evaluation (two code paths)") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    for (double chi : {-0.3, 0.52}) {
        GChi g(spec, chi);
        for (Complex w : {Complex(2.0, 0.0), Complex(0.4, 1.1), Complex(-0.8, -0.2)}) {
            auto fv = g.family_values(w);
            CHECK(std::abs(fv.gtilde - g.gtilde(w)) <= 1e-12 * (1.0 + std::abs(fv.gtilde)));
        }
    }
}

TEST_CASE("G is real positive on the positive axis beyond all points") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    GChi g(spec, -0.4);
    Complex v = g.value(Complex(9.0, 0.0));
    CHECK(v.imag() == doctest::Approx(0.0));
    CHECK(v.real() > 0.0);
    // conjugate symmetry
    Complex w(0.7, 0.52);
    CHECK(std::abs(g.gtilde(std::conj(w)) - std::conj(g.gtilde(w))) < 1e-13);
}

TEST_CASE("pole/zero sets: signs and enclosure bookkeeping") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    double chi = -0.4;
    auto sets = pole_zero_sets(spec, chi);
    for (int fam : {0, 1})
        for (int kind : {0, 1})
            for (double p : sets.sets[fam][kind]) CHECK(p > 0);
    for (int fam : {2, 3})
        for (int kind : {0, 1})
            for (double p : sets.sets[fam][kind]) CHECK(p < 0);
    REQUIRE(sets.r_chi.size() == 2);
    CHECK(sets.r_chi[0] == doctest::Approx(-1.0));
    CHECK(sets.r_chi[1] == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("solve_roots: liquid point has exactly one conjugate pair") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    auto rc = solve_roots(spec, -0.475, 0.3);
    CHECK(rc.region == Region::Liquid);
    REQUIRE(rc.w_plus.has_value());
    CHECK(rc.w_plus->imag() > 0);
    CHECK(rc.max_residual < 1e-9);
    // real roots + the pair account for every root
    CHECK(rc.all_roots.size() == rc.real_roots.size() + 2);
}

TEST_CASE("solve_roots: far kappa is frozen with all-real roots") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    for (double kappa : {-6.0, 6.0}) {
        auto rc = solve_roots(spec, -0.475, kappa);
        CHECK(rc.region == Region::Frozen);
        CHECK(rc.all_roots.size() == rc.real_roots.size());
    }
}

TEST_CASE("density: range, frozen values and liquid interior") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    double chi = -0.475;
    for (double kappa = -3.0; kappa <= 3.0; kappa += 0.25) {
        double d = density(spec, chi, kappa);
        CHECK(d >= -1e-9);
        CHECK(d <= 2.0 + 1e-9);
    }
    CHECK(density(spec, chi, -5.0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(density(spec, chi, 5.0) == doctest::Approx(2.0).epsilon(1e-9));
    double mid = density(spec, chi, 0.0);
    CHECK(mid > 0.2);
    CHECK(mid < 1.8);
}

TEST_CASE("liquid bands of the symmetric pyramid are kappa-symmetric") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    auto bands = liquid_bands(spec, -0.475);
    REQUIRE(bands.size() == 1);
    CHECK(bands[0].first == doctest::Approx(-bands[0].second).epsilon(1e-6));
}

TEST_CASE("limit_height: zero below support, monotone, Lipschitz-2") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    double chi = -0.35;
    CHECK(limit_height(spec, chi, -8.0) == doctest::Approx(0.0));
    double prev = 0.0;
    for (double kappa = -2.0; kappa <= 2.01; kappa += 0.5) {
        double h = limit_height(spec, chi, kappa);
        CHECK(h >= prev - 1e-8);
        CHECK(h - prev <= 2.0 * 0.5 + 1e-6);
        prev = h;
    }
}

TEST_CASE("w_plus: contract, continuity and injectivity on a small liquid grid") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    std::vector<Complex> imgs;
    for (double chi : {-0.6, -0.4, -0.2}) {
        for (double kappa : {-0.4, 0.0, 0.4}) {
            Complex wp = w_plus(spec, chi, kappa);
            CHECK(wp.imag() > 0);
            GChi g(spec, chi);
            double s = std::exp(-2.0 * kappa);
            CHECK(std::abs(g.value(wp) - s) <= 1e-10 * (1.0 + s));
            imgs.push_back(wp);
        }
    }
    for (size_t i = 0; i < imgs.size(); ++i)
        for (size_t j = i + 1; j < imgs.size(); ++j)
            CHECK(std::abs(imgs[i] - imgs[j]) > 1e-9);
    CHECK_THROWS(w_plus(spec, -0.475, 5.0));
}

TEST_CASE("laplace identity at a liquid chi") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    for (double alpha : {1.0, 2.0}) {
        auto rep = laplace_check(spec, -0.475, alpha);
        INFO("alpha=", alpha, " lhs=", rep.transform_side, " rhs=", rep.contour_side);
        CHECK(rep.rel_gap < 1e-3);
        CHECK(rep.imag_residual < 1e-10);
    }
}

TEST_CASE("laplace contour side is radius invariant") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    GChi g(spec, -0.475);
    ContourSpec base = g.moment_contour();
    auto value = [&](double scale) {
        ContourSpec c = base;
        for (auto& comp : c.components) comp.radius *= scale;
        return integrate_contour([&](Complex w) { return g.pow_alpha(w, 1.0) / w; }, c).value;
    };
    CHECK(std::abs(value(1.0) - value(0.8)) < 1e-10);
}

TEST_CASE("U/R decomposition identity and f monotonicity") {
    for (auto spec : {pyramid_asymptotic(1.0, 1.0, 1.0), pyramid_asymptotic(1.0, 10.0, 0.1)}) {
        for (double chi : {-0.53, 0.21}) {
            GChi g(spec, chi);
            for (Complex w : {Complex(0.3, 0.7), Complex(-0.9, 0.2), Complex(1.9, -1.0)}) {
                Complex lhs = g.gtilde(w) * u_chi_function(spec, chi, w);
                Complex rhs = r_function(spec, w);
                CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
            }
        }
        // f strictly increasing on each pole-free interval, limits 0 at +-inf
        auto brk = f_breakpoints(spec);
        double h = 1e-6;
        for (size_t i = 0; i + 1 < brk.size(); ++i) {
            double mid = 0.5 * (brk[i] + brk[i + 1]);
            CHECK(f_function(spec, mid + h) > f_function(spec, mid - h));
        }
        CHECK(std::abs(f_function(spec, 1e9)) < 1e-6);
        CHECK(std::abs(f_function(spec, -1e9)) < 1e-6);
        CHECK(f_function(spec, 1e9) < 0);   // approaches 0 from below
        CHECK(f_function(spec, -1e9) > 0);  // and from above on the left
    }
}

TEST_CASE("check_assumptions: pyramid presets pass, constructed violation reported") {
    CHECK(check_assumptions(pyramid_asymptotic(1.0, 1.0, 1.0)).ok());
    CHECK(check_assumptions(pyramid_asymptotic(1.0, 10.0, 0.1)).ok());

    AsymptoticSpec bad;
    bad.n = 2;
    bad.m = 2;
    bad.V = {-1.0, 0.0, 1.0};
    bad.tau = {3.0, 1.0};
    bad.a_res = {LR::L, LR::L};
    bad.b_seg = {{Sign::Plus, Sign::Plus}, {Sign::Minus, Sign::Minus}};
    bad.beta = 1;
    auto rep = check_assumptions(bad);
    CHECK_FALSE(rep.parameter_ok_74);
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("asymptotic spec json round trip") {
    auto spec = pyramid_asymptotic(1.0, 10.0, 0.1);
    auto s2 = AsymptoticSpec::from_json(spec.to_json());
    CHECK(s2.to_json() == spec.to_json());
    CHECK(s2.n == 2);
    CHECK(s2.V[0] == doctest::Approx(-1.0));
}
