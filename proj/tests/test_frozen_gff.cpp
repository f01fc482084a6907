#include <doctest.h>

#include <cmath>

#include "railyard/frozen_boundary.hpp"
#include "railyard/gff.hpp"
#include "railyard/limit_shape.hpp"
#include "railyard/presets.hpp"

using namespace railyard;

TEST_CASE("frozen boundary: residuals at every emitted point") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    auto res = frozen_boundary(spec, default_u_grid(spec, 16));
    REQUIRE(res.points.size() > 40);
    for (const auto& pt : res.points) {
        CHECK(pt.res_value < 1e-8);
        CHECK(pt.res_deriv < 1e-8);
        CHECK(pt.chi > -1.0);
        CHECK(pt.chi < 1.0);
    }
}

TEST_CASE("frozen boundary agrees with the liquid band edges") {
    // two independent routes to the arctic curve: the double-root
    // parametrization and root classification in kappa
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    auto res = frozen_boundary(spec, default_u_grid(spec, 28));
    for (double chi : {-0.5, 0.3}) {
        auto bands = liquid_bands(spec, chi);
        REQUIRE(bands.size() == 1);
        for (double edge : {bands[0].first, bands[0].second}) {
            double best = 1e9;
            for (const auto& pt : res.points)
                best = std::min(best, std::hypot(pt.chi - chi, pt.kappa - edge));
            CHECK(best < 0.05);  // a curve point passes near each band edge
        }
    }
}

TEST_CASE("frozen boundary of the symmetric pyramid is kappa- and chi-symmetric") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    auto res = frozen_boundary(spec, default_u_grid(spec, 20));
    double max_chi = -2, min_chi = 2;
    for (const auto& pt : res.points) {
        max_chi = std::max(max_chi, pt.chi);
        min_chi = std::min(min_chi, pt.chi);
    }
    CHECK(max_chi == doctest::Approx(-min_chi).epsilon(0.02));
    // pointwise kappa-reflection on the bounded part of the curve
    int checked = 0;
    for (const auto& pt : res.points) {
        if (std::abs(pt.kappa) > 2.0) continue;
        double best = 1e9;
        for (const auto& qt : res.points)
            best = std::min(best, std::hypot(qt.chi - pt.chi, qt.kappa + pt.kappa));
        CHECK(best < 0.08);
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("gff covariance: symmetry, positivity, invariance") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    double var_a = gff_covariance(spec, -0.5, -0.5, 1, 1);
    double var_b = gff_covariance(spec, -0.3, -0.3, 1, 1);
    CHECK(var_a > 0);
    CHECK(var_b > 0);

    double cov_ab = gff_covariance(spec, -0.5, -0.3, 1, 1);
    double cov_ba = gff_covariance(spec, -0.3, -0.5, 1, 1);
    CHECK(std::abs(cov_ab - cov_ba) < 1e-9 * (1.0 + std::abs(cov_ab)));

    // a valid Gaussian covariance obeys Cauchy-Schwarz
    CHECK(std::abs(cov_ab) <= std::sqrt(var_a * var_b) * (1.0 + 1e-9));

    double again = gff_covariance_scaled(spec, -0.5, -0.3, 1, 1, 0.9, 0.5);
    CHECK(std::abs(again - cov_ab) < 1e-9 * (1.0 + std::abs(cov_ab)));
}

TEST_CASE("gff covariance: higher k and cross-k symmetry") {
    auto spec = pyramid_asymptotic(1.0, 1.0, 1.0);
    double c12 = gff_covariance(spec, -0.5, -0.25, 1, 2);
    double c21 = gff_covariance(spec, -0.25, -0.5, 2, 1);
    CHECK(std::abs(c12 - c21) < 1e-9 * (1.0 + std::abs(c12)));
}
