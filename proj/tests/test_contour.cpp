#include <doctest.h>

#include <cmath>

#include "railyard/contour.hpp"

using namespace railyard;

TEST_CASE("residue sanity on rational test functions") {
    ContourSpec unit;
    unit.components.push_back({Complex(0, 0), 1.0});

    auto q1 = integrate_contour([](Complex z) { return 1.0 / z; }, unit);
    CHECK(std::abs(q1.value - Complex(1, 0)) < 1e-12);

    Complex a(0.3, 0.2);
    auto q2 = integrate_contour([&](Complex z) { return 1.0 / (z - a); }, unit);
    CHECK(std::abs(q2.value - Complex(1, 0)) < 1e-12);

    Complex b(1.7, -0.4);
    auto q3 = integrate_contour([&](Complex z) { return 1.0 / (z - b); }, unit);
    CHECK(std::abs(q3.value) < 1e-12);

    for (int k = 0; k <= 3; ++k) {
        auto q = integrate_contour([&](Complex z) { return std::pow(z, k); }, unit);
        CHECK(std::abs(q.value) < 1e-12);
    }

    // second-order pole: residue of 1/(z-a)^2 is 0; of z/(z-a)^2 is 1
    auto q4 = integrate_contour([&](Complex z) { return 1.0 / ((z - a) * (z - a)); }, unit);
    CHECK(std::abs(q4.value) < 1e-12);
    auto q5 = integrate_contour([&](Complex z) { return z / ((z - a) * (z - a)); }, unit);
    CHECK(std::abs(q5.value - Complex(1, 0)) < 1e-12);
}

TEST_CASE("multi-component contours add their residues") {
    ContourSpec two;
    two.components.push_back({Complex(0, 0), 0.4});
    two.components.push_back({Complex(3, 0), 0.4});
    auto q = integrate_contour(
        [](Complex z) { return 1.0 / z + 2.0 / (z - 3.0) + 5.0 / (z - 1.5); }, two);
    CHECK(std::abs(q.value - Complex(3, 0)) < 1e-12);
}

TEST_CASE("contour validation catches bad geometry") {
    ContourSpec overlap;
    overlap.components.push_back({Complex(0, 0), 1.0});
    overlap.components.push_back({Complex(1, 0), 1.0});
    CHECK(!overlap.validate().empty());

    ContourSpec ok;
    ok.components.push_back({Complex(0, 0), 1.0});
    ok.required_inside = {Complex(0.5, 0)};
    ok.required_outside = {Complex(2, 0)};
    CHECK(ok.validate().empty());

    ok.required_outside.push_back(Complex(0.2, 0));
    CHECK(!ok.validate().empty());
}

TEST_CASE("make_contour: single circle when moduli separate") {
    auto c = make_contour({Complex(0, 0), Complex(0.3, 0), Complex(-0.2, 0)},
                          {Complex(2.0, 0), Complex(-1.5, 0)});
    CHECK(c.components.size() == 1);
    CHECK(c.validate().empty());
}

TEST_CASE("make_contour: union of circles when moduli interleave") {
    // inside {0, 1, -e}, outside points in between
    std::vector<Complex> inside = {Complex(0, 0), Complex(1, 0), Complex(-2.718, 0)};
    std::vector<Complex> outside = {Complex(0.6, 0), Complex(-0.37, 0), Complex(2.7, 0),
                                    Complex(-1.0, 0)};
    auto c = make_contour(inside, outside);
    CHECK(c.components.size() >= 2);
    CHECK(c.validate().empty());

    // residues: only the inside poles count
    auto q = integrate_contour(
        [&](Complex z) {
            Complex v = 0.0;
            for (const auto& p : inside) v += 1.0 / (z - p);
            for (const auto& p : outside) v += 10.0 / (z - p);
            return v;
        },
        c);
    CHECK(std::abs(q.value - Complex(3, 0)) < 1e-10);
}

TEST_CASE("make_contour fails loudly when separation is impossible") {
    CHECK_THROWS(make_contour({Complex(1.0, 0)}, {Complex(1.0 + 1e-9, 0)}));
}
