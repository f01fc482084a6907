#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "railyard/fock.hpp"
#include "railyard/io.hpp"
#include "railyard/presets.hpp"
#include "railyard/svg.hpp"

using namespace railyard;

TEST_CASE("pyramid pattern on [-s .. s-1]") {
    auto x = std::vector<Rational>(6, Rational(1, 2));
    auto s = pyramid_finite(3, x);
    CHECK(s.l == -3);
    CHECK(s.r() == 2);
    std::string as, bs;
    for (int i = -3; i <= 2; ++i) {
        as += to_char(s.a_at(i));
        bs += to_char(s.b_at(i));
    }
    CHECK(as == "LRLRLR");
    CHECK(bs == "+++---");
    CHECK_THROWS(pyramid_finite(4, x));
    CHECK_THROWS(pyramid_finite(3, std::vector<Rational>(5, Rational(1, 2))));
}

TEST_CASE("pyramid profile weights converge and follow the mesh profile") {
    auto s = pyramid_finite_profile(5, 1.0, 1.0);
    CHECK(validate_spec(s).ok());
    // physical profile: increasing toward the center on the plus side
    CHECK(s.x_at(-5) < s.x_at(-1));
    CHECK(s.x_at(0) > s.x_at(4));
    CHECK_NOTHROW(partition_function_closed(s));
}

TEST_CASE("steep reduces to the pyramid word for the +..- sign pattern") {
    std::vector<Sign> signs;
    std::vector<Rational> x;
    for (int i = 0; i <= 6; ++i) {
        signs.push_back(i < 3 ? Sign::Plus : Sign::Minus);
        x.push_back(Rational(1, 3));
    }
    auto steep = steep_finite(3, signs, x);
    auto pyr = pyramid_finite(3, std::vector<Rational>(6, Rational(1, 3)));
    // same letter alternation, shifted index window
    for (int k = 0; k < 6; ++k) CHECK(to_char(steep.a[k]) != to_char(pyr.a[k]));
    CHECK(steep.columns() == 7);
}

TEST_CASE("aztec preset partition function is 2^{n(n+1)/2} at unit weight") {
    for (int n : {1, 2, 3}) {
        auto s = aztec_finite(n, Rational(1));
        Rational z = partition_function_closed(s);
        Rational expect(1);
        for (int k = 0; k < n * (n + 1) / 2; ++k) expect *= Rational(2);
        CHECK(z == expect);
    }
}

TEST_CASE("manifest and export_table") {
    RunManifest man;
    man.command = "railyard zfunction";
    man.spec_hash = content_hash("{}");
    man.seed = 7;
    man.tool_version = tool_version();
    man.rng_algorithm = "splitmix64";
    std::string path = "/tmp/railyard_test_table.csv";
    export_table("a,b\n1,2\n", path, man.to_json());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "a,b");
    std::remove(path.c_str());
    std::remove((path + ".manifest.json").c_str());
    CHECK(content_hash("x") != content_hash("y"));
    CHECK(content_hash("x") == content_hash("x"));
}

TEST_CASE("svg renderer is deterministic and rejects empty input") {
    SvgCurve c;
    c.points = {{0.0, 0.0}, {1.0, 1.0}, {2.0, 0.5}};
    auto s1 = render_curves({c}, nullptr);
    auto s2 = render_curves({c}, nullptr);
    CHECK(s1 == s2);
    CHECK(s1.find("<svg") == 0);
    CHECK_THROWS(render_curves({}, nullptr));

    SvgHeatmap hm;
    hm.xs = {0.0, 1.0};
    hm.ys = {0.0, 1.0};
    hm.z = {{0.0, 1.0}, {2.0, 0.5}};
    auto s3 = render_curves({c}, &hm);
    CHECK(s3.find("rect") != std::string::npos);
}
