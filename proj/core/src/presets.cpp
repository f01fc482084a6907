#include "railyard/presets.hpp"

#include <cmath>

namespace railyard {

namespace {

void pyramid_pattern(int s, RailYardSpec& spec) {
    if (s <= 0 || s % 2 == 0)
        throw std::invalid_argument("pyramid preset: s must be odd and positive");
    spec.l = -s;
    for (int i = -s; i <= s - 1; ++i) {
        spec.a.push_back(i % 2 != 0 ? LR::L : LR::R);
        spec.b.push_back(i < 0 ? Sign::Plus : Sign::Minus);
    }
}

}  // namespace

RailYardSpec pyramid_finite(int s, const std::vector<Rational>& x) {
    RailYardSpec spec;
    pyramid_pattern(s, spec);
    if (x.size() != spec.a.size())
        throw std::invalid_argument("pyramid preset: expected " + std::to_string(spec.a.size()) +
                                    " weights");
    spec.x = x;
    return spec;
}

RailYardSpec pyramid_finite_profile(int s, double tau1, double tau2) {
    RailYardSpec spec;
    pyramid_pattern(s, spec);
    double eps = 1.0 / s;
    for (int i = -s; i <= s - 1; ++i) {
        double tau = i % 2 != 0 ? tau1 : tau2;
        double v = spec.b_at(i) == Sign::Plus ? tau * std::exp(eps * i) : std::exp(-eps * i) / tau;
        // rational snapshot of the profile (exact arithmetic downstream)
        long den = 1L << 40;
        long num = std::lround(v * static_cast<double>(den));
        spec.x.push_back(Rational(num, den));
    }
    return spec;
}

AsymptoticSpec pyramid_asymptotic(double v2, double tau1, double tau2) {
    if (!(v2 > 0)) throw std::invalid_argument("pyramid preset: V_2 must be positive");
    AsymptoticSpec s;
    s.n = 2;
    s.m = 2;
    s.V = {-v2, 0.0, v2};
    s.tau = {tau1, tau2};
    s.a_res = {LR::L, LR::R};
    s.b_seg = {{Sign::Plus, Sign::Plus}, {Sign::Minus, Sign::Minus}};
    s.beta = 1;
    s.validate();
    return s;
}

RailYardSpec steep_finite(int s, const std::vector<Sign>& signs, const std::vector<Rational>& x) {
    if (s <= 0) throw std::invalid_argument("steep preset: s must be positive");
    RailYardSpec spec;
    spec.l = 0;
    for (int i = 0; i <= 2 * s; ++i) spec.a.push_back(i % 2 != 0 ? LR::L : LR::R);
    if (signs.size() != spec.a.size() || x.size() != spec.a.size())
        throw std::invalid_argument("steep preset: expected " + std::to_string(spec.a.size()) +
                                    " signs and weights");
    spec.b = signs;
    spec.x = x;
    return spec;
}

RailYardSpec aztec_finite(int n, const Rational& x) {
    if (n <= 0) throw std::invalid_argument("aztec preset: n must be positive");
    RailYardSpec spec;
    spec.l = 1;
    for (int i = 1; i <= 2 * n; ++i) {
        spec.a.push_back(i % 2 != 0 ? LR::L : LR::R);
        spec.b.push_back(i % 2 != 0 ? Sign::Plus : Sign::Minus);
        spec.x.push_back(x);
    }
    return spec;
}

}  // namespace railyard
