#include "railyard/spec.hpp"

#include <json.hpp>

namespace railyard {

using nlohmann::json;

std::string RailYardSpec::to_json() const {
    json j;
    j["l"] = l;
    j["r"] = r();
    json ja = json::array(), jb = json::array(), jx = json::array();
    for (auto v : a) ja.push_back(std::string(1, to_char(v)));
    for (auto v : b) jb.push_back(std::string(1, to_char(v)));
    for (const auto& v : x) jx.push_back(v.str());
    j["a"] = ja;
    j["b"] = jb;
    j["x"] = jx;
    return j.dump();
}

RailYardSpec RailYardSpec::from_json(const std::string& text) {
    json j = json::parse(text);
    RailYardSpec s;
    s.l = j.at("l").get<int>();
    for (const auto& v : j.at("a")) {
        std::string c = v.get<std::string>();
        if (c != "L" && c != "R") throw std::invalid_argument("spec: a entries must be L or R");
        s.a.push_back(c == "L" ? LR::L : LR::R);
    }
    for (const auto& v : j.at("b")) {
        std::string c = v.get<std::string>();
        if (c != "+" && c != "-") throw std::invalid_argument("spec: b entries must be + or -");
        s.b.push_back(c == "+" ? Sign::Plus : Sign::Minus);
    }
    for (const auto& v : j.at("x")) s.x.push_back(Rational::parse(v.get<std::string>()));
    if (j.contains("r") && j.at("r").get<int>() != s.r())
        throw std::invalid_argument("spec: r inconsistent with l and sequence lengths");
    return s;
}

ValidationReport validate_spec(const RailYardSpec& spec) {
    ValidationReport rep;
    if (spec.a.size() != spec.b.size() || spec.a.size() != spec.x.size())
        rep.structural_errors.push_back("a, b, x must have equal lengths");
    if (spec.a.empty()) rep.structural_errors.push_back("spec has no columns");
    for (size_t k = 0; k < spec.x.size(); ++k)
        if (spec.x[k].sign() <= 0)
            rep.structural_errors.push_back("x[" + std::to_string(spec.l + static_cast<int>(k)) +
                                            "] must be positive");
    if (!rep.structural_errors.empty()) return rep;

    for (int i = spec.l; i <= spec.r(); ++i) {
        if (spec.b_at(i) != Sign::Plus) continue;
        for (int j = i + 1; j <= spec.r(); ++j) {
            if (spec.b_at(j) != Sign::Minus || spec.a_at(j) != spec.a_at(i)) continue;
            Rational prod = spec.x_at(i) * spec.x_at(j);
            if (prod >= Rational(1)) rep.violations.push_back({i, j, prod});
        }
    }
    return rep;
}

std::string ValidationReport::to_json() const {
    json j;
    j["ok"] = ok();
    json v = json::array();
    for (const auto& viol : violations)
        v.push_back({{"i", viol.i}, {"j", viol.j}, {"product", viol.product.str()}});
    j["violations"] = v;
    j["structural_errors"] = structural_errors;
    return j.dump();
}

}  // namespace railyard
