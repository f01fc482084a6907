#pragma once

#include <string>
#include <vector>

#include "railyard/rational.hpp"

namespace railyard {

enum class LR : uint8_t { L, R };
enum class Sign : uint8_t { Plus, Minus };

inline char to_char(LR a) { return a == LR::L ? 'L' : 'R'; }
inline char to_char(Sign b) { return b == Sign::Plus ? '+' : '-'; }

/// Finite rail-yard graph data: columns l..r, per-column letter a_i, sign b_i
/// and diagonal-edge weight x_i.
struct RailYardSpec {
    int l = 0;
    std::vector<LR> a;        // a[i - l]
    std::vector<Sign> b;      // b[i - l]
    std::vector<Rational> x;  // x[i - l], all positive

    int r() const { return l + static_cast<int>(a.size()) - 1; }
    int columns() const { return static_cast<int>(a.size()); }
    LR a_at(int i) const { return a.at(i - l); }
    Sign b_at(int i) const { return b.at(i - l); }
    const Rational& x_at(int i) const { return x.at(i - l); }

    std::string to_json() const;
    static RailYardSpec from_json(const std::string& text);
};

/// One violated convergence pair: i < j, a_i = a_j, b_i = +, b_j = -, x_i x_j >= 1.
struct ConvergenceViolation {
    int i, j;
    Rational product;
};

struct ValidationReport {
    std::vector<ConvergenceViolation> violations;
    std::vector<std::string> structural_errors;  // sizes mismatched, nonpositive weights
    bool ok() const { return violations.empty() && structural_errors.empty(); }
    std::string to_json() const;
};

/// Checks structure and the convergence condition x_i x_j < 1 over all
/// same-letter (+,-) pairs in order.
ValidationReport validate_spec(const RailYardSpec& spec);

}  // namespace railyard
