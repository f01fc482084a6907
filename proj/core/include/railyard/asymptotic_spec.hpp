#pragma once

#include <string>
#include <vector>

#include "railyard/spec.hpp"

namespace railyard {

/// Piecewise-periodic scaling data: n-periodic residue letters a(j), segment
/// boundaries V_0 < ... < V_m, per-(residue, segment) signs b(j,p), residue
/// weights tau_j and the rate beta relating t to the mesh (t = e^{-n beta eps}).
///
/// Finite graphs drawn from this data carry the convergent weight profile
/// x_i = tau_j e^{eps i} on plus columns and x_i = e^{-eps i} / tau_j on minus
/// columns (residue j = i mod n).
struct AsymptoticSpec {
    int n = 1;
    int m = 1;
    std::vector<double> V;               // size m+1, strictly increasing
    std::vector<double> tau;             // size n, positive
    std::vector<LR> a_res;               // size n; a_res[j-1] for residue j
    std::vector<std::vector<Sign>> b_seg;  // [p-1][j-1], segment-major
    int beta = 1;

    LR a(int j) const { return a_res.at(j - 1); }
    Sign b(int j, int p) const { return b_seg.at(p - 1).at(j - 1); }
    double tau_at(int j) const { return tau.at(j - 1); }

    /// Throws on malformed data.
    void validate() const;

    std::string to_json() const;
    static AsymptoticSpec from_json(const std::string& text);
};

struct AssumptionReport {
    // Pole/zero interleaving of the G-factor families at sampled chi values.
    bool interleaving_ok = true;
    // Explicit parameter inequalities guaranteeing the interleaving.
    bool parameter_ok_62 = true;   // root-count hypotheses
    bool parameter_ok_74 = true;   // frozen-boundary hypotheses
    std::vector<std::string> violations;
    bool ok() const { return interleaving_ok && parameter_ok_62 && parameter_ok_74; }
    std::string to_json() const;
};

/// Evaluates the interleaving conditions at sampled chi plus the explicit
/// parameter inequalities; report-style (never throws on violations).
AssumptionReport check_assumptions(const AsymptoticSpec& spec);

}  // namespace railyard
