#pragma once

#include <map>
#include <string>
#include <vector>

#include "railyard/partition.hpp"
#include "railyard/spec.hpp"

namespace railyard {

enum class GammaKind : uint8_t { LPlus, LMinus, RPlus, RMinus };

inline GammaKind gamma_kind(LR a, Sign b) {
    if (a == LR::L) return b == Sign::Plus ? GammaKind::LPlus : GammaKind::LMinus;
    return b == Sign::Plus ? GammaKind::RPlus : GammaKind::RMinus;
}

/// Element of the bosonic Fock space truncated to partitions of size <= N,
/// with coefficients in K. Absent keys mean coefficient zero.
template <class K>
struct BasicFockVector {
    std::map<Partition, K> coeffs;
    long truncation = 0;

    static BasicFockVector delta(const Partition& p, long truncation) {
        BasicFockVector v;
        v.truncation = truncation;
        v.coeffs.emplace(p, K(1));
        return v;
    }
    const K* find(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? nullptr : &it->second;
    }
};

using FockVector = BasicFockVector<Rational>;

/// Linear extension of Gamma_{kind}(x)|lambda> = sum over the interlacing
/// partners mu of x^{| |mu|-|lambda| |} |mu>, dropping |mu| > truncation.
template <class K>
BasicFockVector<K> apply_gamma(GammaKind kind, const K& x, const BasicFockVector<K>& v) {
    BasicFockVector<K> out;
    out.truncation = v.truncation;
    for (const auto& [lambda, c] : v.coeffs) {
        std::vector<Partition> partners;
        switch (kind) {
            case GammaKind::LPlus: partners = interlacing_below(lambda, false); break;
            case GammaKind::RPlus: partners = interlacing_below(lambda, true); break;
            case GammaKind::LMinus: partners = interlacing_above(lambda, false, v.truncation); break;
            case GammaKind::RMinus: partners = interlacing_above(lambda, true, v.truncation); break;
        }
        for (const auto& mu : partners) {
            long d = mu.size() - lambda.size();
            if (d < 0) d = -d;
            K term = c * x.pow(d);
            auto [it, fresh] = out.coeffs.emplace(mu, term);
            if (!fresh) it->second += term;
        }
    }
    return out;
}

/// Right-to-left transfer states v_i = Gamma_{a_i b_i}(x_i) v_{i+1} starting
/// from v_{r+1} = |empty>. Index k holds v_{l+k}; the last entry is v_{r+1}.
std::vector<FockVector> right_transfer_states(const RailYardSpec& spec, long truncation);

/// <empty| Gamma_{a_l b_l}(x_l) ... Gamma_{a_r b_r}(x_r) |empty> at the given
/// partition-size truncation.
Rational partition_function_braket(const RailYardSpec& spec, long truncation);

/// Closed form prod_{i<j, b_i=+, b_j=-} z_ij with z = 1 + x_i x_j for
/// different letters and 1/(1 - x_i x_j) for equal letters. Throws on a
/// divergent spec.
Rational partition_function_closed(const RailYardSpec& spec);

/// Rigorous bound on closed_form - braket(N): the truncation drops only
/// coverings whose pair-degree exceeds N, and the dropped mass is dominated
/// by the tail of a negative-binomial series in rho = max contributing pair
/// product. Returns 0 when there are no contributing pairs.
Rational braket_tail_bound(const RailYardSpec& spec, long truncation);

struct CommutationReport {
    char a1 = 'L', a2 = 'L';
    long truncation = 0;
    int degree = 0;
    long entries_checked = 0;
    bool plus_minus_exact = false;
    bool same_sign_plus_exact = false;
    bool same_sign_minus_exact = false;
    std::string first_discrepancy;
    bool ok() const { return plus_minus_exact && same_sign_plus_exact && same_sign_minus_exact; }
    std::string to_json() const;
};

/// Checks Gamma_{a1,+}(x1) Gamma_{a2,-}(x2) = z(x1 x2) Gamma_{a2,-}(x2) Gamma_{a1,+}(x1)
/// coefficient-wise as a formal series in x1 x2 up to the given degree, over
/// all bra/ket partitions of size <= truncation - degree, plus the same-sign
/// commutation identities entry-exactly. Every comparison is exact rational
/// arithmetic; any nonzero discrepancy fails the report.
CommutationReport verify_commutation(LR a1, LR a2, long truncation, int degree);

struct CauchyReport {
    Rational direct_lhs, direct_rhs;  // sum s_lambda(x) s_lambda(y) vs truncated 1/(1-xy)
    Rational dual_lhs, dual_rhs;      // sum s_lambda(x) s_lambda'(y) vs 1 + xy
    bool ok() const { return direct_lhs == direct_rhs && dual_lhs == dual_rhs; }
    std::string to_json() const;
};

/// Single-variable Cauchy identities summed honestly over all partitions of
/// size <= truncation via the interlacing-based Schur evaluation.
CauchyReport cauchy_truncated(const Rational& x, const Rational& y, long truncation);

}  // namespace railyard
