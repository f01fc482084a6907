#include "railyard/fock.hpp"

#include <json.hpp>

namespace railyard {

using nlohmann::json;

std::vector<FockVector> right_transfer_states(const RailYardSpec& spec, long truncation) {
    std::vector<FockVector> states(spec.columns() + 1);
    states.back() = FockVector::delta(Partition(), truncation);
    for (int i = spec.r(); i >= spec.l; --i) {
        states[i - spec.l] =
            apply_gamma(gamma_kind(spec.a_at(i), spec.b_at(i)), spec.x_at(i), states[i - spec.l + 1]);
    }
    return states;
}

Rational partition_function_braket(const RailYardSpec& spec, long truncation) {
    auto states = right_transfer_states(spec, truncation);
    const Rational* z = states.front().find(Partition());
    return z ? *z : Rational(0);
}

Rational partition_function_closed(const RailYardSpec& spec) {
    Rational z(1);
    for (int i = spec.l; i <= spec.r(); ++i) {
        if (spec.b_at(i) != Sign::Plus) continue;
        for (int j = i + 1; j <= spec.r(); ++j) {
            if (spec.b_at(j) != Sign::Minus) continue;
            Rational prod = spec.x_at(i) * spec.x_at(j);
            if (spec.a_at(i) == spec.a_at(j)) {
                if (prod >= Rational(1))
                    throw std::domain_error("partition_function_closed: divergent pair (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
                z *= Rational(1) / (Rational(1) - prod);
            } else {
                z *= Rational(1) + prod;
            }
        }
    }
    return z;
}

Rational braket_tail_bound(const RailYardSpec& spec, long truncation) {
    // Dropped coverings correspond to pair multi-indices of total degree
    // d > N; their mass is at most sum_{d>N} C(d+P-1, P-1) rho^d with P the
    // number of contributing (+,-) pairs. The summand ratio is at most
    // rho (N+P+1)/(N+2) =: r, so the tail is bounded by the first term / (1-r).
    Rational rho(0);
    long pairs = 0;
    for (int i = spec.l; i <= spec.r(); ++i) {
        if (spec.b_at(i) != Sign::Plus) continue;
        for (int j = i + 1; j <= spec.r(); ++j) {
            if (spec.b_at(j) != Sign::Minus) continue;
            ++pairs;
            Rational prod = spec.x_at(i) * spec.x_at(j);
            if (prod > rho) rho = prod;
        }
    }
    if (pairs == 0 || rho.is_zero()) return Rational(0);
    if (rho >= Rational(1)) throw std::domain_error("braket_tail_bound: divergent spec");
    long n = truncation;
    Rational ratio = rho * Rational(n + pairs + 1, n + 2);
    if (ratio >= Rational(1))
        throw std::domain_error("braket_tail_bound: truncation too small for a geometric bound");
    // first term: C(N+P, P-1) rho^{N+1}
    Rational binom(1);
    for (long k = 1; k <= pairs - 1; ++k) binom *= Rational(n + 1 + k, k);
    return binom * rho.pow(n + 1) / (Rational(1) - ratio);
}

namespace {

/// Dense truncated polynomial over Rational in one formal variable; used to
/// compare operator identities coefficient-wise.
class PolyQ {
public:
    PolyQ() : c_(1, Rational(0)), cap_(0) {}
    explicit PolyQ(long v) : c_(1, Rational(v)), cap_(INT32_MAX) {}
    PolyQ(Rational v, int cap) : c_(1, std::move(v)), cap_(cap) {}
    static PolyQ variable(int cap) {
        PolyQ p(Rational(0), cap);
        p.c_.assign(2, Rational(0));
        p.c_[1] = Rational(1);
        return p;
    }

    int cap() const { return cap_; }
    Rational coeff(int d) const { return d < static_cast<int>(c_.size()) ? c_[d] : Rational(0); }

    PolyQ& operator+=(const PolyQ& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        cap_ = std::min(cap_, o.cap_);
        return *this;
    }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        PolyQ out;
        out.cap_ = std::min(a.cap_, b.cap_);
        size_t n = std::min<size_t>(a.c_.size() + b.c_.size() - 1, out.cap_ + 1);
        out.c_.assign(n, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size() && i + j < n; ++j)
                out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }
    PolyQ pow(long e) const {
        PolyQ out(Rational(1), cap_);
        for (long k = 0; k < e; ++k) out = out * *this;
        return out;
    }
    bool equal_up_to(const PolyQ& o, int d) const {
        for (int k = 0; k <= d; ++k)
            if (coeff(k) != o.coeff(k)) return false;
        return true;
    }
    std::string str_up_to(int d) const {
        std::string s;
        for (int k = 0; k <= d; ++k) s += coeff(k).str() + (k < d ? "," : "");
        return s;
    }

private:
    std::vector<Rational> c_;
    int cap_;
};

}  // namespace

CommutationReport verify_commutation(LR a1, LR a2, long truncation, int degree) {
    CommutationReport rep;
    rep.a1 = to_char(a1);
    rep.a2 = to_char(a2);
    rep.truncation = truncation;
    rep.degree = degree;
    rep.plus_minus_exact = true;
    rep.same_sign_plus_exact = true;
    rep.same_sign_minus_exact = true;

    long bound = truncation - degree;
    auto kets = partitions_up_to(static_cast<int>(std::max<long>(bound, 0)));
    int cap = 2 * degree + 1;
    PolyQ u = PolyQ::variable(cap);

    GammaKind plus1 = gamma_kind(a1, Sign::Plus);
    GammaKind minus2 = gamma_kind(a2, Sign::Minus);

    // z(x1 x2) as a series in u with x1 = x2 = u: 1/(1-u^2) or 1+u^2.
    PolyQ z(Rational(1), cap);
    if (a1 == a2) {
        for (int d = 2; d <= cap; d += 2) {
            PolyQ term(Rational(1), cap);
            term = u.pow(d);
            z += term;
        }
    } else {
        z += u * u;
    }

    for (const auto& nu : kets) {
        auto lhs = apply_gamma(plus1, u, apply_gamma(minus2, u, BasicFockVector<PolyQ>::delta(nu, truncation)));
        auto rhs0 = apply_gamma(minus2, u, apply_gamma(plus1, u, BasicFockVector<PolyQ>::delta(nu, truncation)));
        for (const auto& mu : kets) {
            ++rep.entries_checked;
            PolyQ le = lhs.find(mu) ? *lhs.find(mu) : PolyQ(Rational(0), cap);
            PolyQ re = rhs0.find(mu) ? *rhs0.find(mu) : PolyQ(Rational(0), cap);
            re = re * z;
            if (!le.equal_up_to(re, degree)) {
                rep.plus_minus_exact = false;
                if (rep.first_discrepancy.empty())
                    rep.first_discrepancy = "(+,-) entry mu=" + mu.str() + " nu=" + nu.str() +
                                            " lhs=[" + le.str_up_to(degree) + "] rhs=[" +
                                            re.str_up_to(degree) + "]";
            }
        }
    }

    // Same-sign relations hold entry-exactly at any truncation; check with
    // distinct rational weights.
    Rational x1(2, 5), x2(3, 7);
    for (Sign b : {Sign::Plus, Sign::Minus}) {
        GammaKind g1 = gamma_kind(a1, b), g2 = gamma_kind(a2, b);
        bool all_ok = true;
        for (const auto& nu : kets) {
            auto v1 = apply_gamma(g1, x1, apply_gamma(g2, x2, FockVector::delta(nu, truncation)));
            auto v2 = apply_gamma(g2, x2, apply_gamma(g1, x1, FockVector::delta(nu, truncation)));
            if (v1.coeffs.size() != v2.coeffs.size()) { all_ok = false; }
            for (const auto& [mu, c] : v1.coeffs) {
                const Rational* o = v2.find(mu);
                if (!o || *o != c) {
                    all_ok = false;
                    if (rep.first_discrepancy.empty())
                        rep.first_discrepancy = std::string("same-sign ") + (b == Sign::Plus ? "+" : "-") +
                                                " entry mu=" + mu.str() + " nu=" + nu.str();
                }
            }
            ++rep.entries_checked;
        }
        (b == Sign::Plus ? rep.same_sign_plus_exact : rep.same_sign_minus_exact) = all_ok;
    }
    return rep;
}

std::string CommutationReport::to_json() const {
    json j;
    j["a1"] = std::string(1, a1);
    j["a2"] = std::string(1, a2);
    j["truncation"] = truncation;
    j["degree"] = degree;
    j["entries_checked"] = entries_checked;
    j["plus_minus_exact"] = plus_minus_exact;
    j["same_sign_plus_exact"] = same_sign_plus_exact;
    j["same_sign_minus_exact"] = same_sign_minus_exact;
    j["ok"] = ok();
    if (!first_discrepancy.empty()) j["first_discrepancy"] = first_discrepancy;
    return j.dump();
}

CauchyReport cauchy_truncated(const Rational& x, const Rational& y, long truncation) {
    CauchyReport rep;
    rep.direct_lhs = Rational(0);
    rep.dual_lhs = Rational(0);
    for (const auto& lam : partitions_up_to(static_cast<int>(truncation))) {
        Rational sx = skew_schur_single(lam, Partition(), x);
        if (!sx.is_zero()) {
            rep.direct_lhs += sx * skew_schur_single(lam, Partition(), y);
            rep.dual_lhs += sx * skew_schur_single(lam.conjugate(), Partition(), y);
        }
    }
    Rational xy = x * y;
    rep.direct_rhs = Rational(0);
    Rational p(1);
    for (long k = 0; k <= truncation; ++k) {
        rep.direct_rhs += p;
        p *= xy;
    }
    rep.dual_rhs = Rational(1) + xy;
    return rep;
}

std::string CauchyReport::to_json() const {
    json j;
    j["direct_lhs"] = direct_lhs.str();
    j["direct_rhs"] = direct_rhs.str();
    j["dual_lhs"] = dual_lhs.str();
    j["dual_rhs"] = dual_rhs.str();
    j["ok"] = ok();
    return j.dump();
}

}  // namespace railyard
