#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "railyard/covering.hpp"
#include "railyard/fock.hpp"

namespace railyard {

/// Deterministic splittable 64-bit generator (splitmix64). Identical seeds
/// reproduce identical streams on every platform.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0,1) with 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Exact dyadic uniform k / 2^64 as a rational.
    Rational next_rational() {
        uint64_t k = next();
        Rational num(static_cast<long>(k >> 32));
        num = num * Rational(1L << 31) * Rational(2) + Rational(static_cast<long>(k & 0xffffffffull));
        Rational den = Rational(1L << 31) * Rational(1L << 31) * Rational(4);
        return num / den;
    }
    /// Independent child stream.
    SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ull); }

    static const char* algorithm() { return "splitmix64"; }
};

struct WeightedEnsemble {
    std::vector<std::pair<DimerCovering, Rational>> entries;
    long budget = 0;           // per-partition size bound used for enumeration
    Rational total_weight;     // sum of entry weights
    Rational tail_bound;       // rigorous bound on Z - total_weight
    Rational closed_form_z;    // exact Z when the spec converges
};

/// All interlacing sequences with every |lambda^(i)| <= budget, with exact
/// weights. Throws when more than max_entries coverings would be produced.
WeightedEnsemble enumerate_coverings(const RailYardSpec& spec, long budget,
                                     size_t max_entries = 2'000'000);

/// w(M) / Z with the closed-form partition function.
Rational exact_probability(const RailYardSpec& spec, const DimerCovering& m);

/// Sequential conditional sampler: draws columns left to right with
/// Pr(lambda^(i+1) = mu | lambda^(i)) proportional to the transfer weight
/// times the right partition function, all in exact rational arithmetic.
class ExactSampler {
public:
    /// Throws when the truncation deficit (Z - braket(N)) / Z exceeds
    /// tail_tolerance (default 1e-9; pass a larger value to override).
    ExactSampler(const RailYardSpec& spec, long budget,
                 const Rational& tail_tolerance = Rational(1, 1000000000L));

    DimerCovering sample(SplitMix64& rng) const;

    /// The conditional distribution of lambda^(i+1) given lambda^(i) = nu.
    std::vector<std::pair<Partition, Rational>> conditional_table(int column,
                                                                  const Partition& nu) const;

    const Rational& truncation_deficit() const { return deficit_; }
    long budget() const { return budget_; }

private:
    RailYardSpec spec_;
    long budget_;
    std::vector<FockVector> right_states_;
    Rational deficit_;
};

/// Metropolis chain over single-box flips with uniform proposals and the
/// proposal-count correction; stationary distribution is the weight measure
/// restricted to the budget-truncated state space.
DimerCovering sample_mcmc(const RailYardSpec& spec, long steps, SplitMix64& rng,
                          const DimerCovering& start, long budget);

struct ObservableRow {
    int column;
    int k;
    double t;
    double mean;
    double stderr_;
    std::optional<double> exact;
};

struct ObservableTable {
    std::vector<ObservableRow> rows;
    // sample and (when enumerable) exact covariances over the row index pairs
    std::vector<std::vector<double>> sample_cov;
    std::vector<std::vector<double>> exact_cov;
    std::string to_csv() const;
};

/// Monte-Carlo means/covariances of gamma_k(lambda^(M,i); t, t) over the
/// exact sampler, with exact weighted values when the spec is enumerable
/// within the given budget.
ObservableTable estimate_observables(const RailYardSpec& spec, long samples, double t,
                                     const std::vector<int>& ks, const std::vector<int>& columns,
                                     uint64_t seed, long budget, bool with_exact = true);

}  // namespace railyard
