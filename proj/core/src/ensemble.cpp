#include "railyard/ensemble.hpp"

#include <cmath>
#include <sstream>

#include "railyard/partition.hpp"

namespace railyard {

namespace {

void enumerate_rec(const RailYardSpec& spec, long budget, size_t max_entries, int i,
                   std::vector<Partition>& acc, WeightedEnsemble& out) {
    if (i > spec.r()) {
        if (!acc.back().is_empty()) return;
        DimerCovering m;
        m.partitions = acc;
        out.entries.emplace_back(m, covering_weight(spec, m));
        if (out.entries.size() > max_entries)
            throw std::runtime_error("enumerate_coverings: ensemble larger than the configured cap");
        return;
    }
    const Partition& cur = acc.back();
    bool dual = spec.a_at(i) == LR::R;
    std::vector<Partition> nexts = spec.b_at(i) == Sign::Minus
                                       ? interlacing_below(cur, dual)
                                       : interlacing_above(cur, dual, budget);
    for (const auto& nxt : nexts) {
        acc.push_back(nxt);
        enumerate_rec(spec, budget, max_entries, i + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

WeightedEnsemble enumerate_coverings(const RailYardSpec& spec, long budget, size_t max_entries) {
    auto rep = validate_spec(spec);
    if (!rep.structural_errors.empty())
        throw std::invalid_argument("enumerate_coverings: malformed spec");
    WeightedEnsemble out;
    out.budget = budget;
    std::vector<Partition> acc{Partition()};
    enumerate_rec(spec, budget, max_entries, spec.l, acc, out);
    out.total_weight = Rational(0);
    for (const auto& [m, w] : out.entries) out.total_weight += w;
    if (rep.ok()) {
        out.closed_form_z = partition_function_closed(spec);
        out.tail_bound = braket_tail_bound(spec, budget);
    }
    return out;
}

Rational exact_probability(const RailYardSpec& spec, const DimerCovering& m) {
    return covering_weight(spec, m) / partition_function_closed(spec);
}

ExactSampler::ExactSampler(const RailYardSpec& spec, long budget, const Rational& tail_tolerance)
    : spec_(spec), budget_(budget) {
    auto rep = validate_spec(spec);
    if (!rep.ok()) throw std::invalid_argument("ExactSampler: spec fails validation");
    right_states_ = right_transfer_states(spec, budget);
    Rational z = partition_function_closed(spec);
    const Rational* zn = right_states_.front().find(Partition());
    Rational braket = zn ? *zn : Rational(0);
    deficit_ = (z - braket) / z;
    if (deficit_ > tail_tolerance)
        throw std::runtime_error(
            "ExactSampler: truncation deficit " + deficit_.str() +
            " exceeds tolerance; increase the size budget (currently " +
            std::to_string(budget) + ")");
}

std::vector<std::pair<Partition, Rational>> ExactSampler::conditional_table(
    int column, const Partition& nu) const {
    if (column < spec_.l || column > spec_.r())
        throw std::invalid_argument("conditional_table: column out of range");
    bool dual = spec_.a_at(column) == LR::R;
    std::vector<Partition> nexts = spec_.b_at(column) == Sign::Minus
                                       ? interlacing_below(nu, dual)
                                       : interlacing_above(nu, dual, budget_);
    const FockVector& right = right_states_[column - spec_.l + 1];
    std::vector<std::pair<Partition, Rational>> table;
    Rational total(0);
    for (const auto& mu : nexts) {
        const Rational* zr = right.find(mu);
        if (!zr) continue;
        long d = std::labs(mu.size() - nu.size());
        Rational w = spec_.x_at(column).pow(d) * *zr;
        if (w.is_zero()) continue;
        total += w;
        table.emplace_back(mu, w);
    }
    if (total.is_zero()) throw std::logic_error("conditional_table: no admissible continuation");
    for (auto& [mu, w] : table) w /= total;
    return table;
}

DimerCovering ExactSampler::sample(SplitMix64& rng) const {
    DimerCovering m;
    m.partitions.reserve(spec_.columns() + 1);
    m.partitions.push_back(Partition());
    for (int i = spec_.l; i <= spec_.r(); ++i) {
        auto table = conditional_table(i, m.partitions.back());
        Rational u = rng.next_rational();
        Rational cum(0);
        const Partition* chosen = &table.back().first;
        for (const auto& [mu, p] : table) {
            cum += p;
            if (u < cum) {
                chosen = &mu;
                break;
            }
        }
        m.partitions.push_back(*chosen);
    }
    return m;
}

DimerCovering sample_mcmc(const RailYardSpec& spec, long steps, SplitMix64& rng,
                          const DimerCovering& start, long budget) {
    if (!covering_valid(spec, start)) throw std::invalid_argument("sample_mcmc: invalid start");
    DimerCovering cur = start;
    auto moves = flip_moves(spec, cur, budget);
    for (long s = 0; s < steps; ++s) {
        if (moves.empty()) break;
        size_t pick = static_cast<size_t>(rng.next() % moves.size());
        DimerCovering prop = apply_flip(spec, cur, moves[pick]);
        auto prop_moves = flip_moves(spec, prop, budget);
        Rational ratio = flip_weight_ratio(spec, cur, moves[pick]) *
                         Rational(static_cast<long>(moves.size()),
                                  static_cast<long>(prop_moves.size()));
        if (ratio >= Rational(1) || rng.next_rational() < ratio) {
            cur = std::move(prop);
            moves = std::move(prop_moves);
        }
    }
    return cur;
}

ObservableTable estimate_observables(const RailYardSpec& spec, long samples, double t,
                                     const std::vector<int>& ks, const std::vector<int>& columns,
                                     uint64_t seed, long budget, bool with_exact) {
    ExactSampler sampler(spec, budget);
    SplitMix64 rng(seed);

    std::vector<std::pair<int, int>> cells;  // (column, k)
    for (int c : columns)
        for (int k : ks) cells.emplace_back(c, k);
    size_t n = cells.size();

    std::vector<double> sum(n, 0.0), sum2(n, 0.0);
    std::vector<std::vector<double>> cross(n, std::vector<double>(n, 0.0));
    for (long s = 0; s < samples; ++s) {
        DimerCovering m = sampler.sample(rng);
        std::vector<double> v(n);
        for (size_t idx = 0; idx < n; ++idx)
            v[idx] = gamma_k(m.at(cells[idx].first, spec), cells[idx].second, t, t);
        for (size_t a = 0; a < n; ++a) {
            sum[a] += v[a];
            sum2[a] += v[a] * v[a];
            for (size_t b = 0; b < n; ++b) cross[a][b] += v[a] * v[b];
        }
    }

    ObservableTable out;
    out.sample_cov.assign(n, std::vector<double>(n, 0.0));
    for (size_t a = 0; a < n; ++a) {
        double mean = sum[a] / samples;
        double var = sum2[a] / samples - mean * mean;
        ObservableRow row{cells[a].first, cells[a].second, t, mean,
                          std::sqrt(std::max(var, 0.0) / samples), std::nullopt};
        out.rows.push_back(row);
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            out.sample_cov[a][b] = cross[a][b] / samples - (sum[a] / samples) * (sum[b] / samples);

    if (with_exact) {
        WeightedEnsemble ens = enumerate_coverings(spec, budget);
        std::vector<double> mean(n, 0.0);
        std::vector<std::vector<double>> m2(n, std::vector<double>(n, 0.0));
        double z = 0.0;
        std::vector<double> vals(n);
        for (const auto& [m, w] : ens.entries) {
            double wd = w.to_double();
            z += wd;
            for (size_t idx = 0; idx < n; ++idx)
                vals[idx] = gamma_k(m.at(cells[idx].first, spec), cells[idx].second, t, t);
            for (size_t a = 0; a < n; ++a) {
                mean[a] += wd * vals[a];
                for (size_t b = 0; b < n; ++b) m2[a][b] += wd * vals[a] * vals[b];
            }
        }
        out.exact_cov.assign(n, std::vector<double>(n, 0.0));
        for (size_t a = 0; a < n; ++a) {
            out.rows[a].exact = mean[a] / z;
            for (size_t b = 0; b < n; ++b)
                out.exact_cov[a][b] = m2[a][b] / z - (mean[a] / z) * (mean[b] / z);
        }
    }
    return out;
}

std::string ObservableTable::to_csv() const {
    std::ostringstream os;
    os << "column_index,k,t,mean,stderr,exact_if_available\n";
    os.precision(17);
    for (const auto& r : rows) {
        os << r.column << "," << r.k << "," << r.t << "," << r.mean << "," << r.stderr_ << ",";
        if (r.exact) os << *r.exact;
        os << "\n";
    }
    return os.str();
}

}  // namespace railyard
