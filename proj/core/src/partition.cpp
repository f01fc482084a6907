#include "railyard/partition.hpp"

#include <cmath>

namespace railyard {

namespace {

bool interlaces_direct(const Partition& mu, const Partition& lambda) {
    // lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
    int n = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= n; ++i) {
        if (lambda.part(i) < mu.part(i)) return false;
        if (mu.part(i) < lambda.part(i + 1)) return false;
    }
    return true;
}

}  // namespace

bool interlaces(const Partition& mu, const Partition& lambda, bool dual) {
    if (!dual) return interlaces_direct(mu, lambda);
    return interlaces_direct(mu.conjugate(), lambda.conjugate());
}

Rational skew_schur_single(const Partition& lambda, const Partition& mu, const Rational& x) {
    if (!interlaces(mu, lambda, /*dual=*/false)) return Rational(0);
    return x.pow(lambda.size() - mu.size());
}

double gamma_k(const Partition& lambda, int k, double q, double t) {
    if (k <= 0) throw std::invalid_argument("gamma_k: k must be positive");
    int l = lambda.length();
    if (l == 0) return 1.0;
    if (t == 1.0) return 1.0;  // limit value: the (1 - t^{-k}) prefactor vanishes
    double sum = 0.0;
    for (int i = 1; i <= l; ++i)
        sum += std::pow(q, static_cast<double>(k) * lambda.part(i)) *
               std::pow(t, static_cast<double>(k) * (1 - i));
    return (1.0 - std::pow(t, -k)) * sum + std::pow(t, -static_cast<double>(k) * l);
}

double f_lambda(const Partition& lambda, double q, double t) {
    double sum = 0.0;
    for (int i = 1; i <= lambda.length(); ++i)
        sum += (std::pow(q, lambda.part(i)) - 1.0) * std::pow(t, i - 1);
    return (1.0 - t) * sum;
}

namespace {

void partitions_of_rec(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_of_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    partitions_of_rec(n, n, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto v = partitions_of(k);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

namespace {

// Enumerates mu with mu interlacing lambda: lambda_{i+1} <= mu_i <= lambda_i.
void below_rec(const Partition& lambda, int i, std::vector<int>& acc, std::vector<Partition>& out) {
    if (i > lambda.length()) {
        std::vector<int> trimmed = acc;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out.emplace_back(std::move(trimmed));
        return;
    }
    int lo = lambda.part(i + 1), hi = lambda.part(i);
    for (int v = hi; v >= lo; --v) {
        acc.push_back(v);
        below_rec(lambda, i + 1, acc, out);
        acc.pop_back();
    }
}

// Enumerates mu with lambda interlacing mu: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
// mu has at most length(lambda)+1 positive parts; sizes bounded by max_size.
// The chain bounds mu_i above by lambda_{i-1}.
void above_rec(const Partition& lambda, int i, long budget, std::vector<int>& acc,
               std::vector<Partition>& out) {
    int lo = lambda.part(i);
    int cap = (i == 1) ? INT32_MAX : lambda.part(i - 1);
    long rem = budget;
    int hi = static_cast<int>(std::min<long>(cap, lo + rem));
    for (int v = lo; v <= hi; ++v) {
        acc.push_back(v);
        long used = v - lo;
        if (i == lambda.length() + 1) {
            // all further parts are zero; mu is complete once v chosen (v may be 0)
            std::vector<int> trimmed = acc;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            out.emplace_back(std::move(trimmed));
        } else {
            above_rec(lambda, i + 1, rem - used, acc, out);
        }
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> interlacing_below(const Partition& lambda, bool dual) {
    std::vector<Partition> out;
    if (!dual) {
        std::vector<int> acc;
        below_rec(lambda, 1, acc, out);
    } else {
        for (const auto& m : interlacing_below(lambda.conjugate(), false)) out.push_back(m.conjugate());
    }
    return out;
}

std::vector<Partition> interlacing_above(const Partition& lambda, bool dual, long max_size) {
    std::vector<Partition> out;
    if (max_size < lambda.size()) return out;
    if (!dual) {
        std::vector<int> acc;
        above_rec(lambda, 1, max_size - lambda.size(), acc, out);
    } else {
        for (const auto& m : interlacing_above(lambda.conjugate(), false, max_size))
            out.push_back(m.conjugate());
    }
    return out;
}

}  // namespace railyard
