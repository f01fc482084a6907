#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "railyard/rational.hpp"

namespace railyard {

/// Integer partition stored as its trimmed list of positive parts in weakly
/// decreasing order. Trailing zeros are never materialized, so equality and
/// hashing are canonical.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        int prev = INT32_MAX;
        for (int p : parts_) {
            if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (p > prev) throw std::invalid_argument("Partition: parts must be weakly decreasing");
            prev = p;
        }
    }

    static Partition empty() { return Partition(); }
    static Partition row(int k) { return k == 0 ? Partition() : Partition({k}); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long size() const {
        long s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    /// i is 1-based; parts beyond the length are 0.
    int part(int i) const {
        if (i < 1) throw std::out_of_range("Partition::part: 1-based index");
        return i <= length() ? parts_[i - 1] : 0;
    }
    bool is_empty() const { return parts_.empty(); }

    Partition conjugate() const {
        std::vector<int> out;
        if (parts_.empty()) return Partition();
        out.reserve(parts_[0]);
        for (int i = 1; i <= parts_[0]; ++i) {
            int cnt = 0;
            for (int p : parts_) {
                if (p >= i) ++cnt;
                else break;
            }
            out.push_back(cnt);
        }
        return Partition(std::move(out));
    }

    /// Adds one box at row r (1-based). Throws if the result is not a partition.
    Partition with_box_added(int r) const {
        std::vector<int> v = parts_;
        if (r == length() + 1) v.push_back(1);
        else if (r >= 1 && r <= length()) v[r - 1] += 1;
        else throw std::invalid_argument("with_box_added: bad row");
        return Partition(std::move(v));
    }
    /// Removes one box from row r (1-based).
    Partition with_box_removed(int r) const {
        std::vector<int> v = parts_;
        if (r < 1 || r > length()) throw std::invalid_argument("with_box_removed: bad row");
        v[r - 1] -= 1;
        if (v[r - 1] == 0) v.erase(v.begin() + (r - 1));
        return Partition(std::move(v));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> parts_;
};

/// mu <= lambda interlaced: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
/// With dual=true the test applies to the conjugates instead (vertical strips).
bool interlaces(const Partition& mu, const Partition& lambda, bool dual = false);

/// Single-variable skew Schur evaluation: x^{|lambda|-|mu|} if mu interlaces
/// lambda, else 0. Matches the Jacobi-Trudi determinant at h_r = x^r.
Rational skew_schur_single(const Partition& lambda, const Partition& mu, const Rational& x);

/// gamma_k(lambda; q, t) = (1 - t^{-k}) sum_i q^{k lambda_i} t^{k(1-i)} + t^{-k l(lambda)}.
/// At t = 1 with nonempty lambda the prefactor vanishes and the limit value 1
/// is returned.
double gamma_k(const Partition& lambda, int k, double q, double t);

/// f_lambda(q,t) = (1-t) sum_{i>=1} (q^{lambda_i} - 1) t^{i-1}; only positive
/// parts contribute. Satisfies f_lambda(q,t) = f_{lambda'}(t,q).
double f_lambda(const Partition& lambda, double q, double t);

/// All partitions of size exactly n, lexicographically decreasing first part.
std::vector<Partition> partitions_of(int n);
/// All partitions with size <= n (including the empty one).
std::vector<Partition> partitions_up_to(int n);

/// All mu with mu interlacing lambda (dual per flag); every such mu has
/// |mu| <= |lambda|, so no size bound is needed.
std::vector<Partition> interlacing_below(const Partition& lambda, bool dual);
/// All mu with lambda interlacing mu (dual per flag) and |mu| <= max_size.
std::vector<Partition> interlacing_above(const Partition& lambda, bool dual, long max_size);

}  // namespace railyard

template <>
struct std::hash<railyard::Partition> {
    size_t operator()(const railyard::Partition& p) const noexcept {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p.parts()) h = h * 1099511628211ull + static_cast<size_t>(v);
        return h;
    }
};
