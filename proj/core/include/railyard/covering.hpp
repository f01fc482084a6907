#pragma once

#include <optional>
#include <string>
#include <vector>

#include "railyard/partition.hpp"
#include "railyard/spec.hpp"

namespace railyard {

/// Pure dimer covering encoded as its boundary-empty partition sequence
/// lambda^(l), ..., lambda^(r+1).
struct DimerCovering {
    std::vector<Partition> partitions;  // index i - l, size columns()+1

    const Partition& at(int column_index, const RailYardSpec& spec) const {
        return partitions.at(column_index - spec.l);
    }

    static DimerCovering all_empty(const RailYardSpec& spec) {
        DimerCovering m;
        m.partitions.assign(spec.columns() + 1, Partition());
        return m;
    }

    std::string to_json() const;
    static DimerCovering from_json(const std::string& text);
};

/// The typed interlacing required across column i: (L,-) demands
/// lambda^(i+1) interlacing lambda^(i), (L,+) the reverse, and the R cases the
/// dual statements.
bool column_relation_holds(const RailYardSpec& spec, int i, const Partition& left,
                           const Partition& right);

/// True when the sequence has the right length, empty boundaries and every
/// column relation holds.
bool covering_valid(const RailYardSpec& spec, const DimerCovering& m);

/// prod_i x_i^{d_i}, d_i = | |lambda^(i+1)| - |lambda^(i)| |. Throws on an
/// invalid covering.
Rational covering_weight(const RailYardSpec& spec, const DimerCovering& m);

/// Single-box move on one interior partition.
struct FlipMove {
    int column;  // absolute index in [l+1 .. r]
    int row;     // 1-based row of the box
    bool add;
    friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

/// Every legal single-box move from m, optionally capped so the touched
/// partition stays within size_budget (pass a negative budget for no cap).
std::vector<FlipMove> flip_moves(const RailYardSpec& spec, const DimerCovering& m,
                                 long size_budget = -1);

DimerCovering apply_flip(const RailYardSpec& spec, const DimerCovering& m, const FlipMove& move);

/// w(M')/w(M) for the covering M' = apply_flip(m, move); a single
/// x_{i-1}^{+-1} x_i^{+-1} monomial.
Rational flip_weight_ratio(const RailYardSpec& spec, const DimerCovering& m, const FlipMove& move);

}  // namespace railyard
