#include "railyard/covering.hpp"

#include <cstdlib>
#include <json.hpp>

namespace railyard {

using nlohmann::json;

std::string DimerCovering::to_json() const {
    json arr = json::array();
    for (const auto& p : partitions) {
        json one = json::array();
        for (int v : p.parts()) one.push_back(v);
        arr.push_back(one);
    }
    json j;
    j["partitions"] = arr;
    return j.dump();
}

DimerCovering DimerCovering::from_json(const std::string& text) {
    json j = json::parse(text);
    DimerCovering m;
    for (const auto& one : j.at("partitions")) {
        std::vector<int> parts;
        for (const auto& v : one) parts.push_back(v.get<int>());
        m.partitions.emplace_back(std::move(parts));
    }
    return m;
}

bool column_relation_holds(const RailYardSpec& spec, int i, const Partition& left,
                           const Partition& right) {
    bool dual = spec.a_at(i) == LR::R;
    if (spec.b_at(i) == Sign::Minus) return interlaces(right, left, dual);
    return interlaces(left, right, dual);
}

bool covering_valid(const RailYardSpec& spec, const DimerCovering& m) {
    if (static_cast<int>(m.partitions.size()) != spec.columns() + 1) return false;
    if (!m.partitions.front().is_empty() || !m.partitions.back().is_empty()) return false;
    for (int i = spec.l; i <= spec.r(); ++i)
        if (!column_relation_holds(spec, i, m.at(i, spec), m.at(i + 1, spec))) return false;
    return true;
}

Rational covering_weight(const RailYardSpec& spec, const DimerCovering& m) {
    if (!covering_valid(spec, m)) throw std::invalid_argument("covering_weight: invalid covering");
    Rational w(1);
    for (int i = spec.l; i <= spec.r(); ++i) {
        long d = std::labs(m.at(i + 1, spec).size() - m.at(i, spec).size());
        w *= spec.x_at(i).pow(d);
    }
    return w;
}

namespace {

// number of parts >= c (the c-th part of the conjugate), O(log length)
int conj_part(const Partition& p, int c) {
    if (c <= 0) return p.length();
    const auto& parts = p.parts();
    auto it = std::partition_point(parts.begin(), parts.end(), [&](int v) { return v >= c; });
    return static_cast<int>(it - parts.begin());
}

// Does the column-i relation still hold after changing one part of `changed`
// (the left or right neighbor of column i) at `row` by one box? The other
// interlacing inequalities are untouched, so only the local ones are checked.
bool relation_holds_after_box(const RailYardSpec& spec, int i, const Partition& left,
                              const Partition& right, bool changed_is_left, int row, bool add) {
    bool dual = spec.a_at(i) == LR::R;
    bool lower_is_right = spec.b_at(i) == Sign::Minus;
    const Partition& changed = changed_is_left ? left : right;
    const Partition& other = changed_is_left ? right : left;
    bool changed_is_lower = changed_is_left != lower_is_right;
    int old_val = changed.part(row);
    int new_val = old_val + (add ? 1 : -1);

    if (!dual) {
        if (changed_is_lower) return other.part(row) >= new_val && new_val >= other.part(row + 1);
        if (new_val < other.part(row)) return false;
        return row == 1 || other.part(row - 1) >= new_val;
    }
    // dual: one conjugate column c gains or loses a box
    int c = add ? new_val : old_val;
    int changed_conj = conj_part(changed, c) + (add ? 1 : -1);
    if (changed_is_lower)
        return conj_part(other, c) >= changed_conj && changed_conj >= conj_part(other, c + 1);
    if (changed_conj < conj_part(other, c)) return false;
    return c == 1 || conj_part(other, c - 1) >= changed_conj;
}

}  // namespace

std::vector<FlipMove> flip_moves(const RailYardSpec& spec, const DimerCovering& m,
                                 long size_budget) {
    std::vector<FlipMove> moves;
    for (int i = spec.l + 1; i <= spec.r(); ++i) {
        const Partition& cur = m.at(i, spec);
        const Partition& left = m.at(i - 1, spec);
        const Partition& right = m.at(i + 1, spec);
        // additions: rows 1..length+1 where the shape stays a partition
        for (int r = 1; r <= cur.length() + 1; ++r) {
            if (r > 1 && cur.part(r) + 1 > cur.part(r - 1)) continue;
            if (size_budget >= 0 && cur.size() + 1 > size_budget) continue;
            if (relation_holds_after_box(spec, i - 1, left, cur, /*changed_is_left=*/false, r,
                                         true) &&
                relation_holds_after_box(spec, i, cur, right, /*changed_is_left=*/true, r, true))
                moves.push_back({i, r, true});
        }
        // removals: rows where the box is a corner
        for (int r = 1; r <= cur.length(); ++r) {
            if (r < cur.length() && cur.part(r) - 1 < cur.part(r + 1)) continue;
            if (relation_holds_after_box(spec, i - 1, left, cur, /*changed_is_left=*/false, r,
                                         false) &&
                relation_holds_after_box(spec, i, cur, right, /*changed_is_left=*/true, r, false))
                moves.push_back({i, r, false});
        }
    }
    return moves;
}

DimerCovering apply_flip(const RailYardSpec& spec, const DimerCovering& m, const FlipMove& move) {
    if (move.column <= spec.l || move.column > spec.r())
        throw std::invalid_argument("apply_flip: column not interior");
    DimerCovering out = m;
    Partition& p = out.partitions.at(move.column - spec.l);
    p = move.add ? p.with_box_added(move.row) : p.with_box_removed(move.row);
    if (!column_relation_holds(spec, move.column - 1, out.at(move.column - 1, spec),
                               out.at(move.column, spec)) ||
        !column_relation_holds(spec, move.column, out.at(move.column, spec),
                               out.at(move.column + 1, spec)))
        throw std::invalid_argument("apply_flip: move breaks an interlacing constraint");
    return out;
}

Rational flip_weight_ratio(const RailYardSpec& spec, const DimerCovering& m, const FlipMove& move) {
    int i = move.column;
    long sl = m.at(i - 1, spec).size(), sc = m.at(i, spec).size(), sr = m.at(i + 1, spec).size();
    long sc2 = sc + (move.add ? 1 : -1);
    long dl = std::labs(sc - sl), dl2 = std::labs(sc2 - sl);
    long dr = std::labs(sr - sc), dr2 = std::labs(sr - sc2);
    return spec.x_at(i - 1).pow(dl2 - dl) * spec.x_at(i).pow(dr2 - dr);
}

}  // namespace railyard
