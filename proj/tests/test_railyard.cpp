#include <doctest.h>

#include <map>
#include <set>

#include "railyard/covering.hpp"
#include "railyard/ensemble.hpp"

using namespace railyard;

namespace {

RailYardSpec make_spec(int l, const std::string& as, const std::string& bs,
                       const std::vector<Rational>& xs) {
    RailYardSpec s;
    s.l = l;
    for (char c : as) s.a.push_back(c == 'L' ? LR::L : LR::R);
    for (char c : bs) s.b.push_back(c == '+' ? Sign::Plus : Sign::Minus);
    s.x = xs;
    return s;
}

}  // namespace

TEST_CASE("validate_spec examples") {
    CHECK(make_spec(0, "LL", "+-", {{1, 2}, {1, 2}}).to_json() != "");
    CHECK(validate_spec(make_spec(0, "LL", "+-", {{1, 2}, {1, 2}})).ok());
    auto bad = validate_spec(make_spec(0, "LL", "+-", {Rational(2), Rational(1)}));
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].i == 0);
    CHECK(bad.violations[0].j == 1);
    CHECK(validate_spec(make_spec(0, "LR", "+-", {Rational(7), Rational(9)})).ok());
}

TEST_CASE("spec json round trip is idempotent") {
    auto s = make_spec(-2, "LRRL", "++--",
                       {{1, 2}, {1, 3}, {1, 3}, {1, 2}});
    auto t = RailYardSpec::from_json(s.to_json());
    CHECK(t.to_json() == s.to_json());
    CHECK(t.l == -2);
    CHECK(t.r() == 1);
}

TEST_CASE("covering weight: figure-one sequence") {
    // a = (L,R,R,L), b = (+,+,-,-) on [-2..1] with the partition sequence
    // empty < (2) <' (3,1,1) >' (2) > empty
    auto s = make_spec(-2, "LRRL", "++--", {{1, 2}, {1, 3}, {1, 5}, {1, 7}});
    DimerCovering m;
    m.partitions = {Partition(), Partition({2}), Partition({3, 1, 1}), Partition({2}), Partition()};
    REQUIRE(covering_valid(s, m));
    Rational expect = Rational(1, 2).pow(2) * Rational(1, 3).pow(3) * Rational(1, 5).pow(3) *
                      Rational(1, 7).pow(2);
    CHECK(covering_weight(s, m) == expect);
}

TEST_CASE("covering weight: trivial and two-column cases") {
    auto s = make_spec(0, "LR", "+-", {{1, 2}, {1, 3}});
    CHECK(covering_weight(s, DimerCovering::all_empty(s)) == Rational(1));
    DimerCovering m;
    m.partitions = {Partition(), Partition({1}), Partition()};
    CHECK(covering_weight(s, m) == Rational(1, 6));
    DimerCovering bad;
    bad.partitions = {Partition(), Partition({2}), Partition()};  // (2) is not a column
    CHECK_FALSE(covering_valid(s, bad));
    CHECK_THROWS(covering_weight(s, bad));
}

TEST_CASE("covering json round trip") {
    DimerCovering m;
    m.partitions = {Partition(), Partition({2}), Partition({3, 1, 1}), Partition({2}), Partition()};
    auto m2 = DimerCovering::from_json(m.to_json());
    CHECK(m2.partitions == m.partitions);
}

TEST_CASE("flip moves: unique move from the empty covering") {
    auto s = make_spec(0, "LR", "+-", {{1, 2}, {1, 2}});
    auto m0 = DimerCovering::all_empty(s);
    auto moves = flip_moves(s, m0);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].column == 1);
    CHECK(moves[0].add);
    auto m1 = apply_flip(s, m0, moves[0]);
    CHECK(m1.partitions[1] == Partition({1}));
    // flips are involutive
    auto back = apply_flip(s, m1, FlipMove{1, 1, false});
    CHECK(back.partitions == m0.partitions);
}

TEST_CASE("flip weight ratio is the single-box monomial") {
    auto s = make_spec(0, "LL", "+-", {{1, 2}, {1, 3}});
    auto m0 = DimerCovering::all_empty(s);
    auto moves = flip_moves(s, m0);
    REQUIRE(moves.size() == 1);
    CHECK(flip_weight_ratio(s, m0, moves[0]) == Rational(1, 6));
    auto m1 = apply_flip(s, m0, moves[0]);
    CHECK(covering_weight(s, m1) == Rational(1, 6));
    // and the inverse move divides it back out
    auto inv = flip_moves(s, m1);
    for (const auto& mv : inv) {
        Rational ratio = flip_weight_ratio(s, m1, mv);
        CHECK(covering_weight(s, apply_flip(s, m1, mv)) == covering_weight(s, m1) * ratio);
    }
}

TEST_CASE("flip reachability: BFS from the empty covering spans the ensemble") {
    std::vector<RailYardSpec> corpus = {
        make_spec(0, "LR", "+-", {{1, 3}, {1, 3}}),
        make_spec(0, "LL", "+-", {{1, 3}, {1, 4}}),
        make_spec(0, "RR", "+-", {{1, 3}, {1, 4}}),
        make_spec(0, "RL", "+-", {{1, 3}, {1, 4}}),
        make_spec(-1, "LRL", "+--", {{1, 3}, {1, 4}, {1, 5}}),
        make_spec(0, "RLLR", "++--", {{1, 3}, {1, 4}, {1, 4}, {1, 3}}),
    };
    for (const auto& s : corpus) {
        long budget = 5;
        auto ens = enumerate_coverings(s, budget);
        std::set<std::string> all;
        for (const auto& [m, w] : ens.entries) all.insert(m.to_json());
        std::set<std::string> seen;
        std::vector<DimerCovering> frontier{DimerCovering::all_empty(s)};
        seen.insert(frontier[0].to_json());
        while (!frontier.empty()) {
            std::vector<DimerCovering> next;
            for (const auto& m : frontier) {
                for (const auto& mv : flip_moves(s, m, budget)) {
                    auto m2 = apply_flip(s, m, mv);
                    if (seen.insert(m2.to_json()).second) next.push_back(m2);
                }
            }
            frontier = std::move(next);
        }
        CHECK(seen == all);
    }
}
