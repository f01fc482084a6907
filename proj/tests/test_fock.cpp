#include <doctest.h>

#include "railyard/ensemble.hpp"
#include "railyard/fock.hpp"

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

TEST_CASE("gamma operators on the vacuum") {
    auto vac = FockVector::delta(Partition(), 6);
    auto up = apply_gamma(GammaKind::LPlus, Rational(1, 2), vac);
    REQUIRE(up.coeffs.size() == 1);
    CHECK(*up.find(Partition()) == Rational(1));

    auto rows = apply_gamma(GammaKind::LMinus, Rational(1, 2), vac);
    CHECK(rows.coeffs.size() == 7);  // rows (k), k = 0..6
    for (int k = 0; k <= 6; ++k)
        CHECK(*rows.find(Partition::row(k)) == Rational(1, 2).pow(k));

    auto cols = apply_gamma(GammaKind::RMinus, Rational(1, 3), vac);
    CHECK(cols.coeffs.size() == 7);
    for (int k = 1; k <= 6; ++k)
        CHECK(*cols.find(Partition(std::vector<int>(k, 1))) == Rational(1, 3).pow(k));
}

TEST_CASE("braket examples") {
    // forced all-empty chain
    CHECK(partition_function_braket(make_spec(0, "LL", "-+", {{1, 2}, {1, 2}}), 8) == Rational(1));
    // truncated geometric series
    Rational z30 = partition_function_braket(make_spec(0, "LL", "+-", {{1, 2}, {1, 2}}), 30);
    Rational expect(0);
    for (int k = 0; k <= 30; ++k) expect += Rational(1, 4).pow(k);
    CHECK(z30 == expect);
    // only the empty and the single-box coverings contribute
    CHECK(partition_function_braket(make_spec(0, "LR", "+-", {{1, 2}, {1, 2}}), 5) ==
          Rational(5, 4));
}

TEST_CASE("closed form examples") {
    CHECK(partition_function_closed(make_spec(0, "LL", "-+", {{1, 2}, {1, 2}})) == Rational(1));
    CHECK(partition_function_closed(make_spec(0, "LL", "+-", {{1, 2}, {1, 2}})) == Rational(4, 3));
    CHECK(partition_function_closed(make_spec(0, "LR", "+-", {{1, 2}, {1, 2}})) == Rational(5, 4));
    CHECK_THROWS(partition_function_closed(make_spec(0, "LL", "+-", {Rational(2), Rational(1)})));
}

TEST_CASE("braket equals enumeration weight sum at equal truncation") {
    std::vector<RailYardSpec> corpus = {
        make_spec(0, "LR", "+-", {{1, 3}, {1, 3}}),
        make_spec(0, "LL", "+-", {{1, 4}, {1, 3}}),
        make_spec(-1, "RLR", "+--", {{1, 3}, {1, 5}, {1, 4}}),
        make_spec(0, "RLLR", "++--", {{1, 3}, {1, 4}, {1, 4}, {1, 3}}),
    };
    for (const auto& s : corpus) {
        for (long n : {3L, 6L}) {
            auto ens = enumerate_coverings(s, n);
            CHECK(partition_function_braket(s, n) == ens.total_weight);
        }
    }
}

TEST_CASE("braket converges to the closed form within the declared tail bound") {
    std::vector<RailYardSpec> corpus = {
        make_spec(0, "LL", "+-", {{1, 3}, {1, 3}}),
        make_spec(0, "RLLR", "++--", {{1, 3}, {1, 4}, {1, 4}, {1, 3}}),
        make_spec(-2, "LRLR", "+-+-", {{1, 4}, {1, 5}, {1, 4}, {1, 5}}),
    };
    for (const auto& s : corpus) {
        Rational z = partition_function_closed(s);
        Rational zn = partition_function_braket(s, 18);
        Rational bound = braket_tail_bound(s, 18);
        CHECK(zn <= z);
        CHECK(z - zn <= bound);
    }
}

TEST_CASE("commutation relations, coefficient exact") {
    for (LR a1 : {LR::L, LR::R}) {
        for (LR a2 : {LR::L, LR::R}) {
            auto rep = verify_commutation(a1, a2, 10, 4);
            INFO(rep.first_discrepancy);
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("cauchy identities, truncated") {
    auto rep = cauchy_truncated(Rational(1, 2), Rational(1, 2), 20);
    Rational expect(0);
    for (int k = 0; k <= 20; ++k) expect += Rational(1, 4).pow(k);
    CHECK(rep.direct_lhs == expect);
    CHECK(rep.ok());

    auto rep2 = cauchy_truncated(Rational(1, 3), Rational(1, 5), 6);
    CHECK(rep2.dual_lhs == Rational(1) + Rational(1, 15));
    CHECK(rep2.ok());

    auto rep3 = cauchy_truncated(Rational(0), Rational(1, 2), 4);
    CHECK(rep3.direct_lhs == Rational(1));
    CHECK(rep3.ok());
}
