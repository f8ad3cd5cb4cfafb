#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "eaqmds/codes.hpp"
#include "eaqmds/oracle.hpp"

using namespace eaqmds;
using u64 = std::uint64_t;
using vec = std::vector<u64>;

namespace {

ConstacyclicCode code_from_positions(const CyclotomicSpace& sp, const std::vector<u64>& js) {
    vec z;
    for (u64 j : js) z.push_back(element_at(sp, j));
    return build_code(sp, z);
}

}  // namespace

TEST_CASE("exhaustive distance agrees with the designed distance on [13, 3]") {
    auto sp = make_space(8, 13, SRule::even_q);
    // Ten consecutive coset-closed positions: 0..8 plus the wrap element 12.
    auto c = code_from_positions(sp, {0, 1, 2, 3, 4, 5, 6, 7, 8, 12});
    CHECK(c.k == 3);
    CHECK(bch_designed_distance(sp, c.defining_set) == 11);
    OracleBudget budget;
    CHECK(min_distance_exhaustive(generator_matrix(c), budget) == 11);
}

TEST_CASE("exhaustive distance of a one-dimensional code") {
    auto sp = make_space(13, 17, SRule::odd_q);
    vec z;
    for (u64 j = 0; j < 17; ++j) {
        const u64 zz = element_at(sp, j);
        if (zz != 85) z.push_back(zz);
    }
    auto c = build_code(sp, z);
    CHECK(c.k == 1);
    OracleBudget budget;
    CHECK(min_distance_exhaustive(generator_matrix(c), budget) == 17);
}

TEST_CASE("exhaustive enumeration respects the codeword budget") {
    auto sp = make_space(13, 17, SRule::odd_q);
    auto c = build_code(sp, {85});  // [17, 16]: 169^16 codewords
    OracleBudget budget;
    CHECK_THROWS_AS(min_distance_exhaustive(generator_matrix(c), budget),
                    OracleBudgetExceeded);

    auto sp8 = make_space(8, 13, SRule::even_q);
    auto c5 = code_from_positions(sp8, {0, 1, 2, 3, 4, 5, 6, 7});  // [13, 5]
    CHECK_THROWS_AS(min_distance_exhaustive(generator_matrix(c5), budget),
                    OracleBudgetExceeded);
}

TEST_CASE("early exit on a weight-one codeword") {
    const auto* f = make_field(2, 2);
    Matrix g = mat_zero(f, 1, 3);
    g.at(0, 1) = 1;
    OracleBudget budget;
    CHECK(min_distance_exhaustive(g, budget) == 1);
}

TEST_CASE("mds_certify accepts genuinely MDS codes") {
    OracleBudget budget;
    auto sp = make_space(8, 13, SRule::even_q);

    auto c9 = code_from_positions(sp, {2, 3, 4, 5});  // [13, 9], designed d = 5
    CHECK(mds_certify(generator_matrix(c9), parity_check_matrix(c9), budget));

    auto c3 = code_from_positions(sp, {0, 1, 2, 3, 4, 5, 6, 7, 8, 12});  // [13, 3]
    CHECK(mds_certify(generator_matrix(c3), parity_check_matrix(c3), budget));
}

TEST_CASE("mds_certify rejects a code with a dependent column set") {
    const auto* f = make_field(2, 2);
    // Second and fourth columns are equal, so one 2x2 minor vanishes.
    Matrix g = mat_zero(f, 2, 4);
    g.at(0, 0) = 1;
    g.at(1, 1) = 1;
    g.at(1, 3) = 1;
    Matrix h = null_space(g);
    OracleBudget budget;
    CHECK_FALSE(mds_certify(g, h, budget));
}

TEST_CASE("mds_certify respects the minor budget") {
    const auto* f = make_field(2, 2);
    Matrix wide = mat_zero(f, 20, 40);
    for (std::size_t i = 0; i < 20; ++i) wide.at(i, i) = 1;
    Matrix h = null_space(wide);
    OracleBudget budget;  // C(40, 20) is far beyond 10^6
    CHECK_THROWS_AS(mds_certify(wide, h, budget), OracleBudgetExceeded);
}

TEST_CASE("matrix_rank applies field and size budgets") {
    OracleBudget budget;
    const auto* big = make_field(2, 18);
    CHECK_THROWS_AS(matrix_rank(mat_identity(big, 1), budget), OracleBudgetExceeded);

    const auto* f = make_field(2, 2);
    CHECK_THROWS_AS(matrix_rank(mat_zero(f, 2001, 1001), budget), OracleBudgetExceeded);
    CHECK(matrix_rank(mat_identity(f, 5), budget) == 5);
}

TEST_CASE("intersect_bruteforce matches std::set_intersection") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<u64> val(0, 99);
    std::uniform_int_distribution<std::size_t> len(0, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        auto draw = [&] {
            vec v(len(rng));
            for (auto& x : v) x = val(rng);
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        };
        vec a = draw(), b = draw(), expect;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(expect));
        CHECK(intersect_bruteforce(a, b) == expect);
    }
}
