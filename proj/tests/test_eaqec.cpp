#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "eaqmds/eaqec.hpp"

using namespace eaqmds;
using u64 = std::uint64_t;
using vec = std::vector<u64>;

TEST_CASE("singleton defect and the MDS predicate") {
    // On the EA-Singleton line and within the degenerate-range guard.
    EaqecParams good{13, 5, 7, 4, 8};
    CHECK(singleton_defect(good) == 0);
    CHECK(is_eaqmds(good));

    // On the line but with 2d > n + 2: not certified as MDS.
    EaqecParams long_d{29, 4, 18, 9, 17};
    CHECK(singleton_defect(long_d) == 0);
    CHECK_FALSE(is_eaqmds(long_d));

    // Off the line.
    EaqecParams off{17, 5, 10, 5, 13};
    CHECK(singleton_defect(off) == -1);
    CHECK_FALSE(is_eaqmds(off));

    EaqecParams slack{17, 3, 10, 5, 13};
    CHECK(singleton_defect(slack) == 1);
    CHECK_FALSE(is_eaqmds(slack));
}

TEST_CASE("entangled count and quantum parameter derivation") {
    auto sp = make_space(8, 13, SRule::even_q);
    vec z;
    for (u64 base : {28, 19, 10}) {
        auto cs = coset_of(sp, base);
        z.insert(z.end(), cs.begin(), cs.end());
    }
    std::sort(z.begin(), z.end());
    auto code = build_code(sp, z);
    CHECK(code.k == 7);
    CHECK(entangled_count(code) == 4);

    auto params = derive_eaqec(code, bch_designed_distance(sp, z));
    CHECK(params == EaqecParams{13, 5, 7, 4, 8});
    CHECK(is_eaqmds(params));
}

TEST_CASE("nonpositive logical dimension is rejected") {
    auto sp = make_space(8, 13, SRule::even_q);
    // Z = C91 u C1 u C10 u C19: k_cl = 6, c = 1, so 2 k_cl - n + c = 0.
    vec z;
    for (u64 base : {91, 1, 10, 19}) {
        auto cs = coset_of(sp, base);
        z.insert(z.end(), cs.begin(), cs.end());
    }
    auto code = build_code(sp, z);
    CHECK(code.k == 6);
    CHECK(entangled_count(code) == 1);
    CHECK_THROWS_AS(derive_eaqec(code, 8), NonpositiveLogicalDimension);
}

TEST_CASE("rank(H H*) equals the set-theoretic entangled count everywhere") {
    OracleBudget budget;

    // Every nonempty proper union of cosets in the q = 8 space ...
    {
        auto sp = make_space(8, 13, SRule::even_q);
        const vec reps = {1, 10, 19, 28, 73, 82, 91};
        for (unsigned mask = 1; mask < (1u << reps.size()) - 1; ++mask) {
            vec z;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                if (mask & (1u << i)) {
                    auto cs = coset_of(sp, reps[i]);
                    z.insert(z.end(), cs.begin(), cs.end());
                }
            }
            auto code = build_code(sp, z);
            CHECK(rank_hh_star(code, budget) == entangled_count(code));
        }
    }

    // ... and every nonempty proper union in the q = 13 space.
    {
        auto sp = make_space(13, 17, SRule::odd_q);
        const vec reps = {85, 71, 57, 43, 29, 15, 1, 183, 197};
        for (unsigned mask = 1; mask < (1u << reps.size()) - 1; ++mask) {
            vec z;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                if (mask & (1u << i)) {
                    auto cs = coset_of(sp, reps[i]);
                    z.insert(z.end(), cs.begin(), cs.end());
                }
            }
            auto code = build_code(sp, z);
            CHECK(rank_hh_star(code, budget) == entangled_count(code));
        }
    }
}

TEST_CASE("rank_hh_star respects its budget") {
    auto sp = make_space(8, 13, SRule::even_q);
    auto code = build_code(sp, coset_of(sp, 28));
    OracleBudget tiny;
    tiny.max_dense_cells = 10;
    CHECK_THROWS_AS(rank_hh_star(code, tiny), OracleBudgetExceeded);
    OracleBudget small_field;
    small_field.max_field_order = 16;
    CHECK_THROWS_AS(rank_hh_star(code, small_field), OracleBudgetExceeded);
}
