#include "eaqmds/families.hpp"

#include <algorithm>
#include <string>

namespace eaqmds {
namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

std::string fam_q(int family, u64 q) {
    return "family " + std::to_string(family) + ", q = " + std::to_string(q);
}

// Union of the cosets of (s - r j) mod rn for j in [j_lo, j_hi], sorted.
std::vector<u64> ladder_set(const CyclotomicSpace& sp, u64 j_lo, u64 j_hi) {
    std::vector<u64> zs;
    for (u64 j = j_lo; j <= j_hi; ++j) {
        const u64 base = (sp.s + sp.rn - (sp.r * j) % sp.rn) % sp.rn;
        auto cs = coset_of(sp, base);
        zs.insert(zs.end(), cs.begin(), cs.end());
    }
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    return zs;
}

}  // namespace

const std::vector<FamilySpec>& list_families() {
    static const std::vector<FamilySpec> specs = {
        {1, false, 10, 5, "q odd, q == 7 (mod 10)", "1 <= lambda <= (q+3)/10"},
        {2, false, 10, 9, "q odd, q == 7 (mod 10)", "1 <= lambda <= (q+3)/10"},
        {3, false, 10, 5, "q odd, q == 3 (mod 10)", "1 <= lambda <= (q-3)/10"},
        {4, false, 10, 9, "q odd, q == 3 (mod 10)", "1 <= lambda <= (q-3)/10"},
        {5, true, 5, 4, "q = 2^e, q == 2 (mod 10)", "1 <= lambda <= (q+3)/5"},
        {6, true, 5, 4, "q = 2^e, q == 8 (mod 10)", "1 <= lambda <= (q+2)/5"},
        {7, true, 13, 4, "q = 2^e, q == 5 (mod 13) and q == 2 (mod 5)",
         "1 <= lambda <= (q+3)/5"},
        {8, true, 17, 4, "q = 2^e, q == 13 (mod 17)", "1 <= lambda <= (q+4)/17"},
    };
    return specs;
}

const FamilySpec& family_spec(int family) {
    if (family < 1 || family > 8) {
        throw NotAdmissible("family id " + std::to_string(family) + " is not in 1..8");
    }
    return list_families()[static_cast<std::size_t>(family - 1)];
}

std::uint64_t lambda_max(int family, std::uint64_t q) {
    family_spec(family);
    switch (family) {
        case 1:
        case 2: return (q + 3) / 10;
        case 3:
        case 4: return (q - 3) / 10;
        case 5:
        case 7: return (q + 3) / 5;
        case 6: return (q + 2) / 5;
        default: return (q + 4) / 17;
    }
}

std::uint64_t family_j_upper(int family, std::uint64_t q, std::uint64_t lambda) {
    family_spec(family);
    i64 base = 0;
    switch (family) {
        case 1: base = 3 * (i64(q) - 7) / 10 + 1; break;
        case 2: base = (2 * i64(q) + 1) / 5; break;
        case 3: base = 3 * (i64(q) - 3) / 10; break;
        case 4: base = 4 * (i64(q) - 3) / 10; break;
        case 5:
        case 7: base = 3 * (i64(q) - 2) / 10 - 1; break;
        case 6: base = (3 * i64(q) - 14) / 10; break;
        default: base = 3 * (i64(q) - 4) / 10 + 2; break;
    }
    const i64 j = base + i64(lambda);
    if (j < 0) throw LambdaOutOfRange("ladder index is negative at " + fam_q(family, q));
    return u64(j);
}

std::string admissibility_reason(int family, std::uint64_t q) {
    const FamilySpec& spec = family_spec(family);

    u64 p = 0;
    int e = 0;
    if (!is_prime_power(q, &p, &e)) {
        return "q = " + std::to_string(q) + " is not a prime power";
    }
    if (spec.even_q && p != 2) {
        return "family " + std::to_string(family) + " requires q = 2^e";
    }
    if (!spec.even_q && p == 2) {
        return "family " + std::to_string(family) + " requires odd q";
    }

    bool congruent = true;
    switch (family) {
        case 1:
        case 2: congruent = q % 10 == 7; break;
        case 3:
        case 4: congruent = q % 10 == 3; break;
        case 5: congruent = q % 10 == 2; break;
        case 6: congruent = q % 10 == 8; break;
        case 7: congruent = q % 13 == 5 && q % 5 == 2; break;
        default: congruent = q % 17 == 13; break;
    }
    if (!congruent) {
        return "q = " + std::to_string(q) + " fails the congruence: " + spec.congruence;
    }
    if ((q * q + 1) % spec.divisor != 0) {
        return "(q^2 + 1) is not divisible by " + std::to_string(spec.divisor);
    }
    if (family == 8 && (3 * (q - 4)) % 10 != 0) {
        return "ladder formula is not integral at q = " + std::to_string(q);
    }

    const u64 lmax = lambda_max(family, q);
    if (lmax < 1) {
        return "maximum step parameter is zero";
    }

    const u64 n = (q * q + 1) / spec.divisor;
    const u64 j1 = family_j_upper(family, q, 1);
    const u64 z1 = spec.even_q ? 2 * (j1 + 1) : 2 * j1 + 1;
    const i64 k1 = i64(n) - 2 * i64(z1) + i64(spec.c);
    if (k1 < 1) {
        return "logical dimension at lambda = 1 would be " + std::to_string(k1);
    }

    // The ladder must consist of distinct, full-size cosets up to lambda_max.
    const u64 jmax = family_j_upper(family, q, lmax);
    if (spec.even_q ? jmax >= (n - 1) / 2 : jmax > (n - 1) / 2) {
        return "ladder reaches cosets past the fold at j = " + std::to_string(jmax);
    }
    return "";
}

bool admissible(int family, std::uint64_t q) {
    return admissibility_reason(family, q).empty();
}

std::vector<std::uint64_t> admissible_q_values(int family, std::uint64_t q_max) {
    family_spec(family);
    if (q_max > 4096) {
        throw NotAdmissible("q_max " + std::to_string(q_max) + " exceeds the 4096 cap");
    }
    std::vector<u64> out;
    for (u64 q = 2; q <= q_max; ++q) {
        if (admissible(family, q)) out.push_back(q);
    }
    return out;
}

ExpectedInstance expected_params(int family, std::uint64_t q, std::uint64_t lambda) {
    const std::string reason = admissibility_reason(family, q);
    if (!reason.empty()) throw NotAdmissible(reason);
    const FamilySpec& spec = family_spec(family);
    if (lambda < 1 || lambda > lambda_max(family, q)) {
        throw LambdaOutOfRange("lambda = " + std::to_string(lambda) +
                               " outside 1.." + std::to_string(lambda_max(family, q)) +
                               " at " + fam_q(family, q));
    }
    ExpectedInstance e;
    e.family = family;
    e.q = q;
    e.lambda = lambda;
    e.n = (q * q + 1) / spec.divisor;
    const u64 j = family_j_upper(family, q, lambda);
    const u64 zsize = spec.even_q ? 2 * (j + 1) : 2 * j + 1;
    e.d = zsize + 1;
    e.c = spec.c;
    e.k = i64(e.n) - 2 * i64(zsize) + i64(spec.c);
    return e;
}

std::vector<ExpectedInstance> enumerate_expected(int family, std::uint64_t q_max) {
    std::vector<ExpectedInstance> out;
    for (u64 q : admissible_q_values(family, q_max)) {
        const u64 lmax = lambda_max(family, q);
        for (u64 lambda = 1; lambda <= lmax; ++lambda) {
            ExpectedInstance e = expected_params(family, q, lambda);
            if (e.k >= 1) out.push_back(e);
        }
    }
    return out;
}

FamilyInstance build_instance(int family, std::uint64_t q, std::uint64_t lambda) {
    FamilyInstance inst;
    inst.family = family;
    inst.q = q;
    inst.lambda = lambda;
    inst.expected = expected_params(family, q, lambda);
    if (inst.expected.k <= 0) {
        throw NonpositiveLogicalDimension("expected logical dimension " +
                                          std::to_string(inst.expected.k) + " at " +
                                          fam_q(family, q) + ", lambda = " +
                                          std::to_string(lambda));
    }
    const FamilySpec& spec = family_spec(family);
    inst.space = make_space(q, inst.expected.n, spec.even_q ? SRule::even_q : SRule::odd_q);
    inst.defining_set = ladder_set(inst.space, 0, family_j_upper(family, q, lambda));
    inst.code = build_code(inst.space, inst.defining_set);
    inst.bch = bch_designed_distance(inst.space, inst.defining_set);
    inst.computed = derive_eaqec(inst.code, inst.bch);
    return inst;
}

std::vector<FamilyInstance> enumerate_instances(int family, std::uint64_t q_max) {
    std::vector<FamilyInstance> out;
    for (const ExpectedInstance& e : enumerate_expected(family, q_max)) {
        out.push_back(build_instance(family, e.q, e.lambda));
    }
    return out;
}

VerificationReport verify_instance(const FamilyInstance& inst, OracleLevel level,
                                   const OracleBudget& budget) {
    VerificationReport rep;
    auto add = [&rep](const std::string& name, const std::string& value) {
        rep.checks.emplace_back(name, value);
        if (value.rfind("fail", 0) == 0) rep.all_pass = false;
    };
    auto params_str = [](u64 n, i64 k, u64 d, u64 c) {
        return "[[" + std::to_string(n) + ", " + std::to_string(k) + ", " +
               std::to_string(d) + "; " + std::to_string(c) + "]]";
    };

    // (a) constructed parameters match the formulas
    const EaqecParams want{inst.expected.n, inst.expected.k, inst.expected.d,
                           inst.expected.c, inst.q};
    if (inst.computed == want) {
        add("params", "pass");
    } else {
        add("params", "fail: constructed " +
                          params_str(inst.computed.n, inst.computed.k, inst.computed.d,
                                     inst.computed.c) +
                          " != expected " +
                          params_str(want.n, want.k, want.d, want.c));
    }

    // (b) the EA-Singleton line
    const i64 defect = singleton_defect(inst.computed);
    add("defect", defect == 0 ? "pass" : "fail: singleton defect " + std::to_string(defect));

    // (c) the ladder is one consecutive run of positions
    add("bch", inst.bch == inst.defining_set.size() + 1
                   ? "pass"
                   : "fail: designed distance " + std::to_string(inst.bch) + " != |Z| + 1 = " +
                         std::to_string(inst.defining_set.size() + 1));

    // (d) the generator divides x^n - alpha
    add("divides", check_divides(inst.code) ? "pass" : "fail: g does not divide x^n - alpha");

    if (level >= OracleLevel::rank) {
        try {
            const u64 r = rank_hh_star(inst.code, budget);
            add("rank", r == inst.computed.c
                            ? "pass"
                            : "fail: rank(H H*) = " + std::to_string(r) + " != c = " +
                                  std::to_string(inst.computed.c));
        } catch (const OracleBudgetExceeded&) {
            add("rank", "skipped: budget");
        }
    }

    if (level >= OracleLevel::mds || level == OracleLevel::exhaustive) {
        // Materialize G and H once, under the dense-cell budget.
        bool have_matrices = false;
        Matrix g, h;
        try {
            if (inst.code.field->order() > budget.max_field_order ||
                inst.code.k * inst.code.n > budget.max_dense_cells ||
                (inst.code.n - inst.code.k) * inst.code.n > budget.max_dense_cells) {
                throw OracleBudgetExceeded("dense matrices exceed budget");
            }
            g = generator_matrix(inst.code);
            h = parity_check_matrix(inst.code);
            have_matrices = true;
        } catch (const OracleBudgetExceeded&) {
            if (level >= OracleLevel::mds) add("mds", "skipped: budget");
            if (level == OracleLevel::exhaustive) add("exhaustive", "skipped: budget");
        }

        if (have_matrices && level >= OracleLevel::mds) {
            try {
                add("mds", mds_certify(g, h, budget)
                               ? "pass"
                               : "fail: a maximal minor vanishes; the classical code "
                                 "is not MDS");
            } catch (const OracleBudgetExceeded&) {
                add("mds", "skipped: budget");
            }
        }
        if (have_matrices && level == OracleLevel::exhaustive) {
            try {
                const u64 d = min_distance_exhaustive(g, budget);
                add("exhaustive", d == inst.bch
                                      ? "pass"
                                      : "fail: exhaustive distance " + std::to_string(d) +
                                            " != designed " + std::to_string(inst.bch));
            } catch (const OracleBudgetExceeded&) {
                add("exhaustive", "skipped: budget");
            }
        }
    }
    return rep;
}

const std::vector<PrintedRow>& printed_table(int family) {
    family_spec(family);
    static const std::vector<std::vector<PrintedRow>> tables = {
        // family 1
        {{1, 17, 1, 17, 4, 12, 5},
         {1, 17, 2, 29, 8, 14, 5},
         {1, 37, 1, 137, 96, 24, 5},
         {1, 37, 2, 137, 92, 26, 5},
         {1, 37, 3, 137, 88, 28, 5},
         {1, 37, 4, 137, 84, 30, 5},
         {1, 47, 1, 221, 168, 30, 5},
         {1, 47, 2, 221, 164, 32, 5},
         {1, 47, 3, 221, 160, 34, 5},
         {1, 47, 4, 221, 156, 36, 5},
         {1, 47, 5, 221, 152, 38, 5}},
        // family 2
        {{2, 17, 1, 29, 4, 18, 9},
         {2, 37, 1, 137, 80, 34, 9},
         {2, 37, 2, 137, 76, 36, 9},
         {2, 37, 3, 137, 72, 38, 9},
         {2, 37, 4, 137, 68, 40, 9},
         {2, 47, 1, 221, 148, 42, 9},
         {2, 47, 2, 221, 144, 44, 9},
         {2, 47, 3, 221, 140, 46, 9},
         {2, 47, 4, 221, 136, 48, 9},
         {2, 47, 5, 221, 132, 50, 9}},
        // family 3
        {{3, 13, 1, 17, 4, 10, 5},
         {3, 23, 1, 53, 28, 16, 5},
         {3, 23, 2, 53, 24, 18, 5},
         {3, 43, 1, 185, 136, 28, 5},
         {3, 43, 2, 185, 132, 30, 5},
         {3, 43, 3, 185, 128, 32, 5},
         {3, 43, 4, 185, 124, 34, 5},
         {3, 53, 1, 281, 220, 34, 5},
         {3, 53, 2, 281, 216, 36, 5},
         {3, 53, 3, 281, 212, 38, 5},
         {3, 53, 4, 281, 208, 40, 5},
         {3, 53, 5, 281, 204, 42, 5}},
        // family 4
        {{4, 13, 1, 17, 4, 12, 9},
         {4, 23, 1, 53, 24, 20, 9},
         {4, 23, 2, 53, 20, 22, 9},
         {4, 43, 1, 185, 124, 36, 9},
         {4, 43, 2, 185, 120, 38, 9},
         {4, 43, 3, 185, 116, 40, 9},
         {4, 43, 4, 185, 112, 42, 9},
         {4, 53, 1, 281, 204, 44, 9},
         {4, 53, 2, 281, 200, 46, 9},
         {4, 53, 3, 281, 196, 48, 9},
         {4, 53, 4, 281, 192, 50, 9},
         {4, 53, 5, 281, 188, 52, 9}},
        // family 5
        {{5, 32, 1, 205, 169, 21, 4},
         {5, 32, 2, 205, 165, 23, 4},
         {5, 32, 3, 205, 161, 25, 4},
         {5, 32, 4, 205, 157, 27, 4},
         {5, 32, 5, 205, 153, 29, 4},
         {5, 32, 6, 205, 149, 31, 4},
         {5, 32, 7, 205, 145, 33, 4}},
        // family 6
        {{6, 8, 1, 13, 5, 7, 4},
         {6, 8, 2, 13, 1, 9, 4},
         {6, 128, 1, 3277, 3125, 79, 4},
         {6, 128, 2, 3277, 3121, 81, 4},
         {6, 128, 3, 3277, 3117, 83, 4},
         {6, 128, 4, 3277, 3113, 85, 4},
         {6, 128, 5, 3277, 3109, 87, 4},
         {6, 128, 6, 3277, 3105, 89, 4},
         {6, 128, 26, 3277, 3025, 129, 4}},
        // family 7
        {{7, 512, 1, 20165, 19553, 309, 4},
         {7, 512, 2, 20165, 19549, 311, 4},
         {7, 512, 103, 20165, 19145, 513, 4}},
        // family 8
        {{8, 64, 1, 241, 157, 42, 4},
         {8, 64, 2, 241, 153, 44, 4},
         {8, 64, 3, 241, 149, 46, 4},
         {8, 64, 4, 241, 145, 48, 4}},
    };
    return tables[static_cast<std::size_t>(family - 1)];
}

std::vector<TableRow> regenerate_table(int family) {
    std::vector<TableRow> out;
    for (const PrintedRow& row : printed_table(family)) {
        TableRow t;
        t.reference = row;
        t.regenerated = expected_params(family, row.q, row.lambda);
        t.matches = t.regenerated.n == row.n && t.regenerated.k == row.k &&
                    t.regenerated.d == row.d && t.regenerated.c == row.c;
        out.push_back(std::move(t));
    }
    return out;
}

LemmaRangeReport check_lemma_ranges(int family, std::uint64_t q) {
    const std::string reason = admissibility_reason(family, q);
    if (!reason.empty()) throw NotAdmissible(reason);
    const FamilySpec& spec = family_spec(family);
    const u64 n = (q * q + 1) / spec.divisor;
    const CyclotomicSpace sp =
        make_space(q, n, spec.even_q ? SRule::even_q : SRule::odd_q);

    // Stated dual-containment range of the partial ladder, and where it starts.
    u64 j_lo = 0, hi = 0;
    switch (family) {
        case 1:
        case 2: j_lo = 1; hi = 3 * (q - 7) / 10 + 1; break;
        case 3:
        case 4: j_lo = 1; hi = 3 * (q - 3) / 10; break;
        case 5:
        case 7: j_lo = 0; hi = 3 * (q - 2) / 10 - 1; break;
        case 6: j_lo = 0; hi = (3 * q - 14) / 10; break;
        default: j_lo = 0; hi = 3 * (q - 4) / 10 + 2; break;
    }

    LemmaRangeReport rep;
    rep.family = family;
    rep.q = q;
    rep.stated_steps = hi - j_lo + 1;
    bool ok = true;

    std::vector<u64> zs;
    for (u64 lam = j_lo; lam <= hi; ++lam) {
        const u64 base = (sp.s + sp.rn - (sp.r * lam) % sp.rn) % sp.rn;
        auto cs = coset_of(sp, base);
        zs.insert(zs.end(), cs.begin(), cs.end());
        std::sort(zs.begin(), zs.end());
        if (!is_dual_containing(sp, zs)) {
            ok = false;
            break;
        }
        ++rep.steps_checked;
    }
    {
        const u64 base = (sp.s + sp.rn - (sp.r * (hi + 1)) % sp.rn) % sp.rn;
        auto cs = coset_of(sp, base);
        zs.insert(zs.end(), cs.begin(), cs.end());
        std::sort(zs.begin(), zs.end());
        rep.boundary_fails = !is_dual_containing(sp, zs);
        ok = ok && rep.boundary_fails;
    }

    if (family <= 4) {
        const u64 x = (family <= 2) ? 7 : 3;
        const u64 shift = 3 * (q - x) / 10;
        const u64 t_hi = (q - x) / 10;
        std::vector<u64> shifted = ladder_set(sp, shift, shift);
        for (u64 t = 1; t <= t_hi; ++t) {
            auto cs = ladder_set(sp, shift + t, shift + t);
            shifted.insert(shifted.end(), cs.begin(), cs.end());
            std::sort(shifted.begin(), shifted.end());
            if (!is_dual_containing(sp, shifted)) {
                ok = false;
                break;
            }
            ++rep.shifted_checked;
        }
    }
    rep.pass = ok;
    return rep;
}

CosetImageReport check_coset_images(std::uint64_t q) {
    u64 p = 0;
    int e = 0;
    if (!is_prime_power(q, &p, &e) || p == 2 || (q % 10 != 3 && q % 10 != 7)) {
        throw NotAdmissible("coset-image identities need an odd prime power with q == 3 "
                            "or 7 (mod 10); got q = " + std::to_string(q));
    }
    const u64 n = (q * q + 1) / 10;
    const CyclotomicSpace sp = make_space(q, n, SRule::odd_q);

    // Pairs of ladder indices (a, b) with -q C_{s - r a} = C_{s - r b}.
    std::vector<std::pair<u64, u64>> pairs;
    pairs.emplace_back(0, 0);  // -q C_s = C_s
    if (q % 10 == 7) {
        pairs.emplace_back((q + 3) / 10, (3 * q - 1) / 10);
        pairs.emplace_back((2 * q - 4) / 10, (2 * q + 1) / 5);
    } else {
        pairs.emplace_back((q - 3) / 10, (3 * q + 1) / 10);
        pairs.emplace_back((q + 2) / 5, (2 * q - 1) / 5);
    }

    CosetImageReport rep;
    rep.q = q;
    bool ok = true;
    for (auto [a, b] : pairs) {
        const u64 za = (sp.s + sp.rn - (sp.r * a) % sp.rn) % sp.rn;
        const u64 zb = (sp.s + sp.rn - (sp.r * b) % sp.rn) % sp.rn;
        if (neg_q_image(sp, coset_of(sp, za)) != coset_of(sp, zb)) {
            ok = false;
            break;
        }
        ++rep.identities_checked;
    }
    rep.pass = ok;
    return rep;
}

}  // namespace eaqmds
