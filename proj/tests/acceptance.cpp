/**
 * Acceptance gate: end-to-end checks of the whole pipeline.
 *
 *     acceptance <1..7|all> [path-to-cli]
 *
 * Prints one verdict line per criterion (plus indented diagnostics) and
 * exits 0 iff every requested criterion passed.  The criteria encode the
 * reference tables and the stated dual-containment ranges verbatim; where
 * the computed algebra contradicts a reference claim the criterion reports
 * FAIL with the exact disagreeing values instead of silently adopting
 * either side.  See README.md for the analysis of the known disagreements
 * (criteria 1, 3 and 4).
 */

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eaqmds/codes.hpp"
#include "eaqmds/cosets.hpp"
#include "eaqmds/eaqec.hpp"
#include "eaqmds/families.hpp"
#include "eaqmds/gf.hpp"
#include "eaqmds/linalg.hpp"
#include "eaqmds/oracle.hpp"
#include "eaqmds/poly.hpp"

namespace {

using namespace eaqmds;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s << " s";
    return os.str();
}

std::string code_str(u64 n, i64 k, u64 d, u64 c, u64 q) {
    std::ostringstream os;
    os << "[[" << n << ", " << k << ", " << d << "; " << c << "]]_" << q;
    return os.str();
}

struct Verdict {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void fail(std::string line) {
        pass = false;
        details.push_back(std::move(line));
    }
    void note(std::string line) { details.push_back(std::move(line)); }
};

/// Criterion 1: every reference-table row regenerates from the closed
/// forms, each family in under a second.  The single family-1 misprint is
/// expected to be flagged discrepant (not matched); any other mismatch
/// fails the criterion.
Verdict criterion1() {
    Verdict v;
    int matched = 0;
    int expected_flags = 0;
    int unexpected = 0;
    for (int f = 1; f <= 8; ++f) {
        auto t0 = Clock::now();
        auto rows = regenerate_table(f);
        double dt = elapsed_s(t0);
        if (dt >= 1.0)
            v.fail("family " + std::to_string(f) + " regeneration took " + fmt_secs(dt) +
                   " (limit 1 s)");
        for (const auto& row : rows) {
            const auto& ref = row.reference;
            const auto& gen = row.regenerated;
            const bool known_flag = f == 1 && ref.n == 17 && ref.k == 4 && ref.d == 12;
            if (known_flag) {
                if (row.matches) {
                    v.fail("family 1 reference row " + code_str(ref.n, ref.k, ref.d, ref.c, ref.q) +
                           " unexpectedly matches the formulas");
                } else {
                    ++expected_flags;
                    v.note("family 1 reference row " + code_str(ref.n, ref.k, ref.d, ref.c, ref.q) +
                           " flagged discrepant as expected; formula value " +
                           code_str(gen.n, gen.k, gen.d, gen.c, gen.q));
                }
            } else if (row.matches) {
                ++matched;
            } else {
                ++unexpected;
                std::ostringstream os;
                os << "family " << f << " reference row "
                   << code_str(ref.n, ref.k, ref.d, ref.c, ref.q) << ": formula value "
                   << code_str(gen.n, gen.k, gen.d, gen.c, gen.q);
                if (gen.n == ref.n && gen.k == ref.k && gen.c == ref.c)
                    os << " (printed d is off the defect-zero line n + c - k = 2(d - 1) by "
                       << (i64)gen.d - (i64)ref.d << ")";
                v.fail(os.str());
            }
        }
    }
    if (expected_flags != 1)
        v.fail("expected exactly one flagged family-1 row, saw " + std::to_string(expected_flags));
    std::ostringstream os;
    if (v.pass)
        os << "all " << matched << " comparable reference rows regenerate from the formulas (1 "
           << "known family-1 misprint flagged), every family well under 1 s";
    else
        os << unexpected << " reference rows disagree with the formula values (" << matched
           << " match, 1 known family-1 misprint flagged)";
    v.summary = os.str();
    return v;
}

/// Criterion 2: on every buildable instance with q in {8, 13, 16, 17, 23,
/// 32}, the coset count |Z cap -qZ| and the independent Gram-matrix rank
/// rank(H H*) both equal the family's constant c.  Under 30 s total.
Verdict criterion2() {
    Verdict v;
    const std::vector<u64> qs{8, 13, 16, 17, 23, 32};
    const OracleBudget budget;
    auto t0 = Clock::now();
    int count = 0;
    for (int f = 1; f <= 8; ++f) {
        const auto& spec = family_spec(f);
        for (u64 q : qs) {
            if (!admissible(f, q)) continue;
            const u64 lmax = lambda_max(f, q);
            for (u64 lam = 1; lam <= lmax; ++lam) {
                if (expected_params(f, q, lam).k < 1) continue;
                auto inst = build_instance(f, q, lam);
                const u64 zcap = entangled_count(inst.code);
                const u64 rk = rank_hh_star(inst.code, budget);
                ++count;
                if (zcap != spec.c || rk != spec.c) {
                    std::ostringstream os;
                    os << "family " << f << ", q = " << q << ", lambda = " << lam
                       << ": |Z cap -qZ| = " << zcap << ", rank(H H*) = " << rk
                       << ", family c = " << spec.c;
                    v.fail(os.str());
                }
            }
        }
    }
    const double dt = elapsed_s(t0);
    if (dt >= 30.0) v.fail("total time " + fmt_secs(dt) + " exceeds the 30 s limit");
    if (count != 18)
        v.fail("expected 18 buildable instances over q in {8, 13, 16, 17, 23, 32}, enumerated " +
               std::to_string(count));
    v.summary = "rank(H H*) == |Z cap -qZ| == family c on " + std::to_string(count) +
                " instances in " + fmt_secs(dt);
    return v;
}

/// Criterion 3: for every family and every admissible q <= 512, each step
/// of the stated defining-set ladder is Hermitian dual-containing and the
/// first step past the stated range is not; the three -q coset-image
/// identities hold for every admissible odd q.  Under 10 s total.
Verdict criterion3() {
    Verdict v;
    auto t0 = Clock::now();
    int ladders = 0;
    u64 steps = 0;
    for (int f = 1; f <= 8; ++f) {
        for (u64 q : admissible_q_values(f, 512)) {
            auto rep = check_lemma_ranges(f, q);
            ++ladders;
            steps += rep.steps_checked + rep.shifted_checked;
            if (!rep.pass) {
                std::ostringstream os;
                os << "family " << f << ", q = " << q << ": dual containment holds for only "
                   << rep.steps_checked << " of the " << rep.stated_steps << " stated ladder "
                   << "steps";
                if (f == 7 && q == 512)
                    os << " (the step-98 union meets its own -q image: -q C_{s-19r} = C_{s-98r})";
                if (f == 8 && q == 64)
                    os << " (the step-9 union meets its own -q image: -q C_{s-5r} = C_{s-9r})";
                if (!rep.boundary_fails)
                    os << "; the step past the stated range is still dual-containing";
                v.fail(os.str());
            }
        }
    }
    std::set<u64> image_qs;
    for (int f : {1, 3})
        for (u64 q : admissible_q_values(f, 512)) image_qs.insert(q);
    int identities = 0;
    for (u64 q : image_qs) {
        auto rep = check_coset_images(q);
        identities += rep.identities_checked;
        if (!rep.pass) v.fail("-q coset-image identities fail at q = " + std::to_string(q));
    }
    const double dt = elapsed_s(t0);
    if (dt >= 10.0) v.fail("total time " + fmt_secs(dt) + " exceeds the 10 s limit");
    std::ostringstream os;
    os << ladders << " ladders (" << steps << " containment steps) and " << identities
       << " coset-image identities over all admissible q <= 512 in " << fmt_secs(dt);
    if (!v.pass) os << "; two ladders stop short of their stated ranges";
    v.summary = os.str();
    return v;
}

/// Criterion 4: every formula-level instance with q <= 512 sits exactly on
/// the EA-Singleton line n + c - k = 2(d - 1) and satisfies 2d <= n + 2.
/// Under 10 s total.
Verdict criterion4() {
    Verdict v;
    auto t0 = Clock::now();
    u64 audited = 0;
    int defect_bad = 0;
    std::vector<std::string> dbound;
    for (int f = 1; f <= 8; ++f) {
        for (const auto& e : enumerate_expected(f, 512)) {
            ++audited;
            const i64 defect = (i64)e.n + (i64)e.c - e.k - 2 * ((i64)e.d - 1);
            if (defect != 0) {
                ++defect_bad;
                v.fail("defect " + std::to_string(defect) + " != 0 for " +
                       code_str(e.n, e.k, e.d, e.c, e.q) + " (family " + std::to_string(f) +
                       ", lambda " + std::to_string(e.lambda) + ")");
            }
            if (2 * e.d > e.n + 2) {
                std::ostringstream os;
                os << code_str(e.n, e.k, e.d, e.c, e.q) << " (family " << f << ", lambda "
                   << e.lambda << "): 2d = " << 2 * e.d << " > n + 2 = " << e.n + 2;
                dbound.push_back(os.str());
            }
        }
    }
    for (const auto& line : dbound) v.fail(line);
    const double dt = elapsed_s(t0);
    if (dt >= 10.0) v.fail("total time " + fmt_secs(dt) + " exceeds the 10 s limit");
    std::ostringstream os;
    if (defect_bad == 0)
        os << "EA-Singleton equality n + c - k = 2(d - 1) holds on all " << audited
           << " instances with q <= 512";
    else
        os << defect_bad << " of " << audited << " instances miss the EA-Singleton line";
    if (dbound.empty())
        os << " and 2d <= n + 2 holds throughout";
    else
        os << ", but 2d <= n + 2 fails on " << dbound.size() << " small-q instances";
    os << " (" << fmt_secs(dt) << ")";
    v.summary = os.str();
    return v;
}

/// Criterion 5: direct MDS certification.  Four small classical codes pass
/// the all-minors-nonzero certificate and one [13, 3] coset-closed code has
/// exhaustively enumerated distance equal to its designed distance, each
/// item in under 60 s.
Verdict criterion5() {
    Verdict v;
    const OracleBudget budget;
    struct Item {
        int f;
        u64 q, lam;
    };
    for (const Item it : {Item{6, 8, 1}, Item{6, 8, 2}, Item{3, 13, 1}, Item{4, 13, 1}}) {
        auto t0 = Clock::now();
        auto inst = build_instance(it.f, it.q, it.lam);
        const auto g = generator_matrix(inst.code);
        const auto h = parity_check_matrix(inst.code);
        const bool mds = mds_certify(g, h, budget);
        const double dt = elapsed_s(t0);
        std::ostringstream tag;
        tag << "[" << inst.code.n << ", " << inst.code.k << "] over GF(" << it.q * it.q
            << ") (family " << it.f << ", lambda " << it.lam << ")";
        if (!mds)
            v.fail(tag.str() + " failed the minor certificate");
        else
            v.note(tag.str() + ": all maximal minors nonzero in " + fmt_secs(dt));
        if (dt >= 60.0) v.fail(tag.str() + " took " + fmt_secs(dt) + " (limit 60 s)");
    }
    auto t0 = Clock::now();
    auto sp = make_space(8, 13, SRule::even_q);
    std::vector<u64> zs;
    for (u64 j : {0, 1, 2, 3, 4, 5, 6, 7, 8, 12}) zs.push_back(element_at(sp, j));
    auto code = build_code(sp, zs);
    const u64 designed = bch_designed_distance(sp, code.defining_set);
    const u64 dist = min_distance_exhaustive(generator_matrix(code), budget);
    const double dt = elapsed_s(t0);
    if (code.k != 3 || designed != 11 || dist != 11) {
        std::ostringstream os;
        os << "[13, " << code.k << "] over GF(64): exhaustive distance " << dist
           << ", designed distance " << designed << " (both should be 11)";
        v.fail(os.str());
    } else {
        v.note("[13, 3] over GF(64): exhaustive minimum distance 11 equals the designed "
               "distance in " +
               fmt_secs(dt));
    }
    if (dt >= 60.0) v.fail("[13, 3] exhaustive search took " + fmt_secs(dt) + " (limit 60 s)");
    v.summary = v.pass ? "4 minor certificates and 1 exhaustive distance agree with d = n - k + 1"
                       : "an MDS certificate or exhaustive distance disagrees (see below)";
    return v;
}

/// Criterion 6: on 50 seeded-random unions of cyclotomic cosets (25 each
/// over the q = 8 and q = 13 spaces), the generator polynomial and dual
/// maps satisfy their six defining identities.  Under 60 s total.
Verdict criterion6() {
    Verdict v;
    auto t0 = Clock::now();
    std::mt19937_64 rng(20260815ULL);
    int sets = 0;
    auto run_space = [&](const CyclotomicSpace& sp) {
        std::vector<u64> reps;
        std::set<u64> seen;
        for (u64 j = 0; j < sp.n; ++j) {
            const u64 e = element_at(sp, j);
            if (seen.count(e)) continue;
            const auto cs = coset_of(sp, e);
            seen.insert(cs.begin(), cs.end());
            reps.push_back(e);
        }
        const u64 nmask = (u64{1} << reps.size()) - 2;
        for (int it = 0; it < 25; ++it) {
            const u64 mask = 1 + rng() % nmask;  // nonempty, proper
            std::vector<u64> zs;
            for (std::size_t b = 0; b < reps.size(); ++b)
                if (mask >> b & 1) {
                    const auto cs = coset_of(sp, reps[b]);
                    zs.insert(zs.end(), cs.begin(), cs.end());
                }
            std::sort(zs.begin(), zs.end());
            auto code = build_code(sp, zs);
            ++sets;
            const std::string tag =
                "q = " + std::to_string(sp.q) + ", coset mask " + std::to_string(mask);
            if (code.generator.coeffs.size() != zs.size() + 1)
                v.fail(tag + ": deg g != |Z|");
            if (!check_divides(code)) v.fail(tag + ": g does not divide x^n - alpha");
            const auto lifted = poly_embed(code.embedding, code.generator);
            bool roots_ok = true;
            for (u64 j = 0; j < sp.n; ++j) {
                const u64 e = element_at(sp, j);
                const bool in_z = std::binary_search(zs.begin(), zs.end(), e);
                const bool is_root = poly_eval(lifted, field_pow(code.delta, e).code) == 0;
                if (in_z != is_root) roots_ok = false;
            }
            if (!roots_ok) v.fail(tag + ": the root set of g is not exactly delta^Z");
            const auto gh = mat_mul(generator_matrix(code), mat_transpose(parity_check_matrix(code)));
            if (!mat_is_zero(gh)) v.fail(tag + ": G H^T != 0");
            if (dual_defining_set(sp, dual_defining_set(sp, zs)) != zs)
                v.fail(tag + ": the dual defining-set map is not an involution");
            if (neg_q_image(sp, neg_q_image(sp, zs)) != zs)
                v.fail(tag + ": the -q image is not an involution");
        }
    };
    run_space(make_space(8, 13, SRule::even_q));
    run_space(make_space(13, 17, SRule::odd_q));
    const double dt = elapsed_s(t0);
    if (dt >= 60.0) v.fail("total time " + fmt_secs(dt) + " exceeds the 60 s limit");
    if (sets != 50) v.fail("expected 50 random defining sets, ran " + std::to_string(sets));
    v.summary = "six generator/dual identities hold on " + std::to_string(sets) +
                " seeded-random coset unions (q = 8 and q = 13) in " + fmt_secs(dt);
    return v;
}

/// Criterion 7: two --reproducible CLI runs of the same enumeration are
/// byte-identical and exit 0.
Verdict criterion7(const std::string& cli) {
    Verdict v;
    if (cli.empty()) {
        v.pass = false;
        v.summary = "no CLI path supplied (usage: acceptance 7 <path-to-cli>)";
        return v;
    }
    const std::string cmd =
        "\"" + cli + "\" enumerate --family 6 --q-max 8 --oracle exhaustive --reproducible";
    auto run = [&](std::string& out) -> int {
        FILE* p = popen(cmd.c_str(), "r");
        if (p == nullptr) return -1;
        char buf[4096];
        std::size_t nb = 0;
        while ((nb = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, nb);
        const int st = pclose(p);
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    };
    std::string first, second;
    const int r1 = run(first);
    const int r2 = run(second);
    if (r1 != 0) v.fail("first run exited " + std::to_string(r1));
    if (r2 != 0) v.fail("second run exited " + std::to_string(r2));
    if (first.empty()) v.fail("first run produced no output");
    if (first != second) {
        std::size_t at = 0;
        while (at < first.size() && at < second.size() && first[at] == second[at]) ++at;
        v.fail("outputs differ at byte " + std::to_string(at));
    }
    if (v.pass)
        v.summary = "two reproducible enumeration runs are byte-identical (" +
                    std::to_string(first.size()) + " bytes, exit 0)";
    else
        v.summary = "reproducible enumeration runs differ (see below)";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string which = argc >= 2 ? argv[1] : "all";
    const std::string cli = argc >= 3 ? argv[2] : "";
    std::vector<int> run_list;
    if (which == "all") {
        run_list = {1, 2, 3, 4, 5, 6, 7};
    } else {
        const int n = std::atoi(which.c_str());
        if (n < 1 || n > 7) {
            std::cerr << "usage: acceptance <1..7|all> [path-to-cli]\n";
            return 2;
        }
        run_list = {n};
    }
    bool all_ok = true;
    for (const int n : run_list) {
        Verdict v;
        try {
            switch (n) {
                case 1: v = criterion1(); break;
                case 2: v = criterion2(); break;
                case 3: v = criterion3(); break;
                case 4: v = criterion4(); break;
                case 5: v = criterion5(); break;
                case 6: v = criterion6(); break;
                default: v = criterion7(cli); break;
            }
        } catch (const std::exception& ex) {
            v.pass = false;
            v.summary = std::string("unhandled exception: ") + ex.what();
        }
        std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << " - " << v.summary
                  << "\n";
        for (const auto& line : v.details) std::cout << "    " << line << "\n";
        all_ok = all_ok && v.pass;
    }
    return all_ok ? 0 : 1;
}
