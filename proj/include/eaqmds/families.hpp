#pragma once

/**
 * The eight parameter families of entanglement-assisted MDS codes.
 *
 * Each family fixes a congruence class of prime powers q, a divisor D of
 * q^2 + 1 giving the length n = (q^2 + 1)/D, and a ladder of defining sets
 *
 *     Z(lambda) = union_{j=0}^{j_upper(lambda)} C_{s - r j},
 *
 * indexed by a step parameter lambda.  The classical constacyclic code with
 * defining set Z(lambda) is MDS with d = |Z| + 1, and the derived quantum
 * code [[n, n - 2|Z| + c, |Z| + 1; c]]_q sits on the EA-Singleton line with
 * a family-constant entanglement count c.
 *
 * Families 1-4 take odd q (s = (q^2 + 1)/2); families 5-8 take q = 2^e
 * (s = (q^2 - q)/2).  Everything here is pure integer arithmetic on top of
 * cosets.hpp; build_instance materializes the actual code.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cosets.hpp"
#include "eaqec.hpp"

namespace eaqmds {

struct FamilySpec {
    int id = 0;
    bool even_q = false;        // false: odd q, true: q = 2^e
    std::uint64_t divisor = 0;  // D in n = (q^2 + 1)/D
    std::uint64_t c = 0;        // entanglement count of every member
    std::string congruence;     // human-readable admissibility condition
    std::string lambda_range;   // human-readable range of the step parameter
};

/// Descriptions of all eight families, in id order.
const std::vector<FamilySpec>& list_families();

/// Spec for one family id; throws NotAdmissible for ids outside 1..8.
const FamilySpec& family_spec(int family);

/// Human-readable reason why (family, q) is rejected; empty when admissible.
std::string admissibility_reason(int family, std::uint64_t q);

bool admissible(int family, std::uint64_t q);

/// Largest valid step parameter; throws NotAdmissible.
std::uint64_t lambda_max(int family, std::uint64_t q);

/// Top coset index j_upper(lambda) of the defining-set ladder.
std::uint64_t family_j_upper(int family, std::uint64_t q, std::uint64_t lambda);

/// All admissible q <= q_max (q_max capped at 4096), ascending.
std::vector<std::uint64_t> admissible_q_values(int family, std::uint64_t q_max);

/**
 * Formula-level parameters of one instance.  k may be zero for a boundary
 * instance (such instances are excluded from enumeration and construction).
 * Throws NotAdmissible / LambdaOutOfRange.
 */
struct ExpectedInstance {
    int family = 0;
    std::uint64_t q = 0;
    std::uint64_t lambda = 0;
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::uint64_t d = 0;
    std::uint64_t c = 0;

    friend bool operator==(const ExpectedInstance&, const ExpectedInstance&) = default;
};
ExpectedInstance expected_params(int family, std::uint64_t q, std::uint64_t lambda);

/// Formula-level enumeration of every instance with k >= 1, (q, lambda) order.
std::vector<ExpectedInstance> enumerate_expected(int family, std::uint64_t q_max);

/// A fully constructed instance: the classical code plus derived parameters.
struct FamilyInstance {
    int family = 0;
    std::uint64_t q = 0;
    std::uint64_t lambda = 0;
    CyclotomicSpace space;
    std::vector<std::uint64_t> defining_set;
    ConstacyclicCode code;
    ExpectedInstance expected;
    EaqecParams computed;   // from the constructed code, d = designed distance
    std::uint64_t bch = 0;  // designed distance of the defining set
};

/**
 * Construct the instance.  Throws NotAdmissible, LambdaOutOfRange, or
 * NonpositiveLogicalDimension (boundary instances with k <= 0).
 */
FamilyInstance build_instance(int family, std::uint64_t q, std::uint64_t lambda);

/// All constructible instances up to q_max, (q, lambda) order.
std::vector<FamilyInstance> enumerate_instances(int family, std::uint64_t q_max);

/// How much independent verification to run on an instance.
enum class OracleLevel { none, rank, mds, exhaustive };

/**
 * Named checks on one instance, in a fixed render order:
 *   params     constructed (n, k, d, c) equal the formula values
 *   defect     the instance sits exactly on the EA-Singleton line
 *   bch        designed distance equals |Z| + 1
 *   divides    g(x) divides x^n - alpha
 *   rank       rank(H H*) equals c                  (level >= rank)
 *   mds        all maximal minors nonzero           (level >= mds)
 *   exhaustive enumerated distance equals designed  (level == exhaustive)
 * Oracle checks that exceed the budget render as "skipped: ..." and do not
 * affect all_pass; a failed check renders as "fail: ...".
 */
struct VerificationReport {
    std::vector<std::pair<std::string, std::string>> checks;
    bool all_pass = true;
};
VerificationReport verify_instance(const FamilyInstance& inst, OracleLevel level,
                                   const OracleBudget& budget);

/**
 * Reference parameter tables as printed in the source material for the
 * families.  A handful of reference entries are internally inconsistent
 * (their d contradicts the defect-zero property encoded by every other row);
 * regenerate_table recomputes every row from the formulas and flags the
 * mismatches instead of silently adopting either side.
 */
struct PrintedRow {
    int family = 0;
    std::uint64_t q = 0;
    std::uint64_t lambda = 0;
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::uint64_t d = 0;
    std::uint64_t c = 0;
};
const std::vector<PrintedRow>& printed_table(int family);

struct TableRow {
    PrintedRow reference;
    ExpectedInstance regenerated;
    bool matches = false;
};
std::vector<TableRow> regenerate_table(int family);

/**
 * Dual-containment ladder check for one family at one q: every step of the
 * partial defining-set ladder is Hermitian dual-containing, and the first
 * step past the stated range is not.  Families 1-4 additionally carry a
 * second, shifted ladder (no boundary assertion for that one).
 */
struct LemmaRangeReport {
    int family = 0;
    std::uint64_t q = 0;
    std::uint64_t steps_checked = 0;    // dual-containing ladder steps found
    std::uint64_t stated_steps = 0;     // ladder steps the stated range promises
    bool boundary_fails = true;         // step past the end is NOT containing
    std::uint64_t shifted_checked = 0;  // steps of the shifted ladder (families 1-4)
    bool pass = false;
};
LemmaRangeReport check_lemma_ranges(int family, std::uint64_t q);

/**
 * Verify the three -q coset-image identities that drive the odd-q ladders,
 * as set equalities in the D = 10 space of q.  Throws NotAdmissible unless
 * q is an odd prime power with q = 3 or 7 (mod 10).
 */
struct CosetImageReport {
    std::uint64_t q = 0;
    int identities_checked = 0;
    bool pass = false;
};
CosetImageReport check_coset_images(std::uint64_t q);

}  // namespace eaqmds
