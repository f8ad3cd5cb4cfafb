#pragma once

/**
 * Independent brute-force oracles.
 *
 * Everything here recomputes a claim from first principles -- exhaustive
 * codeword enumeration, explicit minor determinants, dense rank -- without
 * reusing the formulas under test.  Each entry point takes an explicit
 * budget and throws OracleBudgetExceeded instead of attempting work that
 * cannot finish quickly; callers decide whether a skipped check is fatal.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linalg.hpp"

namespace eaqmds {

struct OracleBudget {
    std::uint64_t max_codewords = 10'000'000;   // exhaustive enumeration cap
    std::uint64_t max_minors = 1'000'000;       // MDS certification cap
    std::uint64_t max_field_order = 65'536;     // keep scalar ops table-backed
    std::uint64_t max_dense_cells = 2'000'000;  // dense matrix size cap
};

/**
 * Exact minimum distance by enumerating all q^k - 1 nonzero codewords of the
 * row space of g.  Throws OracleBudgetExceeded when the enumeration or the
 * matrix itself exceeds the budget.
 */
std::uint64_t min_distance_exhaustive(const Matrix& g, const OracleBudget& budget);

/**
 * Certify the MDS property (minimum distance n - k + 1) by checking that
 * every maximal minor on the cheaper of the two sides is nonzero: all k-column
 * subsets of g are independent iff all (n-k)-column subsets of h are.
 * Returns false as soon as one singular subset is found.
 */
bool mds_certify(const Matrix& g, const Matrix& h, const OracleBudget& budget);

/// Budget-checked dense rank.
std::size_t matrix_rank(const Matrix& a, const OracleBudget& budget);

/// Quadratic-time sorted intersection, kept deliberately naive as a
/// cross-check for the set algebra used elsewhere.
std::vector<std::uint64_t> intersect_bruteforce(const std::vector<std::uint64_t>& a,
                                                const std::vector<std::uint64_t>& b);

}  // namespace eaqmds
