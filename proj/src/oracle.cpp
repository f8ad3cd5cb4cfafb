#include "eaqmds/oracle.hpp"

#include <algorithm>
#include <string>

namespace eaqmds {
namespace {

using u64 = std::uint64_t;

void check_field_and_cells(const Matrix& a, const OracleBudget& budget, const char* what) {
    if (a.field->order() > budget.max_field_order) {
        throw OracleBudgetExceeded(std::string(what) + ": field order " +
                                   std::to_string(a.field->order()) + " exceeds budget");
    }
    if (a.rows * a.cols > budget.max_dense_cells) {
        throw OracleBudgetExceeded(std::string(what) + ": " +
                                   std::to_string(a.rows * a.cols) +
                                   " matrix cells exceed budget");
    }
}

// Binomial coefficient, saturating at cap + 1 to avoid overflow.
u64 binom_capped(u64 n, u64 k, u64 cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (u64 i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap + 1;
    }
    return static_cast<u64>(acc);
}

}  // namespace

std::uint64_t min_distance_exhaustive(const Matrix& g, const OracleBudget& budget) {
    check_field_and_cells(g, budget, "min_distance_exhaustive");
    const auto* f = g.field;
    const u64 q = f->order();
    const std::size_t k = g.rows, n = g.cols;

    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total - 1 > budget.max_codewords) {
            throw OracleBudgetExceeded("min_distance_exhaustive: q^k - 1 exceeds " +
                                       std::to_string(budget.max_codewords) + " codewords");
        }
    }

    // Lexicographic odometer over messages; the codeword is updated
    // incrementally by (new - old) * row_i on each digit change.
    std::vector<u64> msg(k, 0), cw(n, 0);
    u64 best = n + 1;
    unsigned __int128 count = total - 1;
    while (count--) {
        std::size_t i = 0;
        for (; i < k; ++i) {
            const u64 old = msg[i];
            const u64 next = old + 1 == q ? 0 : old + 1;
            msg[i] = next;
            const u64 diff = f->sub(next, old);
            for (std::size_t j = 0; j < n; ++j) {
                cw[j] = f->add(cw[j], f->mul(diff, g.at(i, j)));
            }
            if (next != 0) break;  // no carry
        }
        u64 weight = 0;
        for (std::size_t j = 0; j < n; ++j) weight += cw[j] != 0;
        if (weight < best) {
            best = weight;
            if (best == 1) return 1;
        }
    }
    return best;
}

bool mds_certify(const Matrix& g, const Matrix& h, const OracleBudget& budget) {
    check_field_and_cells(g, budget, "mds_certify");
    check_field_and_cells(h, budget, "mds_certify");
    if (g.cols != h.cols) throw FieldMismatch("generator/parity length mismatch");
    const std::size_t n = g.cols;

    // Both sides test the same property; pick the smaller minors.
    const Matrix& side = g.rows <= h.rows ? g : h;
    const std::size_t r = side.rows;
    if (r == 0) return true;

    const u64 minors = binom_capped(n, r, budget.max_minors);
    if (minors > budget.max_minors) {
        throw OracleBudgetExceeded("mds_certify: C(" + std::to_string(n) + ", " +
                                   std::to_string(r) + ") exceeds " +
                                   std::to_string(budget.max_minors) + " minors");
    }

    // Combination odometer over column subsets.
    std::vector<std::size_t> cols(r);
    for (std::size_t i = 0; i < r; ++i) cols[i] = i;
    Matrix minor = mat_zero(side.field, r, r);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) minor.at(i, j) = side.at(i, cols[j]);
        }
        if (mat_det(minor) == 0) return false;

        std::size_t i = r;
        while (i-- > 0) {
            if (cols[i] != n - r + i) break;
            if (i == 0) return true;
        }
        ++cols[i];
        for (std::size_t j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
    }
}

std::size_t matrix_rank(const Matrix& a, const OracleBudget& budget) {
    check_field_and_cells(a, budget, "matrix_rank");
    return mat_rank(a);
}

std::vector<std::uint64_t> intersect_bruteforce(const std::vector<std::uint64_t>& a,
                                                const std::vector<std::uint64_t>& b) {
    std::vector<u64> out;
    for (u64 x : a) {
        bool in_b = false;
        for (u64 y : b) {
            if (x == y) {
                in_b = true;
                break;
            }
        }
        bool seen = false;
        for (u64 y : out) {
            if (x == y) {
                seen = true;
                break;
            }
        }
        if (in_b && !seen) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace eaqmds
