#include "eaqmds/eaqec.hpp"

#include <string>

namespace eaqmds {

std::int64_t singleton_defect(const EaqecParams& p) {
    return static_cast<std::int64_t>(p.n) + static_cast<std::int64_t>(p.c) - p.k -
           2 * (static_cast<std::int64_t>(p.d) - 1);
}

bool is_eaqmds(const EaqecParams& p) {
    return singleton_defect(p) == 0 && 2 * p.d <= p.n + 2;
}

std::uint64_t entangled_count(const ConstacyclicCode& c) {
    return decompose(c.space, c.defining_set).z1.size();
}

EaqecParams derive_eaqec(const ConstacyclicCode& code, std::uint64_t d) {
    const std::uint64_t c = entangled_count(code);
    const std::int64_t k = 2 * static_cast<std::int64_t>(code.k) -
                           static_cast<std::int64_t>(code.n) + static_cast<std::int64_t>(c);
    if (k <= 0) {
        throw NonpositiveLogicalDimension("logical dimension 2k - n + c = " +
                                          std::to_string(k));
    }
    return EaqecParams{code.n, k, d, c, code.space.q};
}

std::uint64_t rank_hh_star(const ConstacyclicCode& code, const OracleBudget& budget) {
    if (code.field->order() > budget.max_field_order) {
        throw OracleBudgetExceeded("rank_hh_star: field order " +
                                   std::to_string(code.field->order()) + " exceeds budget");
    }
    if (code.k * code.n > budget.max_dense_cells ||
        (code.n - code.k) * code.n > budget.max_dense_cells) {
        throw OracleBudgetExceeded("rank_hh_star: dense matrices for [" +
                                   std::to_string(code.n) + ", " + std::to_string(code.k) +
                                   "] exceed budget");
    }
    Matrix h = parity_check_matrix(code);
    Matrix prod = mat_mul(h, mat_conj_transpose(h, code.space.q));
    return matrix_rank(prod, budget);
}

}  // namespace eaqmds
