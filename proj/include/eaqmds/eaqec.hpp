#pragma once

/**
 * Entanglement-assisted quantum codes derived from classical constacyclic
 * codes via the Hermitian construction.
 *
 * A classical [n, k_cl] code over GF(q^2) with defining set Z yields an
 * [[n, 2 k_cl - n + c, d; c]]_q quantum code, where the entanglement count
 * c = |Z intersect (-q Z)| measures how far the code is from containing its
 * Hermitian dual.  The count is cross-checked against the matrix identity
 * c = rank(H H*), H a parity check matrix and H* its conjugate transpose.
 */

#include <cstdint>

#include "codes.hpp"
#include "oracle.hpp"

namespace eaqmds {

struct EaqecParams {
    std::uint64_t n = 0;  // length
    std::int64_t k = 0;   // logical dimension
    std::uint64_t d = 0;  // minimum distance (designed or certified)
    std::uint64_t c = 0;  // entangled pairs consumed
    std::uint64_t q = 0;  // qudit alphabet size

    friend bool operator==(const EaqecParams&, const EaqecParams&) = default;
};

/// n + c - k - 2(d - 1); zero exactly on the EA-Singleton line.
std::int64_t singleton_defect(const EaqecParams& p);

/// Defect zero together with the degenerate-range guard 2d <= n + 2.
bool is_eaqmds(const EaqecParams& p);

/// c = |Z intersect (-q Z)|, counted on the defining set.
std::uint64_t entangled_count(const ConstacyclicCode& c);

/**
 * Assemble the quantum parameters of a classical code whose minimum distance
 * is d.  Throws NonpositiveLogicalDimension when 2 k_cl - n + c <= 0.
 */
EaqecParams derive_eaqec(const ConstacyclicCode& code, std::uint64_t d);

/**
 * The independent entanglement oracle: rank(H H*) computed by dense linear
 * algebra.  Subject to the budget (the parity check matrix is materialized).
 */
std::uint64_t rank_hh_star(const ConstacyclicCode& code, const OracleBudget& budget);

}  // namespace eaqmds
