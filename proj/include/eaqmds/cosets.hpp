#pragma once

/**
 * q^2-cyclotomic cosets on the ambient index set
 *
 *     O = { 1 + r j : 0 <= j < n },   r = q + 1,
 *
 * taken modulo r n.  O is closed under multiplication by q^2 and by -q
 * (both are congruent to 1 mod r), which makes it the natural home for the
 * defining sets of the alpha-constacyclic codes built in codes.hpp: cosets
 * group the exponents whose minimal polynomials coincide, and the -q image
 * governs Hermitian duality.
 */

#include <cstdint>
#include <vector>

#include "gf.hpp"

namespace eaqmds {

/// Which distinguished base point s the space carries.
enum class SRule {
    odd_q,   // s = (q^2 + 1) / 2, requires q odd
    even_q,  // s = (q^2 - q) / 2, requires q even
};

struct CyclotomicSpace {
    std::uint64_t q = 0;   // base prime power; codes live over GF(q^2)
    std::uint64_t n = 0;   // code length
    std::uint64_t r = 0;   // q + 1
    std::uint64_t rn = 0;  // modulus r * n
    std::uint64_t s = 0;   // base point, reduced mod rn; s = 1 (mod r)
    std::uint32_t m = 0;   // multiplicative order of q^2 mod rn
};

/**
 * Validate and assemble a coset space.
 * Throws NonPrimeCharacteristic when q is not a prime power, NonCoprimeLength
 * when gcd(q, n) != 1, and SNotInAmbient when the chosen rule is incompatible
 * with the parity of q (the base point would fall outside O).
 */
CyclotomicSpace make_space(std::uint64_t q, std::uint64_t n, SRule rule);

/// j-th ambient element 1 + r j; throws NotInAmbient when j >= n.
std::uint64_t element_at(const CyclotomicSpace& sp, std::uint64_t j);

/// Inverse of element_at; throws NotInAmbient when z is not in O.
std::uint64_t position_of(const CyclotomicSpace& sp, std::uint64_t z);

/// The q^2-cyclotomic coset of z mod rn, sorted.  Throws NotInAmbient.
std::vector<std::uint64_t> coset_of(const CyclotomicSpace& sp, std::uint64_t z);

/// Image of a sorted set under z -> -q z (mod rn); sorted.
std::vector<std::uint64_t> neg_q_image(const CyclotomicSpace& sp,
                                       const std::vector<std::uint64_t>& zs);

/// Z is dual-containing when Z and -qZ are disjoint.
bool is_dual_containing(const CyclotomicSpace& sp, const std::vector<std::uint64_t>& zs);

/// Defining set of the Hermitian dual code: O \ (-q Z), sorted.
std::vector<std::uint64_t> dual_defining_set(const CyclotomicSpace& sp,
                                             const std::vector<std::uint64_t>& zs);

/**
 * Split Z into the entanglement part z1 = Z intersect (-q Z) and the
 * remainder z2 = Z \ z1.  |z1| is the entanglement count of the derived
 * quantum code.
 */
struct DefiningSetDecomposition {
    std::vector<std::uint64_t> z1;
    std::vector<std::uint64_t> z2;
};
DefiningSetDecomposition decompose(const CyclotomicSpace& sp,
                                   const std::vector<std::uint64_t>& zs);

/**
 * BCH-style designed distance: one more than the longest run of cyclically
 * consecutive positions j (z = 1 + r j) covered by Z; 1 for the empty set.
 */
std::uint64_t bch_designed_distance(const CyclotomicSpace& sp,
                                    const std::vector<std::uint64_t>& zs);

}  // namespace eaqmds
