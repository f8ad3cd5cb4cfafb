#pragma once

/**
 * Classical alpha-constacyclic codes over GF(q^2) cut out by defining sets.
 *
 * A code of length n (gcd(n, q) = 1) is the ideal of GF(q^2)[x]/(x^n - alpha)
 * generated by
 *
 *     g(x) = prod_{z in Z} (x - delta^z),
 *
 * where delta has order rn in the splitting field GF(q^(2m)), alpha = delta^n
 * has order r = q + 1 in GF(q^2), and Z is a union of q^2-cyclotomic cosets
 * inside the ambient set O of cosets.hpp.  Coset closure of Z is exactly what
 * makes g land in GF(q^2)[x]; the construction surfaces a violation as
 * CoefficientOutsideSubfield.
 */

#include <cstdint>
#include <vector>

#include "cosets.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace eaqmds {

struct ConstacyclicCode {
    CyclotomicSpace space;
    std::vector<std::uint64_t> defining_set;  // sorted, duplicates removed

    const FieldDescriptor* field = nullptr;      // GF(q^2)
    const FieldDescriptor* splitting = nullptr;  // GF(q^(2m))
    TowerEmbedding embedding;                    // field -> splitting

    FieldElement delta;  // fixed primitive rn-th root of unity in splitting
    FieldElement alpha;  // delta^n, an element of GF(q^2) of order r

    Poly generator;       // monic, degree |Z|, over GF(q^2)
    std::uint64_t n = 0;  // length
    std::uint64_t k = 0;  // dimension n - |Z|
};

/**
 * Build the code with defining set zs (members of O, reduced mod rn).
 * Throws NotInAmbient for indices outside O, CoefficientOutsideSubfield when
 * zs is not a union of cosets, and ZeroDimensional when zs covers all of O.
 */
ConstacyclicCode build_code(const CyclotomicSpace& sp, std::vector<std::uint64_t> zs);

/// The ambient modulus x^n - alpha as a polynomial over GF(q^2).
Poly x_n_minus_alpha(const ConstacyclicCode& c);

/// True when the generator divides x^n - alpha (it always should).
bool check_divides(const ConstacyclicCode& c);

/**
 * k x n generator matrix whose rows are x^i g(x), 0 <= i < k.
 * Throws ZeroDimensional when k = 0.
 */
Matrix generator_matrix(const ConstacyclicCode& c);

/**
 * (n-k) x n matrix H with G H^T = 0 whose rows span the Euclidean dual.
 * Throws FullCode when k = n (the dual is trivial).
 */
Matrix parity_check_matrix(const ConstacyclicCode& c);

/**
 * The Hermitian dual, again alpha-constacyclic, with defining set
 * O \ (-q Z).  The dual of a full code is the zero code (k = 0); it is
 * representable here even though build_code would reject its defining set.
 */
ConstacyclicCode hermitian_dual(const ConstacyclicCode& c);

}  // namespace eaqmds
