#pragma once

/**
 * Dense univariate polynomials over a FieldDescriptor.
 *
 * Coefficients are flat codes stored lowest power first; the zero polynomial
 * is the empty vector and every nonzero polynomial keeps a nonzero leading
 * coefficient (normal form), so structural equality is semantic equality.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace eaqmds {

struct Poly {
    const FieldDescriptor* field = nullptr;
    std::vector<std::uint64_t> coeffs;  // ascending; empty == zero polynomial

    friend bool operator==(const Poly&, const Poly&) = default;
};

/// Normalize a coefficient vector into a Poly (drops leading zeros).
Poly make_poly(const FieldDescriptor* f, std::vector<std::uint64_t> coeffs);

/// Degree, with deg 0 = -1 by convention.
std::int64_t poly_degree(const Poly& a);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

/// Quotient and remainder with deg(rem) < deg(b); the divisor need not be
/// monic.  Throws DivisionByZeroPolynomial when b is the zero polynomial.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic product prod_i (x - roots[i]); the empty product is 1.
Poly poly_from_roots(const FieldDescriptor* f, const std::vector<std::uint64_t>& roots);

/// Horner evaluation at the flat code x.
std::uint64_t poly_eval(const Poly& a, std::uint64_t x);

/// Apply a tower embedding coefficient-wise (subfield -> superfield).
Poly poly_embed(const TowerEmbedding& emb, const Poly& a);

/**
 * Inverse of poly_embed on its image.  Throws CoefficientOutsideSubfield if
 * some coefficient does not lie in the embedded copy of the subfield.
 */
Poly poly_project(const TowerEmbedding& emb, const Poly& a);

}  // namespace eaqmds
