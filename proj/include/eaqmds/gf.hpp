#pragma once

/**
 * Finite fields GF(p^t) with a canonical, reproducible structure.
 *
 * Every field is built from a deterministic recipe so that independent runs
 * agree bit-for-bit on every derived object:
 *
 *   - modulus: the first monic irreducible polynomial of degree t over GF(p)
 *     in the ordering obtained by reading 0, 1, 2, ... as base-p digit strings
 *     for the non-leading coefficients (lowest power first);
 *   - elements: flat codes in [0, p^t), the base-p packing of the coefficient
 *     vector with respect to the power basis of the modulus root;
 *   - generator: the smallest flat code whose multiplicative order is p^t - 1;
 *   - subfield embeddings: the polynomial-basis root of the subfield is sent
 *     to the smallest root (by flat code) of the subfield modulus inside the
 *     superfield.
 *
 * Fields of order at most 2^16 use log/antilog tables; larger fields fall
 * back to direct polynomial arithmetic (carry-less shift/XOR reduction in
 * characteristic 2).  Field orders are capped below 2^63.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace eaqmds {

enum class ArithKind { add, sub, mul, div };

/**
 * Immutable description of one finite field, owning its arithmetic kernels.
 * Instances are interned: make_field returns the same pointer for the same
 * (p, t), so descriptor pointers double as field identities.
 */
class FieldDescriptor {
public:
    std::uint64_t characteristic() const { return p_; }
    std::uint32_t degree() const { return t_; }
    std::uint64_t order() const { return order_; }

    /// Monic irreducible modulus over GF(p), coefficients ascending, size t+1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    // Arithmetic on flat codes.  Codes must lie in [0, order).
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const;  ///< throws DivisionByZero
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t inv(std::uint64_t a) const;                   ///< throws DivisionByZero
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;  ///< 0^0 == 1

    /// Canonical primitive element (smallest primitive flat code).
    std::uint64_t generator() const { return generator_; }

    /// Multiplicative order of a nonzero element; throws DivisionByZero on 0.
    std::uint64_t element_order(std::uint64_t a) const;

    /// Base-p digit vector of a code, ascending, padded to length t.
    std::vector<std::uint64_t> digits(std::uint64_t code) const;

    /// Inverse of digits(); validates digit range and vector length.
    std::uint64_t from_digits(const std::vector<std::uint64_t>& ds) const;

private:
    friend const FieldDescriptor* make_field(std::uint64_t p, std::uint32_t t);

    FieldDescriptor() = default;
    void init(std::uint64_t p, std::uint32_t t);
    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow_generic(std::uint64_t a, std::uint64_t e) const;

    std::uint64_t p_ = 0;
    std::uint32_t t_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t modulus_bits_ = 0;  // characteristic 2 only: packed modulus
    bool tables_ = false;
    std::vector<std::uint64_t> exp_;  // size 2*(order-1) when tables_ is set
    std::vector<std::uint32_t> log_;  // size order; log_[0] is unused
    std::uint64_t generator_ = 0;
    std::vector<std::pair<std::uint64_t, int>> group_factors_;  // of order-1
};

/**
 * Intern the field GF(p^t).
 * Throws NonPrimeCharacteristic if p is not prime and MagnitudeExceeded if
 * p^t >= 2^63 (or t == 0).
 */
const FieldDescriptor* make_field(std::uint64_t p, std::uint32_t t);

/// A field element: a flat code tagged with its field.
struct FieldElement {
    const FieldDescriptor* field = nullptr;
    std::uint64_t code = 0;

    /// Coefficient vector (base-p digits, ascending, length degree()).
    std::vector<std::uint64_t> coeffs() const;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement element_from_code(const FieldDescriptor* f, std::uint64_t code);
FieldElement element_from_digits(const FieldDescriptor* f,
                                 const std::vector<std::uint64_t>& ds);
FieldElement field_zero(const FieldDescriptor* f);
FieldElement field_one(const FieldDescriptor* f);

/// Binary arithmetic; throws FieldMismatch when operands live in
/// different fields and DivisionByZero on division by zero.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithKind kind);

/// a^e with the convention 0^0 == 1.  Never throws.
FieldElement field_pow(const FieldElement& a, std::uint64_t e);

/**
 * Frobenius conjugate x -> x^q of an element of GF(q^2).
 * Throws NotAQuadraticExtension unless the element's field has order q^2.
 * Fixed points are exactly the q elements of the subfield GF(q).
 */
FieldElement conjugate(const FieldElement& a, std::uint64_t q);

/**
 * Deterministic element of multiplicative order exactly n: generator^((Q-1)/n).
 * Throws OrderDoesNotDivide unless n >= 1 divides Q - 1.
 */
FieldElement element_of_order(const FieldDescriptor* f, std::uint64_t n);

std::uint64_t multiplicative_order(const FieldElement& a);

/**
 * Field homomorphism GF(p^a) -> GF(p^b) for a | b.
 * The map is GF(p)-linear, fixes GF(p) pointwise, and is multiplicative; it
 * is pinned down by the canonical root choice described in the file header.
 */
struct TowerEmbedding {
    const FieldDescriptor* sub = nullptr;
    const FieldDescriptor* sup = nullptr;
    FieldElement image_of_sub_generator;  // image of sub->generator()

    // Implementation detail: image of the subfield polynomial-basis root and
    // a precomputed GF(p) solver for the inverse (projection) map.
    std::uint64_t rho = 0;
    std::vector<std::uint64_t> rho_powers;               // rho^0 .. rho^(a-1)
    std::vector<std::vector<std::uint64_t>> proj_elim;   // b x b over GF(p)
};

/// Throws NoEmbedding when the characteristics differ or deg(sub) does not
/// divide deg(sup).
TowerEmbedding build_embedding(const FieldDescriptor* sub, const FieldDescriptor* sup);

/// Apply the embedding to an element of the subfield.
FieldElement embed_element(const TowerEmbedding& emb, const FieldElement& a);

/// Inverse of embed_element on its image.  Returns false when `a` does not
/// lie in the embedded copy of the subfield.
bool try_project_element(const TowerEmbedding& emb, const FieldElement& a,
                         FieldElement* out);

// Integer utilities shared across the library.
bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
bool is_prime_power(std::uint64_t n, std::uint64_t* p_out = nullptr, int* e_out = nullptr);

}  // namespace eaqmds
