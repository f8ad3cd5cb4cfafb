#pragma once

/**
 * Dense matrices over a FieldDescriptor: just the kernels the code
 * constructions need (products, reduced row echelon form, rank, null spaces,
 * determinants, conjugate transpose).
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gf.hpp"

namespace eaqmds {

struct Matrix {
    const FieldDescriptor* field = nullptr;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;  // row-major flat codes

    std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix mat_zero(const FieldDescriptor* f, std::size_t rows, std::size_t cols);
Matrix mat_identity(const FieldDescriptor* f, std::size_t n);

/// Throws FieldMismatch on mismatched fields or inner dimensions.
Matrix mat_mul(const Matrix& a, const Matrix& b);

Matrix mat_transpose(const Matrix& a);

/// Transpose combined with entry-wise x -> x^q; the Hermitian adjoint of a
/// matrix over GF(q^2).  Throws NotAQuadraticExtension unless |F| == q^2.
Matrix mat_conj_transpose(const Matrix& a, std::uint64_t q);

/**
 * In-place reduction to reduced row echelon form.  Returns the rank; when
 * `pivots` is non-null it receives the pivot column of each nonzero row.
 */
std::size_t rref_in_place(Matrix& a, std::vector<std::size_t>* pivots = nullptr);

std::size_t mat_rank(Matrix a);

/**
 * Basis of the right null space { v : A v^T = 0 }, one vector per row.
 * The result has cols(A) columns and cols(A) - rank(A) rows.
 */
Matrix null_space(const Matrix& a);

/// Determinant of a square matrix by Gaussian elimination.
std::uint64_t mat_det(Matrix a);

bool mat_is_zero(const Matrix& a);

}  // namespace eaqmds
