#include "eaqmds/linalg.hpp"

#include <algorithm>

namespace eaqmds {

Matrix mat_zero(const FieldDescriptor* f, std::size_t rows, std::size_t cols) {
    if (!f) throw FieldMismatch("null field descriptor");
    return Matrix{f, rows, cols, std::vector<std::uint64_t>(rows * cols, 0)};
}

Matrix mat_identity(const FieldDescriptor* f, std::size_t n) {
    Matrix m = mat_zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (!a.field || a.field != b.field) throw FieldMismatch("matrices over different fields");
    if (a.cols != b.rows) throw FieldMismatch("inner matrix dimensions disagree");
    const auto* f = a.field;
    Matrix r = mat_zero(f, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const std::uint64_t aik = a.at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                const std::uint64_t bkj = b.at(k, j);
                if (!bkj) continue;
                r.at(i, j) = f->add(r.at(i, j), f->mul(aik, bkj));
            }
        }
    }
    return r;
}

Matrix mat_transpose(const Matrix& a) {
    Matrix r = mat_zero(a.field, a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    }
    return r;
}

Matrix mat_conj_transpose(const Matrix& a, std::uint64_t q) {
    if (!a.field) throw FieldMismatch("null field descriptor");
    if (q < 2 || q >= (std::uint64_t(1) << 32) || q * q != a.field->order()) {
        throw NotAQuadraticExtension("matrix field is not a quadratic extension of GF(q)");
    }
    Matrix r = mat_zero(a.field, a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            r.at(j, i) = a.field->pow(a.at(i, j), q);
        }
    }
    return r;
}

std::size_t rref_in_place(Matrix& a, std::vector<std::size_t>* pivots) {
    const auto* f = a.field;
    if (pivots) pivots->clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t piv = row;
        while (piv < a.rows && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(row, j));
        }
        const std::uint64_t inv = f->inv(a.at(row, col));
        for (std::size_t j = col; j < a.cols; ++j) a.at(row, j) = f->mul(a.at(row, j), inv);
        for (std::size_t r = 0; r < a.rows; ++r) {
            if (r == row) continue;
            const std::uint64_t c = a.at(r, col);
            if (!c) continue;
            for (std::size_t j = col; j < a.cols; ++j) {
                a.at(r, j) = f->sub(a.at(r, j), f->mul(c, a.at(row, j)));
            }
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return row;
}

std::size_t mat_rank(Matrix a) { return rref_in_place(a); }

Matrix null_space(const Matrix& a) {
    Matrix r = a;
    std::vector<std::size_t> pivots;
    const std::size_t rank = rref_in_place(r, &pivots);
    const auto* f = a.field;

    std::vector<bool> is_pivot(a.cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    Matrix n = mat_zero(f, a.cols - rank, a.cols);
    std::size_t out = 0;
    for (std::size_t fc = 0; fc < a.cols; ++fc) {
        if (is_pivot[fc]) continue;
        n.at(out, fc) = 1;
        for (std::size_t i = 0; i < rank; ++i) {
            n.at(out, pivots[i]) = f->neg(r.at(i, fc));
        }
        ++out;
    }
    return n;
}

std::uint64_t mat_det(Matrix a) {
    if (a.rows != a.cols) throw FieldMismatch("determinant of a non-square matrix");
    const auto* f = a.field;
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < a.cols; ++col) {
        std::size_t piv = col;
        while (piv < a.rows && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(col, j));
            det = f->neg(det);
        }
        det = f->mul(det, a.at(col, col));
        const std::uint64_t inv = f->inv(a.at(col, col));
        for (std::size_t r = col + 1; r < a.rows; ++r) {
            const std::uint64_t c = a.at(r, col);
            if (!c) continue;
            const std::uint64_t scale = f->mul(c, inv);
            for (std::size_t j = col; j < a.cols; ++j) {
                a.at(r, j) = f->sub(a.at(r, j), f->mul(scale, a.at(col, j)));
            }
        }
    }
    return det;
}

bool mat_is_zero(const Matrix& a) {
    return std::all_of(a.data.begin(), a.data.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace eaqmds
