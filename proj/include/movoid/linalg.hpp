#pragma once

// Dense matrices and row reduction over GF(2^e). Everything is exact and
// value-semantic; sizes here are tiny (at most a few hundred rows).

#include <cstdint>
#include <vector>

#include "movoid/gf.hpp"

namespace movoid {

using Vec = std::vector<uint32_t>;

struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    Vec row(size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline Matrix mat_mul(const Field& f, const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) throw usage_error("matrix dimension mismatch");
    Matrix C(A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            uint32_t v = A.at(i, k);
            if (!v) continue;
            for (size_t j = 0; j < B.cols; ++j)
                if (B.at(k, j)) C.at(i, j) ^= f.mul(v, B.at(k, j));
        }
    return C;
}

inline Matrix transpose(const Matrix& A) {
    Matrix T(A.cols, A.rows);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

inline Vec mat_vec(const Field& f, const Matrix& A, const Vec& x) {
    if (A.cols != x.size()) throw usage_error("matrix/vector dimension mismatch");
    Vec y(A.rows, 0);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j)
            if (A.at(i, j) && x[j]) y[i] ^= f.mul(A.at(i, j), x[j]);
    return y;
}

// In-place reduced row echelon form; returns the rank.
inline size_t rref(const Field& f, Matrix& M) {
    size_t rank = 0;
    for (size_t col = 0; col < M.cols && rank < M.rows; ++col) {
        size_t piv = rank;
        while (piv < M.rows && M.at(piv, col) == 0) ++piv;
        if (piv == M.rows) continue;
        for (size_t j = 0; j < M.cols; ++j) std::swap(M.at(rank, j), M.at(piv, j));
        uint32_t iv = f.inv(M.at(rank, col));
        for (size_t j = 0; j < M.cols; ++j) M.at(rank, j) = f.mul(iv, M.at(rank, j));
        for (size_t r = 0; r < M.rows; ++r) {
            if (r == rank || M.at(r, col) == 0) continue;
            uint32_t c = M.at(r, col);
            for (size_t j = 0; j < M.cols; ++j) M.at(r, j) ^= f.mul(c, M.at(rank, j));
        }
        ++rank;
    }
    return rank;
}

inline size_t rank_of(const Field& f, Matrix M) { return rref(f, M); }

inline Matrix inverse(const Field& f, const Matrix& A) {
    if (A.rows != A.cols) throw usage_error("inverse of non-square matrix");
    size_t n = A.rows;
    Matrix M(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, n + i) = 1;
    }
    if (rref(f, M) != n) throw domain_error("matrix is singular");
    Matrix R(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) R.at(i, j) = M.at(i, n + j);
    return R;
}

// Basis of {x : Mx = 0}, rows of the result.
inline Matrix nullspace(const Field& f, Matrix M) {
    size_t n = M.cols;
    size_t rank = rref(f, M);
    // leading column of each nonzero row is a pivot column
    std::vector<size_t> pivot_of_col(n, SIZE_MAX);
    for (size_t r = 0; r < rank; ++r)
        for (size_t c = 0; c < n; ++c)
            if (M.at(r, c) != 0) {
                pivot_of_col[c] = r;
                break;
            }
    Matrix N(n - rank, n);
    size_t k = 0;
    for (size_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] != SIZE_MAX) continue;
        N.at(k, c) = 1;
        for (size_t cc = 0; cc < n; ++cc)
            if (pivot_of_col[cc] != SIZE_MAX) N.at(k, cc) = M.at(pivot_of_col[cc], c);
        ++k;
    }
    return N;
}

} // namespace movoid
