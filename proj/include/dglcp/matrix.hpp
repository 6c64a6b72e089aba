#pragma once

// Small dense exact linear algebra. Everything is O(n^3) Gauss-Jordan with
// the first nonzero entry as pivot; with exact rationals there is no
// numerical reason to search for a large pivot and the scan order keeps
// results deterministic.

#include <cstddef>
#include <vector>

#include "dglcp/rational.hpp"

namespace dglcp {

using rvec = std::vector<rational>;
using rmat = std::vector<rvec>;

inline rmat identity_matrix(std::size_t n) {
    rmat I(n, rvec(n, rational(0)));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

inline rvec mat_vec(const rmat& A, const rvec& x) {
    rvec out(A.size(), rational(0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (A[i][j] != 0) out[i] += A[i][j] * x[j];
    return out;
}

inline rmat mat_mul(const rmat& A, const rmat& B) {
    std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    rmat C(n, rvec(m, rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (A[i][t] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    if (B[t][j] != 0) C[i][j] += A[i][t] * B[t][j];
    return C;
}

struct singular_matrix_error : invariant_error {
    singular_matrix_error() : invariant_error("singular linear system") {}
};

// Solve A X = B for several right-hand sides given as columns.
inline std::vector<rvec> solve_columns(const rmat& A,
                                       const std::vector<rvec>& b_cols) {
    std::size_t n = A.size();
    std::size_t w = n + b_cols.size();
    rmat m(n, rvec(w, rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = A[i][j];
        for (std::size_t k = 0; k < b_cols.size(); ++k)
            m[i][n + k] = b_cols[k][i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw singular_matrix_error();
        if (p != c) std::swap(m[p], m[c]);
        rational pv = m[c][c];
        for (std::size_t j = c; j < w; ++j) m[c][j] /= pv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            rational f = m[r][c];
            for (std::size_t j = c; j < w; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<rvec> out(b_cols.size(), rvec(n));
    for (std::size_t k = 0; k < b_cols.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) out[k][i] = m[i][n + k];
    return out;
}

inline rvec solve_linear(const rmat& A, const rvec& b) {
    return solve_columns(A, {b})[0];
}

inline rational det(const rmat& A) {
    std::size_t n = A.size();
    rmat m = A;
    rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        rational pv = m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            rational f = m[r][c] / pv;
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return d;
}

}  // namespace dglcp
