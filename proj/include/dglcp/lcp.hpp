#pragma once

// LCP data model and the oracles used to cross-check solver output:
// exact solution checking, principal-minor P-matrix tests and brute-force
// enumeration of complementary bases.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dglcp/matrix.hpp"
#include "dglcp/rational.hpp"

namespace dglcp {

struct LCPInstance {
    rmat M;
    rvec q;

    int dim() const { return static_cast<int>(q.size()); }
};

struct LCPSolution {
    rvec w;
    rvec z;
};

inline void require_well_formed(const LCPInstance& lcp) {
    std::size_t n = lcp.q.size();
    if (n == 0) throw input_error("empty LCP");
    if (lcp.M.size() != n) throw input_error("M row count != dim(q)");
    for (const rvec& row : lcp.M)
        if (row.size() != n) throw input_error("M not square");
}

// Empty result means the solution is exact. Violations carry the row.
inline std::vector<std::string> check_solution(const LCPInstance& lcp,
                                               const LCPSolution& sol) {
    require_well_formed(lcp);
    std::size_t n = lcp.q.size();
    if (sol.w.size() != n || sol.z.size() != n)
        throw input_error("solution dimension mismatch");
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < n; ++i) {
        rational lhs = lcp.q[i];
        for (std::size_t j = 0; j < n; ++j)
            if (lcp.M[i][j] != 0) lhs += lcp.M[i][j] * sol.z[j];
        std::string row = std::to_string(i + 1);
        if (sol.w[i] != lhs)
            bad.push_back("row " + row + ": w != q + Mz");
        if (sol.w[i] < 0) bad.push_back("row " + row + ": w negative");
        if (sol.z[i] < 0) bad.push_back("row " + row + ": z negative");
        if (sol.w[i] * sol.z[i] != 0)
            bad.push_back("complementarity: w" + row + "z" + row + " = " +
                          format_rational(sol.w[i] * sol.z[i]) + " != 0");
    }
    return bad;
}

namespace detail {
inline rmat principal_submatrix(const rmat& M, const std::vector<int>& idx) {
    rmat sub(idx.size(), rvec(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            sub[a][b] = M[static_cast<std::size_t>(idx[a])]
                         [static_cast<std::size_t>(idx[b])];
    return sub;
}

// Determinant by permutation expansion, n! terms. Only for tiny n; exists
// to cross-check the elimination-based determinant with independent code.
inline rational det_permutation_expansion(const rmat& A) {
    std::size_t n = A.size();
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    rational total(0);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        rational term(1);
        for (std::size_t i = 0; i < n; ++i)
            term *= A[i][static_cast<std::size_t>(perm[i])];
        total += (inversions % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}
}  // namespace detail

// Every principal minor strictly positive, tested exhaustively (2^n of them).
inline bool is_p_matrix(const rmat& M, int cap = 14) {
    int n = static_cast<int>(M.size());
    if (n > cap) throw input_error("is_p_matrix: dimension above cap");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) idx.push_back(i);
        if (det(detail::principal_submatrix(M, idx)) <= 0) return false;
    }
    return true;
}

// Same test with the independent slow determinant. Keep n <= 5.
inline bool is_p_matrix_slow(const rmat& M) {
    int n = static_cast<int>(M.size());
    if (n > 7) throw input_error("is_p_matrix_slow: too large");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) idx.push_back(i);
        if (detail::det_permutation_expansion(
                detail::principal_submatrix(M, idx)) <= 0)
            return false;
    }
    return true;
}

struct ComplementaryBasis {
    std::uint32_t z_mask;  // bit i set: z_i basic, else w_i basic
    LCPSolution sol;
};

// All feasible complementary bases, by trying every w/z split. A P-matrix
// instance has exactly one unless the solution is degenerate.
inline std::vector<ComplementaryBasis> enumerate_complementary(
    const LCPInstance& lcp, int cap = 20) {
    require_well_formed(lcp);
    int n = lcp.dim();
    if (n > cap) throw input_error("enumerate_complementary: dimension above cap");
    std::vector<ComplementaryBasis> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        rmat B(n, rvec(n, rational(0)));
        for (int j = 0; j < n; ++j) {
            if (mask >> j & 1)
                for (int i = 0; i < n; ++i) B[i][j] = -lcp.M[i][j];
            else
                B[j][j] = 1;
        }
        rvec x;
        try {
            x = solve_linear(B, lcp.q);
        } catch (const singular_matrix_error&) {
            continue;
        }
        bool feasible = true;
        for (const rational& v : x)
            if (v < 0) { feasible = false; break; }
        if (!feasible) continue;
        LCPSolution sol{rvec(n, rational(0)), rvec(n, rational(0))};
        for (int i = 0; i < n; ++i)
            (mask >> i & 1 ? sol.z : sol.w)[i] = x[static_cast<std::size_t>(i)];
        out.push_back({mask, sol});
    }
    return out;
}

}  // namespace dglcp
