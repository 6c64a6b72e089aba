#pragma once

// Shared dense pivoting engine. The tableau is kept in dictionary form:
// each basic variable is expressed as
//
//   basic_i = R[i][0] + sum over nonbasic labels l of col[l][i] * x_l
//
// R[i][1..n] is row i of the inverse basis matrix and doubles as the
// lexicographic key, so (R[i][0], R[i][1..n]) stays lex-positive after every
// pivot chosen by the lex ratio test. That is the entire anti-cycling story.
//
// Labels are small ints: w_i -> i, z_i -> n + i, z0 -> 2n.

#include <string>
#include <vector>

#include "dglcp/lcp.hpp"
#include "dglcp/matrix.hpp"
#include "dglcp/rational.hpp"

namespace dglcp {

inline int w_label(int i) { return i; }
inline int z_label(int n, int i) { return n + i; }
inline int z0_label(int n) { return 2 * n; }

inline bool is_w(int label, int n) { return label < n; }
inline bool is_z(int label, int n) { return label >= n && label < 2 * n; }
inline bool is_z0(int label, int n) { return label == 2 * n; }

inline int complement(int label, int n) {
    if (is_z0(label, n)) throw invariant_error("z0 has no complement");
    return label < n ? label + n : label - n;
}

// 1-based display names, "w3", "z1", "z0".
inline std::string label_name(int label, int n) {
    if (is_z0(label, n)) return "z0";
    if (is_w(label, n)) return "w" + std::to_string(label + 1);
    return "z" + std::to_string(label - n + 1);
}

struct Tableau {
    int n = 0;
    bool with_z0 = false;
    std::vector<rvec> col;   // per label, length n; meaningful iff nonbasic
    std::vector<rvec> R;     // n rows, length n+1: [rhs | lex key]
    std::vector<int> basis;  // row -> label
    std::vector<int> row_of; // label -> row, or -1 when nonbasic

    bool basic(int label) const { return row_of[static_cast<std::size_t>(label)] >= 0; }
};

inline Tableau init_tableau(const LCPInstance& lcp, const rvec* covering) {
    require_well_formed(lcp);
    int n = lcp.dim();
    if (covering) {
        if (static_cast<int>(covering->size()) != n)
            throw input_error("covering vector dimension mismatch");
        for (const rational& d : *covering)
            if (d <= 0) throw input_error("covering vector not strictly positive");
    }
    Tableau t;
    t.n = n;
    t.with_z0 = covering != nullptr;
    t.col.assign(static_cast<std::size_t>(2 * n + 1), rvec());
    t.R.assign(static_cast<std::size_t>(n), rvec(static_cast<std::size_t>(n + 1), rational(0)));
    t.basis.resize(static_cast<std::size_t>(n));
    t.row_of.assign(static_cast<std::size_t>(2 * n + 1), -1);
    for (int j = 0; j < n; ++j) {
        rvec c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = lcp.M[i][j];
        t.col[static_cast<std::size_t>(z_label(n, j))] = std::move(c);
    }
    if (covering) t.col[static_cast<std::size_t>(z0_label(n))] = *covering;
    for (int i = 0; i < n; ++i) {
        t.R[static_cast<std::size_t>(i)][0] = lcp.q[i];
        t.R[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
        t.basis[static_cast<std::size_t>(i)] = w_label(i);
        t.row_of[static_cast<std::size_t>(w_label(i))] = i;
    }
    return t;
}

inline int lex_sign(const rvec& v) {
    for (const rational& x : v) {
        if (x > 0) return 1;
        if (x < 0) return -1;
    }
    return 0;
}

// Compare a/da against b/db componentwise, da and db strictly positive.
inline int lex_cmp(const rvec& a, const rational& da,
                   const rvec& b, const rational& db) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        rational lhs = a[k] * db;
        rational rhs = b[k] * da;
        if (lhs != rhs) return lhs < rhs ? -1 : 1;
    }
    return 0;
}

// Exchange: `entering` becomes basic in `row`, the old basic label leaves.
inline int pivot(Tableau& t, int entering, int row) {
    std::size_t r = static_cast<std::size_t>(row);
    std::size_t ent = static_cast<std::size_t>(entering);
    if (t.basic(entering)) throw invariant_error("pivot: entering label is basic");
    const rvec& ce = t.col[ent];
    rational a = ce[r];
    if (a == 0) throw invariant_error("pivot: zero pivot element");
    int leaving = t.basis[r];
    std::size_t n1 = static_cast<std::size_t>(t.n + 1);

    // Row for the entering variable, solved out of row r.
    rvec newR(n1);
    for (std::size_t k = 0; k < n1; ++k) newR[k] = -t.R[r][k] / a;
    for (int i = 0; i < t.n; ++i) {
        if (i == row || ce[static_cast<std::size_t>(i)] == 0) continue;
        const rational& f = ce[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < n1; ++k)
            t.R[static_cast<std::size_t>(i)][k] += f * newR[k];
    }

    for (std::size_t l = 0; l < t.col.size(); ++l) {
        if (l == ent || t.col[l].empty() || t.basic(static_cast<int>(l))) continue;
        rvec& c = t.col[l];
        rational nl = -c[r] / a;
        if (nl != 0) {
            for (int i = 0; i < t.n; ++i) {
                if (i == row) continue;
                const rational& f = ce[static_cast<std::size_t>(i)];
                if (f != 0) c[static_cast<std::size_t>(i)] += f * nl;
            }
        }
        c[r] = nl;
    }

    rvec leave_col(static_cast<std::size_t>(t.n));
    rational inv = rational(1) / a;
    for (int i = 0; i < t.n; ++i)
        leave_col[static_cast<std::size_t>(i)] =
            (i == row) ? inv : ce[static_cast<std::size_t>(i)] * inv;

    t.R[r] = std::move(newR);
    t.col[ent].clear();
    t.col[static_cast<std::size_t>(leaving)] = std::move(leave_col);
    t.basis[r] = entering;
    t.row_of[ent] = row;
    t.row_of[static_cast<std::size_t>(leaving)] = -1;
    return leaving;
}

// Among rows where the basic value decreases as `entering` grows, pick the
// lex-min of (rhs, key) / rate. -1 when nothing blocks (a ray).
inline int lex_ratio_test(const Tableau& t, int entering,
                          const std::vector<int>* eligible = nullptr) {
    const rvec& c = t.col[static_cast<std::size_t>(entering)];
    if (c.empty()) throw invariant_error("lex_ratio_test: entering has no column");
    int best = -1;
    rational best_rate;
    auto consider = [&](int i) {
        rational rate = -c[static_cast<std::size_t>(i)];
        if (rate <= 0) return;
        if (best < 0 ||
            lex_cmp(t.R[static_cast<std::size_t>(i)], rate,
                    t.R[static_cast<std::size_t>(best)], best_rate) < 0) {
            best = i;
            best_rate = rate;
        }
    };
    if (eligible) {
        for (int i : *eligible) consider(i);
    } else {
        for (int i = 0; i < t.n; ++i) consider(i);
    }
    return best;
}

inline bool lex_all_positive(const Tableau& t) {
    for (const rvec& row : t.R)
        if (lex_sign(row) <= 0) return false;
    return true;
}

struct TableauPoint {
    rvec w, z;
    rational z0;
};

// Basic solution: nonbasics at zero, basics at their rhs.
inline TableauPoint basic_point(const Tableau& t) {
    TableauPoint p;
    p.w.assign(static_cast<std::size_t>(t.n), rational(0));
    p.z.assign(static_cast<std::size_t>(t.n), rational(0));
    p.z0 = 0;
    for (int i = 0; i < t.n; ++i) {
        int label = t.basis[static_cast<std::size_t>(i)];
        const rational& v = t.R[static_cast<std::size_t>(i)][0];
        if (is_z0(label, t.n)) p.z0 = v;
        else if (is_w(label, t.n)) p.w[static_cast<std::size_t>(label)] = v;
        else p.z[static_cast<std::size_t>(label - t.n)] = v;
    }
    return p;
}

}  // namespace dglcp
