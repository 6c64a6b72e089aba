#pragma once

// Binary discounted game -> LCP, and the inverse lift.
//
// For a binary game let A_e = I - beta P_e and r_e be the transition matrix
// and reward vector when every vertex plays its edge e (e = 0, 1), and let
// D = diag(+1 at Max vertices, -1 at Min vertices). With
//
//   M = D A0 A1^{-1} D,   q = D (A0 A1^{-1} r1 - r0),
//
// a complementary (w, z) recovers the game values as v = A1^{-1} (r1 + D z).
// Row i reads: w_i is the signed slack of edge 0 at vertex i, z_i the signed
// slack of edge 1; w_i > 0 forces edge 1 optimal, z_i > 0 forces edge 0.
// For discounted games (beta < 1) M comes out a P-matrix on every instance
// we have tested, which the test suite checks exhaustively at small n.

#include <string>
#include <vector>

#include "dglcp/game.hpp"
#include "dglcp/lcp.hpp"
#include "dglcp/matrix.hpp"
#include "dglcp/rational.hpp"

namespace dglcp {

struct LiftMapEntry {
    int vertex;
    int choice_when_w_positive;  // edge picked when w_vertex > 0
    int choice_when_z_positive;  // edge picked when z_vertex > 0
};

struct ReductionCertificate {
    DiscountedGame game;
    LCPInstance lcp;
    std::vector<LiftMapEntry> lift_map;
};

inline ReductionCertificate reduce_to_lcp(const DiscountedGame& g) {
    require_valid(g);
    int n = g.size();
    std::string bad;
    for (int u = 0; u < n; ++u)
        if (g.edges[u].size() != 2) {
            if (!bad.empty()) bad += ", ";
            bad += "v" + std::to_string(u) + " has out-degree " +
                   std::to_string(g.edges[u].size());
        }
    if (!bad.empty())
        throw input_error("reduction needs a binary game: " + bad);

    rmat A0(n, rvec(n, rational(0))), A1(n, rvec(n, rational(0)));
    rvec r0(n), r1(n);
    for (int u = 0; u < n; ++u) {
        const Edge& e0 = g.edges[u][0];
        const Edge& e1 = g.edges[u][1];
        A0[u][u] += 1;
        A0[u][e0.to] -= g.discount;
        A1[u][u] += 1;
        A1[u][e1.to] -= g.discount;
        r0[u] = e0.reward;
        r1[u] = e1.reward;
    }

    // K = A0 A1^{-1}, row by row: solve A1^T X = A0^T, then row i of K is
    // column i of X.
    rmat A1T(n, rvec(n));
    std::vector<rvec> a0_rows(n, rvec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            A1T[i][j] = A1[j][i];
            a0_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = A0[i][j];
        }
    std::vector<rvec> k_rows = solve_columns(A1T, a0_rows);

    auto sgn = [&](int u) { return g.owner[u] == Player::Max ? rational(1) : rational(-1); };
    LCPInstance lcp;
    lcp.M.assign(n, rvec(n));
    lcp.q.assign(n, rational(0));
    for (int i = 0; i < n; ++i) {
        rational kr1(0);
        for (int j = 0; j < n; ++j) {
            lcp.M[i][j] = sgn(i) * k_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * sgn(j);
            kr1 += k_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * r1[j];
        }
        lcp.q[i] = sgn(i) * (kr1 - r0[i]);
    }

    ReductionCertificate cert;
    cert.game = g;
    cert.lcp = std::move(lcp);
    cert.lift_map.reserve(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        cert.lift_map.push_back({u, /*w>0*/ 1, /*z>0*/ 0});
    return cert;
}

struct LiftedSolution {
    ValueVector values;
    Strategy max_strategy;
    Strategy min_strategy;
};

// LCP solution -> game values and optimal strategies. The Bellman check is
// a full certificate; failing it means the reduction or solver is broken,
// so it throws rather than returning anything.
inline LiftedSolution lift_solution(const ReductionCertificate& cert,
                                    const LCPSolution& sol) {
    auto bad = check_solution(cert.lcp, sol);
    if (!bad.empty())
        throw input_error("lift: solution fails check_solution: " + bad.front());
    const DiscountedGame& g = cert.game;
    int n = g.size();

    rmat A1(n, rvec(n, rational(0)));
    rvec rhs(n);
    for (int u = 0; u < n; ++u) {
        const Edge& e1 = g.edges[u][1];
        A1[u][u] += 1;
        A1[u][e1.to] -= g.discount;
        rational s = g.owner[u] == Player::Max ? sol.z[u] : -sol.z[u];
        rhs[u] = e1.reward + s;
    }
    ValueVector v = solve_linear(A1, rhs);

    if (bellman_step(g, v) != v)
        throw invariant_error("lift: values fail Bellman optimality "
                              "(reduction transcription bug)");

    LiftedSolution out;
    out.values = v;
    out.max_strategy.choice.assign(static_cast<std::size_t>(n), -1);
    out.min_strategy.choice.assign(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < n; ++u) {
        int pick = -1;
        for (int e = 0; e < 2; ++e) {
            const Edge& ed = g.edges[u][static_cast<std::size_t>(e)];
            if (ed.reward + g.discount * v[ed.to] == v[u]) { pick = e; break; }
        }
        if (pick < 0) throw invariant_error("lift: no optimal edge at vertex");
        // Cross-check against the stored lift-map.
        const LiftMapEntry& lm = cert.lift_map[static_cast<std::size_t>(u)];
        if (sol.w[u] > 0 && pick != lm.choice_when_w_positive)
            throw invariant_error("lift drifted from certificate (w side)");
        if (sol.z[u] > 0 && pick != lm.choice_when_z_positive)
            throw invariant_error("lift drifted from certificate (z side)");
        (g.owner[u] == Player::Max ? out.max_strategy : out.min_strategy)
            .choice[static_cast<std::size_t>(u)] = pick;
    }
    return out;
}

// Vertices where both edges attain the optimal value, i.e. where the z/w
// encoding is degenerate.
inline std::vector<int> strategy_tie_audit(const ReductionCertificate& cert,
                                           const LCPSolution& sol) {
    auto bad = check_solution(cert.lcp, sol);
    if (!bad.empty())
        throw input_error("tie audit: solution fails check_solution");
    std::vector<int> tied;
    for (int u = 0; u < cert.game.size(); ++u)
        if (sol.w[u] == 0 && sol.z[u] == 0) tied.push_back(u);
    return tied;
}

}  // namespace dglcp
