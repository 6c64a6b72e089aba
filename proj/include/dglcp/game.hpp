#pragma once

// Discounted game model plus the oracles every solver result is checked
// against: exact profile evaluation, brute-force equilibrium search and
// value iteration with a certified error bound.
//
// Values follow v(u) = r(edge) + beta * v(target), unnormalized.

#include <cstdint>
#include <string>
#include <vector>

#include "dglcp/matrix.hpp"
#include "dglcp/rational.hpp"

namespace dglcp {

enum class Player { Max, Min };

struct Edge {
    int to;
    rational reward;
};

struct DiscountedGame {
    rational discount;
    std::vector<Player> owner;               // per vertex
    std::vector<std::vector<Edge>> edges;    // per vertex, ordered; index = action id

    int size() const { return static_cast<int>(owner.size()); }
};

// Per-vertex edge index; entries are meaningful only at vertices owned by
// the strategy's player (-1 elsewhere by convention).
struct Strategy {
    std::vector<int> choice;
};

using ValueVector = rvec;

inline std::vector<std::string> validate_game(const DiscountedGame& g) {
    std::vector<std::string> bad;
    int n = g.size();
    if (g.edges.size() != g.owner.size())
        bad.push_back("edge table size does not match vertex count");
    if (g.discount < 0) bad.push_back("discount negative");
    if (g.discount >= 1) bad.push_back("discount not < 1");
    for (int u = 0; u < n && u < static_cast<int>(g.edges.size()); ++u) {
        if (g.edges[u].empty())
            bad.push_back("out-degree 0 at v" + std::to_string(u));
        for (std::size_t e = 0; e < g.edges[u].size(); ++e) {
            int t = g.edges[u][e].to;
            if (t < 0 || t >= n)
                bad.push_back("edge target out of range at v" +
                              std::to_string(u) + " edge " + std::to_string(e));
        }
    }
    return bad;
}

inline void require_valid(const DiscountedGame& g) {
    auto bad = validate_game(g);
    if (!bad.empty()) throw input_error("invalid game: " + bad.front());
}

namespace detail {
// Chosen edge index at u under the pair of strategies.
inline int chosen(const DiscountedGame& g, const Strategy& smax,
                  const Strategy& smin, int u) {
    const Strategy& s = (g.owner[u] == Player::Max) ? smax : smin;
    if (u >= static_cast<int>(s.choice.size()))
        throw input_error("strategy does not cover v" + std::to_string(u));
    int c = s.choice[u];
    if (c < 0 || c >= static_cast<int>(g.edges[u].size()))
        throw input_error("strategy choice out of range at v" + std::to_string(u));
    return c;
}
}  // namespace detail

// Exact solve of (I - beta P) v = r for the chosen edges.
inline ValueVector evaluate_choices(const DiscountedGame& g,
                                    const std::vector<int>& choice) {
    int n = g.size();
    rmat A(n, rvec(n, rational(0)));
    rvec r(n);
    for (int u = 0; u < n; ++u) {
        const Edge& e = g.edges[u][static_cast<std::size_t>(choice[u])];
        A[u][u] += 1;
        A[u][e.to] -= g.discount;
        r[u] = e.reward;
    }
    return solve_linear(A, r);
}

inline ValueVector evaluate_profile(const DiscountedGame& g,
                                    const Strategy& smax, const Strategy& smin) {
    require_valid(g);
    int n = g.size();
    std::vector<int> choice(n);
    for (int u = 0; u < n; ++u) choice[u] = detail::chosen(g, smax, smin, u);
    return evaluate_choices(g, choice);
}

// One application of the Bellman operator.
inline ValueVector bellman_step(const DiscountedGame& g, const ValueVector& v) {
    int n = g.size();
    ValueVector out(n);
    for (int u = 0; u < n; ++u) {
        rational best;
        bool first = true;
        for (const Edge& e : g.edges[u]) {
            rational val = e.reward + g.discount * v[e.to];
            if (first) {
                best = val;
                first = false;
            } else if (g.owner[u] == Player::Max ? val > best : val < best) {
                best = val;
            }
        }
        out[u] = best;
    }
    return out;
}

struct Equilibrium {
    ValueVector values;
    Strategy max_strategy;
    Strategy min_strategy;
};

namespace detail {
// Lowest-index optimal action at each vertex, split by owner.
inline Equilibrium normalized_equilibrium(const DiscountedGame& g,
                                          const ValueVector& v) {
    int n = g.size();
    Equilibrium eq;
    eq.values = v;
    eq.max_strategy.choice.assign(n, -1);
    eq.min_strategy.choice.assign(n, -1);
    for (int u = 0; u < n; ++u) {
        int pick = -1;
        for (std::size_t e = 0; e < g.edges[u].size(); ++e) {
            const Edge& ed = g.edges[u][e];
            if (ed.reward + g.discount * v[ed.to] == v[u]) {
                pick = static_cast<int>(e);
                break;
            }
        }
        if (pick < 0) throw invariant_error("no optimal edge found at vertex");
        (g.owner[u] == Player::Max ? eq.max_strategy : eq.min_strategy)
            .choice[u] = pick;
    }
    return eq;
}
}  // namespace detail

// Enumerates every pure positional profile until one satisfies the Bellman
// optimality equations exactly. Discounted games always have one.
inline Equilibrium brute_force_equilibrium(const DiscountedGame& g,
                                           std::uint64_t profile_cap = 1ULL << 20) {
    require_valid(g);
    int n = g.size();
    std::uint64_t total = 1;
    for (int u = 0; u < n; ++u) {
        std::uint64_t deg = g.edges[u].size();
        if (total > profile_cap / deg)
            throw input_error("profile space exceeds cap");
        total *= deg;
    }
    std::vector<int> choice(n, 0);
    for (;;) {
        ValueVector v = evaluate_choices(g, choice);
        if (bellman_step(g, v) == v) return detail::normalized_equilibrium(g, v);
        int u = 0;
        while (u < n) {
            if (++choice[u] < static_cast<int>(g.edges[u].size())) break;
            choice[u] = 0;
            ++u;
        }
        if (u == n) break;
    }
    throw invariant_error("no equilibrium among pure profiles");
}

struct IterationResult {
    ValueVector values;
    rational bound;  // |v_k(u) - v*(u)| <= bound for every u
};

inline IterationResult value_iteration(const DiscountedGame& g, int iterations) {
    require_valid(g);
    if (iterations < 1) throw input_error("value_iteration needs iterations >= 1");
    int n = g.size();
    ValueVector v(n, rational(0));
    for (int k = 0; k < iterations; ++k) v = bellman_step(g, v);
    rational R(0);
    for (int u = 0; u < n; ++u)
        for (const Edge& e : g.edges[u])
            if (abs(e.reward) > R) R = abs(e.reward);
    rational bound = R / (1 - g.discount);
    for (int k = 0; k < iterations; ++k) bound *= g.discount;
    return {v, bound};
}

}  // namespace dglcp
