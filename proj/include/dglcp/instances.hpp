#pragma once

// Instance generators: the lower-bound families and random binary games.
//
// The lower-bound construction is a "notch tree".  Two base vertices give a
// constant reference and a descending rail.  A tall hump vertex A reads the
// rail and produces a value ramp; leaf gadgets cut a window-confined notch
// into copies of that ramp; a balanced merge tree over the leaves (siblings'
// windows interleaved by bit reversal) then doubles, per level, the number of
// times the top vertex switches its preferred edge as the homotopy parameter
// sweeps down.  Each switch costs the pivoting methods at least one step.
// All offsets are closed-form in exact arithmetic; the builder tracks vertex
// values as piecewise-linear functions of the parameter to place each merge
// threshold at half the amplitude of the first dive it sees.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "dglcp/cottle_dantzig.hpp"
#include "dglcp/game.hpp"
#include "dglcp/pwl.hpp"
#include "dglcp/rational.hpp"
#include "dglcp/rng.hpp"

namespace dglcp {

namespace detail {

class FamilyBuilder {
  public:
    rational beta, sigma, W;
    std::vector<PWL> values;
    std::vector<Player> owners;
    // per vertex: {(t0, r0), (t1, r1)}; edge 0 is the one Lemke's covering
    // bonus rides on during the sweep
    std::vector<std::array<std::pair<int, rational>, 2>> edge_spec;

    FamilyBuilder(const rational& beta_, const rational& sigma_, const rational& W_)
        : beta(beta_), sigma(sigma_), W(W_) {
        PWL vF = PWL::constant(rational(0));
        PWL vSmin({rational(0), sigma}, {-sigma / (1 - beta), rational(0)},
                  rational(0));
        values = {vF, vSmin};
        owners = {Player::Max, Player::Min};
        edge_spec.push_back({std::pair<int, rational>(0, rational(-1)),
                             std::pair<int, rational>(0, rational(0))});
        edge_spec.push_back({std::pair<int, rational>(1, -sigma),
                             std::pair<int, rational>(0, rational(0))});
    }

    // New vertex with e0 -> t0 (reward -delta), e1 -> t1 (reward 0).
    // Preference to play e1 is delta + t + beta(v_t1 - v_t0).
    int add(Player owner, int t1, int t0, const rational& delta) {
        PWL opt1 = values[t1].scale(beta);
        PWL opt0 = values[t0].scale(beta).add_linear(-delta, rational(-1));
        PWL v = owner == Player::Max ? pwl_max(opt1, opt0) : pwl_min(opt1, opt0);
        values.push_back(std::move(v));
        owners.push_back(owner);
        edge_spec.push_back({std::pair<int, rational>(t0, -delta),
                             std::pair<int, rational>(t1, rational(0))});
        return static_cast<int>(values.size()) - 1;
    }

    // MAX reader of the rail: v = max(0, -d - t + beta vSmin), with the
    // preference up-crossing at t = clip.
    int hump(const rational& clip) {
        rational vS = (clip - sigma) / (1 - beta);
        rational d = -clip + beta * vS;
        return add(Player::Max, 0, 1, d);
    }

    DiscountedGame to_game() const {
        DiscountedGame g;
        g.discount = beta;
        g.owner = owners;
        g.edges.resize(edge_spec.size());
        for (std::size_t u = 0; u < edge_spec.size(); ++u) {
            g.edges[u] = {Edge{edge_spec[u][0].first, edge_spec[u][0].second},
                          Edge{edge_spec[u][1].first, edge_spec[u][1].second}};
        }
        return g;
    }
};

inline int bitrev(int x, int bits) {
    int r = 0;
    for (int k = 0; k < bits; ++k) {
        r = (r << 1) | (x & 1);
        x >>= 1;
    }
    return r;
}

// Start position and depth of the first contiguous strong-negative run of
// pref0 at x >= lo.
inline std::pair<rational, rational> first_dive(const PWL& pref0,
                                                const rational& lo,
                                                const rational& thr = rational(2)) {
    std::size_t n = pref0.xs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (pref0.xs[i] >= lo && pref0.slope_at(i) <= -thr) {
            rational x0 = pref0.xs[i];
            rational y0 = pref0.ys[i];
            std::size_t j = i;
            while (j < n && pref0.slope_at(j) <= -thr) ++j;
            if (j >= n)
                throw invariant_error("family generator: dive runs off the tail");
            return {x0, y0 - pref0.ys[j]};
        }
    }
    throw invariant_error("family generator: no dive found");
}

// d: tree depth (2^d leaf positions); n_pop: populate only the first n_pop
// positions (pruned tree).
inline FamilyBuilder build_notch_tree(int d, const rational& beta,
                                      const rational& sigma, const rational& W,
                                      int n_pop) {
    FamilyBuilder b(beta, sigma, W);
    rational slope_E = (2 * beta - 1) / (1 - beta);
    rational h_A = sigma - W;
    int A = b.hump(h_A);

    int n_leaf = 1 << d;
    rational margin = W / 16;
    rational span = W - 2 * margin;
    rational S = span / n_leaf;  // window stride
    rational wid = S / 4;        // notch width

    // leaf windows in sweep order (left to right in t)
    std::vector<std::pair<rational, rational>> windows;
    windows.reserve(n_leaf);
    for (int i = 0; i < n_leaf; ++i) {
        rational L = h_A + margin + i * S;
        windows.emplace_back(L, L + wid);
    }

    // leaves by tree position p: window index = bitrev(p)
    std::vector<int> nodes;
    for (int p = 0; p < n_pop; ++p) {
        int i = d > 0 ? bitrev(p, d) : 0;
        const rational& L = windows[i].first;
        const rational& R = windows[i].second;
        int bi = b.hump(R);
        // N_i: MIN reads (A, b_i); on the A-ramp v_A - v_bi = slope_E*(t - h_A)
        rational delta = -(L + beta * slope_E * (L - h_A));
        int Ni = b.add(Player::Min, A, bi, delta);
        nodes.push_back(Ni);
    }

    // merge tree: enter each first dive at half its amplitude so crossings sit
    // mid-feature.  With a pruned population the last node of a level may lack
    // a sibling: pass it through.
    while (nodes.size() > 1) {
        std::vector<int> nxt;
        for (std::size_t j = 0; j < nodes.size(); j += 2) {
            if (j + 1 >= nodes.size()) {
                nxt.push_back(nodes[j]);
                continue;
            }
            int vL = nodes[j], vR = nodes[j + 1];
            PWL D = pwl_sub(b.values[vL], b.values[vR]);
            PWL pref0 = D.scale(beta).add_linear(rational(0), rational(1));
            auto [x0, H] = first_dive(pref0, h_A);
            rational delta = H / 2 - pref0(x0);
            nxt.push_back(b.add(Player::Max, vL, vR, delta));
        }
        nodes = std::move(nxt);
    }
    return b;
}

// Leaves to populate for family parameter n = 2..8.  Chosen so consecutive
// pivot counts grow by at least 1.5x while keeping dimensions small.
inline constexpr int kFamilyLeafTable[] = {1, 2, 4, 7, 12, 20, 33};

inline int family_leaf_count(int n) {
    if (n < 2 || n > 8)
        throw input_error("family parameter must be in [2, 8]");
    return kFamilyLeafTable[n - 2];
}

inline int family_depth(int leaves) {
    if (leaves <= 1) return 0;
    int d = 0;
    while ((1 << d) < leaves) ++d;
    return d < 1 ? 1 : d;
}

}  // namespace detail

// Lower-bound family for Lemke's method with the unit covering vector.
inline DiscountedGame gen_lemke_lower_bound(int n) {
    int leaves = detail::family_leaf_count(n);
    int d = detail::family_depth(leaves);
    rational beta(65535, 65536);
    rational W(1 << 18);
    rational sigma = W + 1;
    return detail::build_notch_tree(d, beta, sigma, W, leaves).to_game();
}

struct CDInstance {
    DiscountedGame game;
    IndexOrdering ordering;
};

// Lower-bound family for the Cottle-Dantzig method.  Same games; the
// adversarial part is the index ordering, which must process the tree
// top-down (reverse of construction order).
inline CDInstance gen_cd_lower_bound(int n) {
    CDInstance inst;
    inst.game = gen_lemke_lower_bound(n);
    std::vector<int> order(inst.game.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(order.size()) - 1 - static_cast<int>(i);
    inst.ordering = IndexOrdering::explicit_perm(order);
    return inst;
}

struct RandomGameParams {
    std::int64_t reward_lo = -10;
    std::int64_t reward_hi = 10;
    rational discount = rational(1, 2);
};

// Random binary game: each vertex gets a fair-coin owner, then two uniform
// targets and two uniform integer rewards.  Draw order is part of the
// deterministic contract: all owners first, then per vertex t0, r0, t1, r1.
inline DiscountedGame gen_random_binary_game(int n, std::uint64_t seed,
                                             const RandomGameParams& params = {}) {
    if (n < 1) throw input_error("game size must be positive");
    if (params.reward_lo > params.reward_hi)
        throw input_error("empty reward range");
    if (params.discount < 0 || params.discount >= 1)
        throw input_error("discount must lie in [0, 1)");
    SplitMix64 rng(seed);
    DiscountedGame g;
    g.discount = params.discount;
    g.owner.resize(n);
    for (int v = 0; v < n; ++v)
        g.owner[v] = rng.coin() ? Player::Max : Player::Min;
    g.edges.resize(n);
    for (int v = 0; v < n; ++v) {
        int t0 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        rational r0(rng.range(params.reward_lo, params.reward_hi));
        int t1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        rational r1(rng.range(params.reward_lo, params.reward_hi));
        g.edges[v] = {Edge{t0, r0}, Edge{t1, r1}};
    }
    return g;
}

}  // namespace dglcp
