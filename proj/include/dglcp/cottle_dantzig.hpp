#pragma once

// Cottle-Dantzig principal pivoting with a configurable index ordering.
//
// One major cycle per ordering index whose basic pair-variable is negative:
// the complement is driven in, variables already nonnegative block at zero
// and are exchanged for their complements, and the cycle closes with the
// principal exchange when the distinguished variable itself reaches zero.
// The driving variable's current value is tracked as a full lex vector
// (theta), which plays the role usually given to epsilon perturbation.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dglcp/lcp.hpp"
#include "dglcp/rational.hpp"
#include "dglcp/rng.hpp"
#include "dglcp/tableau.hpp"
#include "dglcp/lemke.hpp"

namespace dglcp {

struct IndexOrdering {
    enum class Kind { identity, explicit_order, random };
    Kind kind = Kind::identity;
    std::vector<int> order;  // explicit_order; 0-based LCP indices
    std::uint64_t seed = 0;  // random

    static IndexOrdering identity() { return {}; }
    static IndexOrdering explicit_perm(std::vector<int> p) {
        IndexOrdering o;
        o.kind = Kind::explicit_order;
        o.order = std::move(p);
        return o;
    }
    static IndexOrdering random(std::uint64_t seed) {
        IndexOrdering o;
        o.kind = Kind::random;
        o.seed = seed;
        return o;
    }
};

inline void require_permutation(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n)
        throw input_error("ordering has wrong length");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw input_error("ordering is not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

inline std::vector<int> realize_ordering(const IndexOrdering& o, int n) {
    if (n < 1) throw input_error("ordering: n must be >= 1");
    switch (o.kind) {
        case IndexOrdering::Kind::identity: {
            std::vector<int> p(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
            return p;
        }
        case IndexOrdering::Kind::explicit_order:
            require_permutation(o.order, n);
            return o.order;
        case IndexOrdering::Kind::random: {
            std::vector<int> p(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
            SplitMix64 rng(o.seed);
            rng.shuffle(p);
            return p;
        }
    }
    throw input_error("ordering: bad kind");
}

struct CDResult {
    Outcome outcome = Outcome::solved;
    std::optional<LCPSolution> solution;
    PivotTrace trace;
    std::string diagnostic;  // set when outcome == failed
};

namespace detail {
inline void assert_complementary(const Tableau& t) {
    for (int i = 0; i < t.n; ++i)
        if (t.basic(w_label(i)) == t.basic(z_label(t.n, i)))
            throw invariant_error("complementary-basis invariant violated");
}
}  // namespace detail

// on_pivot matches lemke_solve's hook: called after every pivot.
inline CDResult cottle_dantzig_solve(
    const LCPInstance& lcp, const std::vector<int>& order,
    std::uint64_t budget = 0,
    const std::function<void(const Tableau&)>& on_pivot = {}) {
    require_well_formed(lcp);
    int n = lcp.dim();
    require_permutation(order, n);
    if (budget == 0) budget = default_pivot_budget(n);

    CDResult res;
    bool trivial = true;
    for (const rational& qi : lcp.q)
        if (qi < 0) { trivial = false; break; }
    if (trivial) {
        res.solution = LCPSolution{lcp.q, rvec(static_cast<std::size_t>(n), rational(0))};
        return res;
    }

    Tableau t = init_tableau(lcp, nullptr);
    std::size_t n1 = static_cast<std::size_t>(n + 1);

    for (int k : order) {
        int bk = t.basic(w_label(k)) ? w_label(k) : z_label(n, k);
        if (!t.basic(bk)) throw invariant_error("pair completely nonbasic at cycle start");
        int rho = t.row_of[static_cast<std::size_t>(bk)];
        if (lex_sign(t.R[static_cast<std::size_t>(rho)]) >= 0) continue;

        ++res.trace.major_cycles;
        rvec theta(n1, rational(0));  // driving variable's current lex value
        int driving = complement(bk, n);

        for (;;) {
            if (res.trace.events.size() >= budget) {
                res.outcome = res.trace.outcome = Outcome::budget_exceeded;
                res.diagnostic = "pivot budget exceeded in major cycle";
                return res;
            }
            const rvec& c = t.col[static_cast<std::size_t>(driving)];
            int best = -1;
            rvec best_num;
            rational best_den;
            auto consider = [&](int i, rvec num, rational den) {
                if (best < 0 || lex_cmp(num, den, best_num, best_den) < 0) {
                    best = i;
                    best_num = std::move(num);
                    best_den = std::move(den);
                }
            };
            for (int i = 0; i < n; ++i) {
                const rational& ci = c[static_cast<std::size_t>(i)];
                if (i == rho) {
                    // Distinguished row rises from negative; blocks at zero.
                    if (ci > 0) {
                        rvec num(n1);
                        for (std::size_t m = 0; m < n1; ++m)
                            num[m] = -t.R[static_cast<std::size_t>(i)][m];
                        consider(i, std::move(num), ci);
                    }
                } else if (ci < 0) {
                    // Decreasing row: only rows still nonnegative at the
                    // current driving value may block.
                    rvec eff(n1);
                    for (std::size_t m = 0; m < n1; ++m)
                        eff[m] = t.R[static_cast<std::size_t>(i)][m] + theta[m] * ci;
                    if (lex_sign(eff) >= 0)
                        consider(i, t.R[static_cast<std::size_t>(i)], -ci);
                }
            }
            if (best < 0) {
                res.outcome = res.trace.outcome = Outcome::failed;
                res.diagnostic =
                    "no blocking row while driving " + label_name(driving, n) +
                    " (input not a P-matrix, or solver bug)";
                return res;
            }
            for (std::size_t m = 0; m < n1; ++m) theta[m] = best_num[m] / best_den;
            if (best == rho) {
                int leaving = pivot(t, driving, rho);
                res.trace.events.push_back({driving, leaving});
                detail::assert_complementary(t);
                if (on_pivot) on_pivot(t);
                break;  // major cycle closed by the principal exchange
            }
            int blocker = t.basis[static_cast<std::size_t>(best)];
            int centering = complement(blocker, n);
            int leaving = pivot(t, centering, best);
            res.trace.events.push_back({centering, leaving});
            detail::assert_complementary(t);
            if (on_pivot) on_pivot(t);
        }
    }

    TableauPoint p = basic_point(t);
    res.outcome = res.trace.outcome = Outcome::solved;
    res.solution = LCPSolution{std::move(p.w), std::move(p.z)};
    return res;
}

}  // namespace dglcp
