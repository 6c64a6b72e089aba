#pragma once

// Lemke's complementary pivoting with a configurable covering vector.
//
// Path: z0 enters along the covering column, the leaving label's complement
// enters next, and so on until z0 leaves (solution) or no row blocks (ray).
// The lex ratio test makes every step deterministic, degenerate instances
// included.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dglcp/lcp.hpp"
#include "dglcp/rational.hpp"
#include "dglcp/rng.hpp"
#include "dglcp/tableau.hpp"

namespace dglcp {

enum class Outcome { solved, ray, budget_exceeded, failed };

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::solved: return "solved";
        case Outcome::ray: return "ray";
        case Outcome::budget_exceeded: return "budget-exceeded";
        case Outcome::failed: return "failed";
    }
    return "?";
}

struct PivotEvent {
    int entering;
    int leaving;
};

struct PivotTrace {
    std::vector<PivotEvent> events;
    std::uint64_t major_cycles = 0;  // Cottle-Dantzig only
    Outcome outcome = Outcome::solved;

    std::size_t pivot_count() const { return events.size(); }
};

// Abort guard: exponential in the dimension so the lower-bound families
// stay well inside it, saturated to keep the shift defined.
inline std::uint64_t default_pivot_budget(int n) {
    int e = n + 2;
    return e >= 62 ? (1ULL << 62) : (1ULL << e);
}

struct CoveringVector {
    enum class Kind { unit, explicit_vector, random };
    Kind kind = Kind::unit;
    rvec entries;              // explicit_vector
    std::uint64_t seed = 0;    // random
    std::int64_t max_entry = 1000;  // random: i.i.d. uniform over {1..max_entry}

    static CoveringVector unit() { return {}; }
    static CoveringVector explicit_vec(rvec v) {
        CoveringVector c;
        c.kind = Kind::explicit_vector;
        c.entries = std::move(v);
        return c;
    }
    static CoveringVector random(std::uint64_t seed, std::int64_t max_entry = 1000) {
        CoveringVector c;
        c.kind = Kind::random;
        c.seed = seed;
        c.max_entry = max_entry;
        return c;
    }
};

inline rvec realize_covering(const CoveringVector& c, int n) {
    if (n < 1) throw input_error("covering: n must be >= 1");
    switch (c.kind) {
        case CoveringVector::Kind::unit:
            return rvec(static_cast<std::size_t>(n), rational(1));
        case CoveringVector::Kind::explicit_vector: {
            if (static_cast<int>(c.entries.size()) != n)
                throw input_error("explicit covering has wrong dimension");
            for (const rational& x : c.entries)
                if (x <= 0)
                    throw input_error("explicit covering has non-positive entry");
            return c.entries;
        }
        case CoveringVector::Kind::random: {
            if (c.max_entry < 1) throw input_error("covering max_entry < 1");
            SplitMix64 rng(c.seed);
            rvec out(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                out[static_cast<std::size_t>(i)] =
                    rational(1 + rng.range(0, c.max_entry - 1));
            return out;
        }
    }
    throw input_error("covering: bad kind");
}

struct RayCertificate {
    // Point on the almost-complementary path plus the unbounded direction:
    // every point base + s * dir, s >= 0, stays feasible with w'z = 0
    // except for the one open pair.
    TableauPoint base;
    rvec w_dir, z_dir;
    rational z0_dir;
    int entering_label;
};

struct LemkeResult {
    Outcome outcome = Outcome::solved;
    std::optional<LCPSolution> solution;
    std::optional<RayCertificate> ray;
    PivotTrace trace;
};

namespace detail {
inline void assert_almost_complementary(const Tableau& t) {
    int open_pairs = 0;
    for (int i = 0; i < t.n; ++i)
        if (!t.basic(w_label(i)) && !t.basic(z_label(t.n, i))) ++open_pairs;
    if (open_pairs != 1 || !t.basic(z0_label(t.n)))
        throw invariant_error("almost-complementary invariant violated");
}
}  // namespace detail

// on_pivot, when given, runs after every pivot with the tableau state;
// used by tests to watch invariants from outside.
inline LemkeResult lemke_solve(
    const LCPInstance& lcp, const rvec& covering, std::uint64_t budget = 0,
    const std::function<void(const Tableau&)>& on_pivot = {}) {
    require_well_formed(lcp);
    int n = lcp.dim();
    if (static_cast<int>(covering.size()) != n)
        throw input_error("covering vector dimension mismatch");
    for (const rational& d : covering)
        if (d <= 0) throw input_error("covering vector not strictly positive");
    if (budget == 0) budget = default_pivot_budget(n);

    LemkeResult res;
    bool trivial = true;
    for (const rational& qi : lcp.q)
        if (qi < 0) { trivial = false; break; }
    if (trivial) {
        res.outcome = Outcome::solved;
        res.solution = LCPSolution{lcp.q, rvec(static_cast<std::size_t>(n), rational(0))};
        res.trace.outcome = Outcome::solved;
        return res;
    }

    Tableau t = init_tableau(lcp, &covering);

    // z0 enters; drop the w row that is lex-most negative per unit of d.
    int first = -1;
    for (int i = 0; i < n; ++i) {
        if (t.R[static_cast<std::size_t>(i)][0] >= 0) continue;
        if (first < 0 ||
            lex_cmp(t.R[static_cast<std::size_t>(i)], covering[static_cast<std::size_t>(i)],
                    t.R[static_cast<std::size_t>(first)], covering[static_cast<std::size_t>(first)]) < 0)
            first = i;
    }
    int leaving = pivot(t, z0_label(n), first);
    res.trace.events.push_back({z0_label(n), leaving});
    if (!lex_all_positive(t))
        throw invariant_error("lex positivity lost after initial pivot");
    detail::assert_almost_complementary(t);
    if (on_pivot) on_pivot(t);
    int entering = complement(leaving, n);

    for (;;) {
        if (res.trace.events.size() >= budget) {
            res.outcome = res.trace.outcome = Outcome::budget_exceeded;
            return res;
        }
        int row = lex_ratio_test(t, entering);
        if (row < 0) {
            RayCertificate ray;
            ray.base = basic_point(t);
            ray.w_dir.assign(static_cast<std::size_t>(n), rational(0));
            ray.z_dir.assign(static_cast<std::size_t>(n), rational(0));
            ray.z0_dir = 0;
            ray.entering_label = entering;
            const rvec& c = t.col[static_cast<std::size_t>(entering)];
            auto bump = [&](int label, const rational& amt) {
                if (is_z0(label, n)) ray.z0_dir += amt;
                else if (is_w(label, n)) ray.w_dir[static_cast<std::size_t>(label)] += amt;
                else ray.z_dir[static_cast<std::size_t>(label - n)] += amt;
            };
            bump(entering, rational(1));
            for (int i = 0; i < n; ++i)
                bump(t.basis[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
            res.outcome = res.trace.outcome = Outcome::ray;
            res.ray = std::move(ray);
            return res;
        }
        leaving = pivot(t, entering, row);
        res.trace.events.push_back({entering, leaving});
        if (!lex_all_positive(t))
            throw invariant_error("lex positivity lost after pivot");
        if (on_pivot) on_pivot(t);
        if (is_z0(leaving, n)) {
            TableauPoint p = basic_point(t);
            res.outcome = res.trace.outcome = Outcome::solved;
            res.solution = LCPSolution{std::move(p.w), std::move(p.z)};
            return res;
        }
        detail::assert_almost_complementary(t);
        entering = complement(leaving, n);
    }
}

}  // namespace dglcp
