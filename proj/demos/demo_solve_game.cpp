// Builds a small discounted game in code, reduces it to an LCP, and solves
// it with both pivoting methods. Prints the equilibrium and the pivot paths.

#include <iostream>

#include "dglcp/io.hpp"
#include "dglcp/reduction.hpp"

using namespace dglcp;

int main() {
    // Four vertices, alternating owners, two outgoing edges each (the
    // reduction requires binary out-degree).
    DiscountedGame g;
    g.discount = rational(9, 10);
    g.owner = {Player::Max, Player::Min, Player::Max, Player::Min};
    g.edges = {
        {{1, rational(1)}, {2, rational(-2)}},
        {{2, rational(0)}, {3, rational(4)}},
        {{3, rational(3)}, {0, rational(0)}},
        {{0, rational(-1)}, {1, rational(2)}},
    };
    for (const std::string& msg : validate_game(g)) {
        std::cerr << "bad game: " << msg << "\n";
        return 1;
    }

    ReductionCertificate cert = reduce_to_lcp(g);
    int n = cert.lcp.dim();
    std::cout << "reduced to an LCP of dimension " << n << "\n\n";

    LemkeResult lr =
        lemke_solve(cert.lcp, realize_covering(CoveringVector::unit(), n));
    std::cout << "lemke (unit covering): " << outcome_name(lr.outcome) << " in "
              << lr.trace.pivot_count() << " pivots\n";
    for (const PivotEvent& e : lr.trace.events)
        std::cout << "  " << label_name(e.entering, n) << " in, "
                  << label_name(e.leaving, n) << " out\n";

    CDResult cr = cottle_dantzig_solve(
        cert.lcp, realize_ordering(IndexOrdering::identity(), n));
    std::cout << "\ncottle-dantzig (identity): " << outcome_name(cr.outcome)
              << " in " << cr.trace.pivot_count() << " pivots, "
              << cr.trace.major_cycles << " major cycles\n\n";

    LiftedSolution lift = lift_solution(cert, *lr.solution);
    std::vector<int> tied = strategy_tie_audit(cert, *lr.solution);
    for (int v = 0; v < n; ++v) {
        bool is_max = g.owner[static_cast<std::size_t>(v)] == Player::Max;
        const Strategy& s = is_max ? lift.max_strategy : lift.min_strategy;
        std::cout << "v" << v << " (" << (is_max ? "max" : "min")
                  << "): value " << format_rational(lift.values[v])
                  << ", plays edge " << s.choice[static_cast<std::size_t>(v)];
        for (int t : tied)
            if (t == v) std::cout << " [both edges optimal]";
        std::cout << "\n";
    }
    return 0;
}
