#include <catch2/catch_amalgamated.hpp>

#include "dglcp/game.hpp"
#include "dglcp/instances.hpp"

using namespace dglcp;

namespace {

DiscountedGame self_loop(Player owner, rational r0, rational r1) {
    DiscountedGame g;
    g.discount = rational(1, 2);
    g.owner = {owner};
    g.edges = {{Edge{0, r0}, Edge{0, r1}}};
    return g;
}

DiscountedGame two_cycle() {
    DiscountedGame g;
    g.discount = rational(1, 2);
    g.owner = {Player::Max, Player::Min};
    g.edges = {{Edge{1, rational(1)}}, {Edge{0, rational(-1)}}};
    return g;
}

}  // namespace

TEST_CASE("validate_game catches structural problems") {
    DiscountedGame g = self_loop(Player::Max, rational(1), rational(3));
    CHECK(validate_game(g).empty());

    g.discount = rational(1);
    CHECK_FALSE(validate_game(g).empty());
    g.discount = rational(-1, 2);
    CHECK_FALSE(validate_game(g).empty());
    g.discount = rational(1, 2);

    g.edges[0].clear();
    auto errs = validate_game(g);
    REQUIRE_FALSE(errs.empty());
    CHECK(errs.front().find("v0") != std::string::npos);

    g.edges[0] = {Edge{2, rational(0)}};
    CHECK_FALSE(validate_game(g).empty());  // dangling target

    CHECK_THROWS_AS(require_valid(g), input_error);
}

TEST_CASE("evaluate_profile solves the induced linear system") {
    DiscountedGame g = two_cycle();
    Strategy smax{{0, -1}}, smin{{-1, 0}};
    ValueVector v = evaluate_profile(g, smax, smin);
    CHECK(v == ValueVector{rational(2, 3), rational(-2, 3)});
    // substituting back leaves zero residual
    CHECK(v[0] == rational(1) + g.discount * v[1]);
    CHECK(v[1] == rational(-1) + g.discount * v[0]);
}

TEST_CASE("brute force equilibrium on single-vertex games") {
    Equilibrium mx =
        brute_force_equilibrium(self_loop(Player::Max, rational(1), rational(3)));
    CHECK(mx.values == ValueVector{rational(6)});
    CHECK(mx.max_strategy.choice[0] == 1);

    Equilibrium mn =
        brute_force_equilibrium(self_loop(Player::Min, rational(1), rational(3)));
    CHECK(mn.values == ValueVector{rational(2)});
    CHECK(mn.min_strategy.choice[0] == 0);
}

TEST_CASE("brute force equilibrium satisfies Bellman optimality") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        DiscountedGame g = gen_random_binary_game(4, seed);
        Equilibrium eq = brute_force_equilibrium(g);
        CHECK(bellman_step(g, eq.values) == eq.values);
    }
}

TEST_CASE("brute force respects the profile cap") {
    DiscountedGame g = gen_random_binary_game(8, 3);
    CHECK_THROWS_AS(brute_force_equilibrium(g, 100), input_error);
}

TEST_CASE("ties break toward the lowest edge index") {
    // both edges identical: choice must be edge 0
    DiscountedGame g = self_loop(Player::Max, rational(5), rational(5));
    Equilibrium eq = brute_force_equilibrium(g);
    CHECK(eq.max_strategy.choice[0] == 0);
}

TEST_CASE("value_iteration geometric example") {
    DiscountedGame g;
    g.discount = rational(1, 2);
    g.owner = {Player::Max};
    g.edges = {{Edge{0, rational(1)}}};
    IterationResult it = value_iteration(g, 3);
    CHECK(it.values == ValueVector{rational(7, 4)});  // 1 + 1/2 + 1/4
    CHECK(it.bound == rational(1, 4));                // (1/2)^3 * 1 / (1/2)
}

TEST_CASE("one Bellman step from zero gives best immediate reward") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        DiscountedGame g = gen_random_binary_game(5, seed);
        IterationResult it = value_iteration(g, 1);
        for (int u = 0; u < g.size(); ++u) {
            rational best = g.edges[u][0].reward;
            for (const Edge& e : g.edges[u]) {
                if (g.owner[u] == Player::Max && e.reward > best) best = e.reward;
                if (g.owner[u] == Player::Min && e.reward < best) best = e.reward;
            }
            CHECK(it.values[u] == best);
        }
    }
}

TEST_CASE("value_iteration brackets the equilibrium") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        DiscountedGame g = gen_random_binary_game(4, seed + 100);
        Equilibrium eq = brute_force_equilibrium(g);
        IterationResult it = value_iteration(g, 60);
        for (int u = 0; u < g.size(); ++u) {
            CHECK(eq.values[u] >= it.values[u] - it.bound);
            CHECK(eq.values[u] <= it.values[u] + it.bound);
        }
    }
}

TEST_CASE("certified bound contracts by the discount factor") {
    DiscountedGame g = gen_random_binary_game(4, 11);
    IterationResult a = value_iteration(g, 5);
    IterationResult b = value_iteration(g, 6);
    CHECK(b.bound == g.discount * a.bound);
}
