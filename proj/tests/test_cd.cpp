#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>

#include "dglcp/cottle_dantzig.hpp"
#include "dglcp/lcp.hpp"
#include "dglcp/lemke.hpp"
#include "dglcp/rng.hpp"

using namespace dglcp;

namespace {

LCPInstance seeded_p_instance(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    LCPInstance lcp;
    lcp.M.assign(n, rvec(n));
    lcp.q.assign(n, rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            lcp.M[i][j] = i == j ? rational(n + 2 + rng.range(0, 3))
                                 : rational(rng.range(-1, 1));
    for (auto& x : lcp.q) x = rational(rng.range(-6, 6));
    return lcp;
}

// Degenerate instances can express one solution through several bases; the
// point itself must still be unique on a P-matrix.
LCPSolution unique_solution(const LCPInstance& lcp) {
    auto bases = enumerate_complementary(lcp);
    REQUIRE(!bases.empty());
    for (std::size_t i = 1; i < bases.size(); ++i) {
        REQUIRE(bases[i].sol.w == bases[0].sol.w);
        REQUIRE(bases[i].sol.z == bases[0].sol.z);
    }
    return bases[0].sol;
}

}  // namespace

TEST_CASE("nonnegative q needs no major cycle") {
    LCPInstance lcp{{{rational(5)}}, {rational(3)}};
    CDResult res = cottle_dantzig_solve(lcp, {0});
    REQUIRE(res.outcome == Outcome::solved);
    CHECK(res.trace.pivot_count() == 0);
    CHECK(res.trace.major_cycles == 0);
    CHECK(res.solution->w == rvec{rational(3)});
}

TEST_CASE("1x1 instance closes in one principal exchange") {
    LCPInstance lcp{{{rational(2)}}, {rational(-4)}};
    CDResult res = cottle_dantzig_solve(lcp, realize_ordering(IndexOrdering::identity(), 1));
    REQUIRE(res.outcome == Outcome::solved);
    CHECK(res.solution->z == rvec{rational(2)});
    CHECK(res.trace.major_cycles == 1);
    REQUIRE(res.trace.pivot_count() == 1);
    CHECK(label_name(res.trace.events[0].entering, 1) == "z1");
    CHECK(label_name(res.trace.events[0].leaving, 1) == "w1");
}

TEST_CASE("decoupled 2x2 runs one cycle per negative index") {
    LCPInstance lcp{{{rational(1), rational(0)}, {rational(0), rational(1)}},
                    {rational(-1), rational(-2)}};
    CDResult res = cottle_dantzig_solve(lcp, {0, 1});
    REQUIRE(res.outcome == Outcome::solved);
    CHECK(res.solution->z == rvec{rational(1), rational(2)});
    CHECK(res.trace.major_cycles == 2);
    REQUIRE(res.trace.pivot_count() == 2);
    CHECK(label_name(res.trace.events[0].entering, 2) == "z1");
    CHECK(label_name(res.trace.events[1].entering, 2) == "z2");
}

TEST_CASE("solutions match the oracle under many orderings") {
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            LCPInstance lcp = seeded_p_instance(n, seed * 53 + n);
            LCPSolution expect = unique_solution(lcp);
            CDResult id = cottle_dantzig_solve(
                lcp, realize_ordering(IndexOrdering::identity(), n));
            REQUIRE(id.outcome == Outcome::solved);
            CHECK(id.solution->z == expect.z);
            CHECK(id.trace.major_cycles <= static_cast<std::uint64_t>(n));
            for (std::uint64_t os = 0; os < 5; ++os) {
                CDResult res = cottle_dantzig_solve(
                    lcp, realize_ordering(IndexOrdering::random(os), n));
                REQUIRE(res.outcome == Outcome::solved);
                CHECK(res.solution->z == expect.z);
                CHECK(res.solution->w == expect.w);
                CHECK(check_solution(lcp, *res.solution).empty());
            }
        }
    }
}

TEST_CASE("agrees with Lemke on the same instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        LCPInstance lcp = seeded_p_instance(4, seed + 400);
        LemkeResult lr = lemke_solve(lcp, realize_covering(CoveringVector::unit(), 4));
        CDResult cr = cottle_dantzig_solve(lcp, realize_ordering(IndexOrdering::identity(), 4));
        REQUIRE(lr.outcome == Outcome::solved);
        REQUIRE(cr.outcome == Outcome::solved);
        CHECK(lr.solution->z == cr.solution->z);
        CHECK(lr.solution->w == cr.solution->w);
    }
}

TEST_CASE("non-P input fails with a diagnostic instead of looping") {
    LCPInstance lcp{{{rational(-1)}}, {rational(-1)}};
    CDResult res = cottle_dantzig_solve(lcp, {0});
    REQUIRE(res.outcome == Outcome::failed);
    CHECK(res.diagnostic.find("z1") != std::string::npos);
    CHECK(res.diagnostic.find("P-matrix") != std::string::npos);
    CHECK(!res.solution.has_value());
}

TEST_CASE("pivot budget is enforced across major cycles") {
    LCPInstance lcp{{{rational(1), rational(0)}, {rational(0), rational(1)}},
                    {rational(-1), rational(-2)}};
    CDResult res = cottle_dantzig_solve(lcp, {0, 1}, 1);
    CHECK(res.outcome == Outcome::budget_exceeded);
    CHECK(res.trace.pivot_count() == 1);
    CHECK(!res.diagnostic.empty());
}

TEST_CASE("ordering realization") {
    CHECK(realize_ordering(IndexOrdering::identity(), 4) ==
          std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(realize_ordering(IndexOrdering::explicit_perm({1, 1, 0}), 3),
                    input_error);
    CHECK_THROWS_AS(realize_ordering(IndexOrdering::explicit_perm({0, 1, 3}), 3),
                    input_error);
    CHECK_THROWS_AS(realize_ordering(IndexOrdering::explicit_perm({0, 1}), 3),
                    input_error);
    CHECK(realize_ordering(IndexOrdering::explicit_perm({2, 0, 1}), 3) ==
          std::vector<int>{2, 0, 1});
    auto a = realize_ordering(IndexOrdering::random(7), 6);
    CHECK(a == realize_ordering(IndexOrdering::random(7), 6));
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("identical orderings give identical traces") {
    LCPInstance lcp = seeded_p_instance(5, 2024);
    auto ord = realize_ordering(IndexOrdering::random(9), 5);
    CDResult a = cottle_dantzig_solve(lcp, ord);
    CDResult b = cottle_dantzig_solve(lcp, ord);
    REQUIRE(a.trace.pivot_count() == b.trace.pivot_count());
    CHECK(a.trace.major_cycles == b.trace.major_cycles);
    for (std::size_t i = 0; i < a.trace.events.size(); ++i) {
        CHECK(a.trace.events[i].entering == b.trace.events[i].entering);
        CHECK(a.trace.events[i].leaving == b.trace.events[i].leaving);
    }
}

TEST_CASE("the basis stays complementary at every pivot") {
    LCPInstance lcp = seeded_p_instance(5, 31337);
    int seen = 0;
    CDResult res = cottle_dantzig_solve(
        lcp, realize_ordering(IndexOrdering::identity(), 5), 0,
        [&](const Tableau& t) {
            ++seen;
            for (int i = 0; i < t.n; ++i)
                CHECK(t.basic(w_label(i)) != t.basic(z_label(t.n, i)));
        });
    REQUIRE(res.outcome == Outcome::solved);
    CHECK(seen == static_cast<int>(res.trace.pivot_count()));
}
