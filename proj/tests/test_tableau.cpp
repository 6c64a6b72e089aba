#include <catch2/catch_amalgamated.hpp>

#include "dglcp/rng.hpp"
#include "dglcp/tableau.hpp"

using namespace dglcp;

namespace {

LCPInstance seeded_lcp(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    LCPInstance lcp;
    lcp.M.assign(n, rvec(n));
    lcp.q.assign(n, rational(0));
    for (auto& row : lcp.M)
        for (auto& x : row) x = rational(rng.range(-5, 5));
    for (auto& x : lcp.q) x = rational(rng.range(-5, 5));
    return lcp;
}

// recompute w - Mz - d z0 from the basic point; must equal q
void check_system_residual(const Tableau& t, const LCPInstance& lcp,
                           const rvec& d) {
    TableauPoint p = basic_point(t);
    for (int i = 0; i < t.n; ++i) {
        rational rhs = lcp.q[i] + d[i] * p.z0;
        for (int j = 0; j < t.n; ++j) rhs += lcp.M[i][j] * p.z[j];
        CHECK(p.w[i] == rhs);
    }
}

}  // namespace

TEST_CASE("labels and complements") {
    int n = 3;
    CHECK(label_name(w_label(0), n) == "w1");
    CHECK(label_name(z_label(n, 2), n) == "z3");
    CHECK(label_name(z0_label(n), n) == "z0");
    CHECK(complement(w_label(1), n) == z_label(n, 1));
    CHECK(complement(z_label(n, 1), n) == w_label(1));
    CHECK_THROWS_AS(complement(z0_label(n), n), invariant_error);
}

TEST_CASE("init_tableau sets up basis w, rhs q, z0 column d") {
    LCPInstance lcp = seeded_lcp(2, 3);
    rvec unit(2, rational(1));
    Tableau t = init_tableau(lcp, &unit);
    CHECK(t.basis == std::vector<int>{w_label(0), w_label(1)});
    for (int i = 0; i < 2; ++i) {
        CHECK(t.R[i][0] == lcp.q[i]);
        CHECK(t.col[z0_label(2)][i] == rational(1));
        for (int j = 0; j < 2; ++j)
            CHECK(t.col[z_label(2, j)][i] == lcp.M[i][j]);
    }
}

TEST_CASE("init_tableau rejects non-positive coverings") {
    LCPInstance lcp = seeded_lcp(2, 4);
    rvec bad{rational(1), rational(0)};
    CHECK_THROWS_AS(init_tableau(lcp, &bad), input_error);
}

TEST_CASE("1x1 z0 pivot flips the sign of the rhs") {
    LCPInstance lcp;
    lcp.M = {{rational(2)}};
    lcp.q = {rational(-4)};
    rvec d{rational(1)};
    Tableau t = init_tableau(lcp, &d);
    int left = pivot(t, z0_label(1), 0);
    CHECK(left == w_label(0));
    CHECK(t.basis[0] == z0_label(1));
    CHECK(t.R[0][0] == rational(4));
}

TEST_CASE("pivot then inverse pivot is the identity") {
    LCPInstance lcp = seeded_lcp(3, 9);
    rvec d(3, rational(1));
    Tableau t = init_tableau(lcp, &d);
    Tableau before = t;
    int entering = z_label(3, 1);
    REQUIRE(t.col[entering][1] != 0);  // same pivot element both ways
    int left = pivot(t, entering, 1);
    pivot(t, left, 1);
    CHECK(t.R == before.R);
    CHECK(t.basis == before.basis);
    CHECK(t.col == before.col);
}

TEST_CASE("pivot preserves the defining system") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        LCPInstance lcp = seeded_lcp(3, seed + 200);
        SplitMix64 rng(seed);
        rvec d(3);
        for (auto& x : d) x = rational(1 + rng.range(0, 4));
        Tableau t = init_tableau(lcp, &d);
        // walk a few random admissible pivots
        for (int step = 0; step < 4; ++step) {
            std::vector<int> nonbasic;
            for (int l = 0; l < 2 * t.n + 1; ++l)
                if (!t.basic(l) && !t.col[l].empty()) nonbasic.push_back(l);
            int entering =
                nonbasic[static_cast<std::size_t>(rng.below(nonbasic.size()))];
            int row = -1;
            for (int i = 0; i < t.n; ++i)
                if (t.col[entering][i] != 0) { row = i; break; }
            if (row < 0) continue;
            pivot(t, entering, row);
            check_system_residual(t, lcp, d);
        }
    }
}

TEST_CASE("pivot rejects a zero pivot element") {
    LCPInstance lcp;
    lcp.M = {{rational(0), rational(1)}, {rational(1), rational(0)}};
    lcp.q = {rational(-1), rational(-1)};
    Tableau t = init_tableau(lcp, nullptr);
    CHECK_THROWS_AS(pivot(t, z_label(2, 0), 0), invariant_error);
}

TEST_CASE("lex_ratio_test picks the smaller ratio") {
    // column (1, 1) against rhs (2, 1): row 1 wins with ratio 1
    LCPInstance lcp;
    lcp.M = {{rational(-1), rational(0)}, {rational(-1), rational(0)}};
    lcp.q = {rational(2), rational(1)};
    Tableau t = init_tableau(lcp, nullptr);
    CHECK(lex_ratio_test(t, z_label(2, 0)) == 1);
}

TEST_CASE("lex_ratio_test returns none without positive entries") {
    LCPInstance lcp;
    lcp.M = {{rational(1), rational(0)}, {rational(0), rational(-1)}};
    lcp.q = {rational(1), rational(1)};
    Tableau t = init_tableau(lcp, nullptr);
    // entering z1: rates are -M[.][0] = (-1, 0), nothing positive
    CHECK(lex_ratio_test(t, z_label(2, 0)) == -1);
}

TEST_CASE("lex keys break exact rhs ties deterministically") {
    // both rows have ratio 1, so the identity part of R decides: row 0's key
    // (1, 1, 0) is lex-larger than row 1's (1, 0, 1), and the minimum wins
    LCPInstance lcp;
    lcp.M = {{rational(-1), rational(0)}, {rational(-1), rational(0)}};
    lcp.q = {rational(1), rational(1)};
    Tableau t = init_tableau(lcp, nullptr);
    CHECK(lex_ratio_test(t, z_label(2, 0)) == 1);
}

TEST_CASE("lexicographic positivity holds along admissible pivots") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        LCPInstance lcp = seeded_lcp(4, seed + 400);
        for (auto& x : lcp.q) if (x < 0) x = -x;  // start feasible
        rvec d(4, rational(1));
        Tableau t = init_tableau(lcp, &d);
        CHECK(lex_all_positive(t));
        for (int l = 0; l < 2 * t.n + 1; ++l) {
            if (t.basic(l) || t.col[l].empty()) continue;
            int row = lex_ratio_test(t, l);
            if (row < 0) continue;
            Tableau copy = t;
            pivot(copy, l, row);
            CHECK(lex_all_positive(copy));
        }
    }
}
