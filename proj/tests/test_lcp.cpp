#include <catch2/catch_amalgamated.hpp>

#include "dglcp/instances.hpp"
#include "dglcp/lcp.hpp"
#include "dglcp/reduction.hpp"

using namespace dglcp;

namespace {
LCPInstance mk(rmat M, rvec q) { return LCPInstance{std::move(M), std::move(q)}; }
}  // namespace

TEST_CASE("check_solution accepts the trivial solution when q >= 0") {
    LCPInstance lcp = mk({{rational(5), rational(-7)}, {rational(1), rational(2)}},
                         {rational(1), rational(2)});
    LCPSolution sol{lcp.q, rvec(2, rational(0))};
    CHECK(check_solution(lcp, sol).empty());
}

TEST_CASE("check_solution verifies a pivoted solution") {
    LCPInstance lcp = mk({{rational(2)}}, {rational(-4)});
    CHECK(check_solution(lcp, {rvec{rational(0)}, rvec{rational(2)}}).empty());
}

TEST_CASE("check_solution reports complementarity violations") {
    LCPInstance lcp = mk({{rational(2)}}, {rational(-4)});
    auto report = check_solution(lcp, {rvec{rational(2)}, rvec{rational(3)}});
    REQUIRE_FALSE(report.empty());
    bool found = false;
    for (const auto& msg : report)
        if (msg.find("w1z1 = 6/1 != 0") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("check_solution reports negativity and residual rows") {
    LCPInstance lcp = mk({{rational(1), rational(0)}, {rational(0), rational(1)}},
                         {rational(-1), rational(-2)});
    auto report =
        check_solution(lcp, {rvec{rational(-1), rational(0)},
                             rvec{rational(0), rational(-2)}});
    CHECK(report.size() >= 2);
    CHECK_THROWS_AS(check_solution(lcp, {rvec{rational(0)}, rvec{rational(0)}}),
                    input_error);  // dimension mismatch
}

TEST_CASE("is_p_matrix basics") {
    CHECK(is_p_matrix(identity_matrix(3)));
    CHECK_FALSE(is_p_matrix(rmat{{rational(0)}}));
    CHECK_FALSE(is_p_matrix(rmat{{rational(1), rational(2)},
                                 {rational(3), rational(1)}}));
    CHECK(is_p_matrix(rmat{{rational(2), rational(1)},
                           {rational(1), rational(2)}}));
    // negative off-diagonals do not spoil the property
    CHECK(is_p_matrix(rmat{{rational(2), rational(-1)},
                           {rational(-1), rational(2)}}));
}

TEST_CASE("is_p_matrix cap") {
    CHECK_THROWS_AS(is_p_matrix(identity_matrix(15)), input_error);
    CHECK(is_p_matrix(identity_matrix(15), 15));
}

TEST_CASE("is_p_matrix agrees with the permutation-expansion version") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        SplitMix64 rng(seed);
        rmat M(4, rvec(4));
        for (auto& row : M)
            for (auto& x : row) x = rational(rng.range(-3, 3));
        CHECK(is_p_matrix(M) == is_p_matrix_slow(M));
    }
}

TEST_CASE("reduced games give P-matrices that both tests confirm") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        DiscountedGame g = gen_random_binary_game(4, seed + 50);
        rmat M = reduce_to_lcp(g).lcp.M;
        CHECK(is_p_matrix(M));
        CHECK(is_p_matrix_slow(M));
    }
}

TEST_CASE("enumerate_complementary finds the unique basis on P instances") {
    LCPInstance lcp = mk({{rational(2)}}, {rational(-4)});
    auto bases = enumerate_complementary(lcp);
    REQUIRE(bases.size() == 1);
    CHECK(bases[0].z_mask == 1);
    CHECK(bases[0].sol.z == rvec{rational(2)});

    LCPInstance id2 = mk(identity_matrix(2), {rational(-1), rational(-2)});
    auto bases2 = enumerate_complementary(id2);
    REQUIRE(bases2.size() == 1);
    CHECK(bases2[0].sol.z == rvec{rational(1), rational(2)});
    CHECK(bases2[0].sol.w == rvec{rational(0), rational(0)});
}

TEST_CASE("enumerate_complementary respects its cap") {
    LCPInstance big = mk(identity_matrix(21), rvec(21, rational(1)));
    CHECK_THROWS_AS(enumerate_complementary(big), input_error);
}

TEST_CASE("require_well_formed rejects ragged input") {
    CHECK_THROWS_AS(require_well_formed(mk({}, {})), input_error);
    CHECK_THROWS_AS(require_well_formed(mk({{rational(1), rational(2)}},
                                           {rational(1)})),
                    input_error);
}
