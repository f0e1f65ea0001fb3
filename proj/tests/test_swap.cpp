#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qrepnet/errors.hpp"
#include "qrepnet/swap.hpp"

using namespace qrepnet;

TEST_CASE("iteration count is the merge-tree depth") {
    CHECK(swap_iterations(1) == 0);
    CHECK(swap_iterations(2) == 1);
    CHECK(swap_iterations(3) == 2);
    CHECK(swap_iterations(4) == 2);
    CHECK(swap_iterations(5) == 3);
    CHECK(swap_iterations(8) == 3);
    CHECK(swap_iterations(9) == 4);
    CHECK(swap_iterations(1 << 20) == 20);
    CHECK_THROWS_AS(swap_iterations(0), InvalidConfigError);
    CHECK_THROWS_AS(swap_iterations(-2), InvalidConfigError);
}

TEST_CASE("merge latency closed form") {
    // 7 rounds' worth of 10 km signalling at 2e8 m/s
    CHECK(std::abs(t_swap(SwapSchedule::for_edge_count(10, 2e8, 8)) - 3.5e-4) < 1e-18);
    // non-power-of-two edge count rounds the depth up
    CHECK(std::abs(t_swap(SwapSchedule::for_edge_count(15, 2e8, 3)) - 2.25e-4) < 1e-18);
    // a single edge never waits on merges
    CHECK(t_swap(SwapSchedule::for_edge_count(80, 2e8, 1)) == 0);
}

TEST_CASE("closed form equals the per-round sum") {
    for (int j = 0; j <= 30; ++j) {
        SwapSchedule schedule{12.5, 2e8, j};
        Real per_round = 0;
        for (int r = 1; r <= j; ++r) per_round += std::ldexp(1.0, r - 1) * 12.5e3 / 2e8;
        CHECK(std::abs(t_swap(schedule) - per_round) < 1e-15 * (1 + per_round));
    }
}

TEST_CASE("latency scales with the edge and deepens with the tree") {
    CHECK(t_swap({20, 2e8, 3}) == 2 * t_swap({10, 2e8, 3}));
    CHECK(std::abs(t_swap({35, 2e8, 4}) - 3.5 * t_swap({10, 2e8, 4})) < 1e-18);
    Real prev = -1;
    for (int j = 0; j <= 10; ++j) {
        Real t = t_swap({10, 2e8, j});
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("doubled exponent variant") {
    SwapSchedule schedule = SwapSchedule::for_edge_count(10, 2e8, 8);
    CHECK(std::abs(t_swap(schedule, SwapExponent::doubled) - 7e-4) < 1e-18);
    Real per_round = 0;
    for (int r = 1; r <= schedule.iterations_j; ++r)
        per_round += std::ldexp(1.0, r) * 10e3 / 2e8;
    CHECK(std::abs(t_swap(schedule, SwapExponent::doubled) - per_round) < 1e-15);
}

TEST_CASE("latency guards") {
    CHECK_THROWS_AS(t_swap({10, 0, 2}), InvalidConfigError);
    CHECK_THROWS_AS(t_swap({-1, 2e8, 2}), InvalidConfigError);
    CHECK_THROWS_AS(t_swap({10, 2e8, -1}), InvalidConfigError);
    CHECK_THROWS_AS(t_swap({10, 2e8, 63}), InvalidConfigError);
}
