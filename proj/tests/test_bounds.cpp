#include <doctest.h>

#include "ccast/bounds.hpp"
#include "ccast/oracle.hpp"
#include "ccast/routing.hpp"
#include "test_support.hpp"

using namespace ccast;
using namespace ccast::testing;

TEST_CASE("lb1 counts the readings") {
    CHECK(lb1(gen_line(1, 2)) == 1);
    CHECK(lb1(gen_grid(8, 8, 4)) == 63);
    CHECK(lb1(gen_line(5, 2)) == 5);
}

TEST_CASE("lb2 rounds the distance sum") {
    CHECK(lb2(gen_line(5, 2)) == 8);  // ceil(15/2)
    CHECK(lb2(make_star(7, 3)) == 3);  // ceil(7/3)
    CHECK(lb2(gen_grid(2, 2, 2)) == 2);  // distances 1+1+2
}

TEST_CASE("lb3 sums per-cut packet counts") {
    CHECK(lb3(gen_line(5, 2)) == 9);  // n_i = 5,4,3,2,1
    CHECK(lb3(make_star(4, 5)) == 1);
    CHECK(lb3(gen_grid(2, 2, 2)) == 3);  // n_i = 3,1 under k=2; tighter than lb2
}

TEST_CASE("grid_lb hand values") {
    CHECK(grid_lb(2, 2, 2) == 2);
    CHECK(grid_lb(8, 8, 4) == 112);  // 8*8*14 / 8
}

TEST_CASE("1xn grid_lb degenerates to lb2 of the line") {
    for (int n : {2, 5, 9}) {
        CHECK(grid_lb(1, n, 2) == lb2(gen_line(n - 1, 2)));
    }
}

TEST_CASE("partial_lb is ceil(n/2)") {
    CHECK(partial_lb(gen_line(1, 2)) == 1);
    CHECK(partial_lb(gen_line(5, 2)) == 3);
    CHECK(partial_lb(gen_line(8, 2)) == 4);
}

TEST_CASE("lb3 dominates lb2 everywhere") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Instance instance = gen_random_connected(4 + static_cast<int>(seed), 0.3, 3, seed);
        CHECK(lb3(instance) >= lb2(instance));
    }
}

TEST_CASE("lb3 never exceeds the tree router, with equality on lines") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance tree = gen_random_tree(4 + static_cast<int>(seed % 9), 2, seed);
        long long hops =
            validate_trace(tree, run_spt(tree, build_spt(tree, ParentPolicy::min_id())))
                .total_hops;
        CHECK(lb3(tree) <= hops);
    }
    for (int n : {1, 4, 7}) {
        Instance line = gen_line(n, 2);
        long long hops =
            validate_trace(line, run_spt(line, build_spt(line, ParentPolicy::min_id())))
                .total_hops;
        CHECK(lb3(line) == hops);
    }
}

TEST_CASE("bounds are sound against the exact optimum") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Instance instance = gen_random_connected(7, 0.25, 2, seed);
        long long optimum = solve_exact(instance).optimum;
        CHECK(lb1(instance) <= optimum);
        CHECK(lb2(instance) <= optimum);
        CHECK(lb3(instance) <= optimum);
    }
}

TEST_CASE("grid_lb is sound on tiny grids") {
    for (int rows : {1, 2, 3}) {
        for (int cols : {2, 3}) {
            for (int k : {2, 3}) {
                Instance grid = gen_grid(rows, cols, k);
                long long optimum = solve_exact(grid).optimum;
                CHECK(grid_lb(rows, cols, k) <= optimum);
            }
        }
    }
}

TEST_CASE("compute_bounds assembles the report") {
    Instance grid = gen_grid(8, 8, 4);
    BoundReport report = compute_bounds(grid);
    CHECK(report.lb1 == 63);
    CHECK(report.lb2 == 112);
    CHECK(report.lb3 == 118);
    CHECK(report.grid_lb == 112);
    CHECK(report.best == 118);
    CHECK(report.partial_lb == 32);
    CHECK(report.lb2_raw == doctest::Approx(112.0));
    CHECK(report.lb3_raw == report.lb2_raw);  // same sum before rounding

    Instance random = gen_random_connected(9, 0.3, 2, 4);
    BoundReport r2 = compute_bounds(random);
    CHECK(!r2.grid_lb.has_value());
    CHECK(r2.best >= r2.lb1);
    CHECK(r2.best >= r2.lb3);
}
