#pragma once

#include <optional>

#include "ccast/graph.hpp"

namespace ccast {

// Computable lower bounds on the optimal hop count. lb2/lb3 round the
// fractional bounds up (hop counts are integers and each rounding is
// independently sound); the *_raw fields keep the unrounded values.
struct BoundReport {
    long long lb1 = 0;
    long long lb2 = 0;
    long long lb3 = 0;
    long long partial_lb = 0;
    std::optional<long long> grid_lb;  // only when the instance is a lattice
    long long best = 0;                // max of the applicable bounds
    double lb2_raw = 0.0;
    double lb3_raw = 0.0;
};

// Number of non-sink vertices: every vertex sends at least one packet.
long long lb1(const Instance& instance);

// ceil(sum_v d(v) / k): each hop moves at most k reading-steps.
long long lb2(const Instance& instance);

// sum over cuts i of ceil(n_i / k), where n_i counts vertices at distance
// >= i: every cut is crossed by at least that many packets. Dominates lb2.
long long lb3(const Instance& instance);

// ceil(m*n*(m+n-2) / 2k): the row-cut plus column-cut bound for lattices.
long long grid_lb(int rows, int cols, int k);

// ceil(n/2): a lower bound on the partial hops of any complete trace.
long long partial_lb(const Instance& instance);

BoundReport compute_bounds(const Instance& instance);

}  // namespace ccast
