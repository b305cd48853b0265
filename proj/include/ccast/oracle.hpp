#pragma once

#include <cstdint>
#include <vector>

#include "ccast/graph.hpp"
#include "ccast/routing.hpp"

namespace ccast {

// One simple path per reading, from its origin to the sink. Only simple
// paths are considered: traversing a cycle never lowers any edge's load,
// and the per-edge cost is monotone in load, so cycle removal never
// increases a plan's cost.
struct RoutingPlan {
    // paths[v] is empty for the sink and for unused slots; otherwise it runs
    // v, ..., sink.
    std::vector<std::vector<VertexId>> paths;
};

struct OracleLimits {
    int max_vertices = 12;  // non-sink vertices
    long long max_paths_per_vertex = 10000;
};

struct OracleResult {
    long long optimum = 0;
    RoutingPlan witness;
};

// Per-edge cost with unlimited buffering: all traffic crossing an edge is
// grouped, so an edge carrying x unit readings costs ceil(x/k) packets.
long long plan_cost_uccp(const Instance& instance, const RoutingPlan& plan);

// CCP analogue: the crossing multiset is bin-packed exactly (capacity k).
long long plan_cost_ccp(const Instance& instance, const RoutingPlan& plan);

// Dispatches on instance mode.
long long plan_cost(const Instance& instance, const RoutingPlan& plan);

// Exact minimum bin count for item_sizes with capacity k (branch and
// bound). Throws PackingTooLarge beyond 16 items.
int min_bins(const std::vector<int>& item_sizes, int k);

// All simple paths from `from` to the sink, shortest first, ties in
// visiting order (ascending neighbor ids). Throws LimitsExceeded when more
// than `cap` paths exist.
std::vector<std::vector<VertexId>> enumerate_simple_paths(const Graph& graph, VertexId from,
                                                          long long cap);

// Exhaustive branch-and-bound over the Cartesian product of per-reading
// simple paths. Readings are assigned in decreasing distance order and each
// reading's paths are tried shortest first, so the shortest-path-tree plan
// is the first incumbent. Deterministic.
OracleResult solve_exact(const Instance& instance, const OracleLimits& limits = {});

// Realizes a plan as a valid trace with exactly plan_cost hops: directed
// edges are emitted in a topological order of "some reading crosses e
// before f", each edge shipping its whole load. Throws CyclicDependency if
// that relation has a cycle (never happens for distance-decreasing plans).
HopTrace plan_to_trace(const Instance& instance, const RoutingPlan& plan);

// The plan induced by a shortest path tree (every reading follows its
// parent chain).
RoutingPlan plan_from_tree(const Instance& instance, const ShortestPathTree& tree);

}  // namespace ccast
