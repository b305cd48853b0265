#pragma once

// Shared helpers and independent oracles for the test suites. Everything
// here recomputes results from first principles so the library code under
// test is never checked against itself.

#include <algorithm>
#include <numeric>
#include <vector>

#include "ccast/graph.hpp"
#include "ccast/oracle.hpp"

namespace ccast::testing {

inline Instance make_instance(int total_vertices, std::vector<std::pair<int, int>> edges, int k,
                              std::vector<int> sizes = {}) {
    if (sizes.empty()) {
        sizes.assign(static_cast<size_t>(total_vertices), 1);
        sizes[0] = 0;
    }
    return validate_instance({Graph(total_vertices, std::move(edges)), k, std::move(sizes)});
}

inline Instance make_star(int leaves, int k) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return make_instance(leaves + 1, std::move(edges), k);
}

// Single-source distances via Floyd-Warshall, as an oracle for BFS.
inline std::vector<int> floyd_warshall_distances(const Instance& instance) {
    const int total = instance.graph.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> dist(static_cast<size_t>(total),
                                       std::vector<int>(static_cast<size_t>(total), inf));
    for (int v = 0; v < total; ++v) dist[static_cast<size_t>(v)][static_cast<size_t>(v)] = 0;
    for (const auto& [u, v] : instance.graph.edges()) {
        dist[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        dist[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    for (int w = 0; w < total; ++w) {
        for (int u = 0; u < total; ++u) {
            for (int v = 0; v < total; ++v) {
                int through = dist[static_cast<size_t>(u)][static_cast<size_t>(w)] +
                              dist[static_cast<size_t>(w)][static_cast<size_t>(v)];
                if (through < dist[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                    dist[static_cast<size_t>(u)][static_cast<size_t>(v)] = through;
                }
            }
        }
    }
    std::vector<int> from_sink(static_cast<size_t>(total));
    for (int v = 0; v < total; ++v) from_sink[static_cast<size_t>(v)] = dist[0][static_cast<size_t>(v)];
    return from_sink;
}

// Slower reference optimum: walks the full Cartesian product of per-reading
// simple paths (readings in plain id order, no incumbent, no bounding) and
// keeps the cheapest cost. `product_cap` guards against blowups; returns -1
// when the product is larger than the cap.
inline long long unpruned_minimum(const Instance& instance, long long product_cap) {
    const int total = instance.graph.vertex_count();
    std::vector<std::vector<std::vector<VertexId>>> paths(static_cast<size_t>(total));
    long long product = 1;
    for (int v = 1; v < total; ++v) {
        paths[static_cast<size_t>(v)] =
            enumerate_simple_paths(instance.graph, v, 1000000);
        product *= static_cast<long long>(paths[static_cast<size_t>(v)].size());
        if (product > product_cap) return -1;
    }
    RoutingPlan plan;
    plan.paths.resize(static_cast<size_t>(total));
    long long best = -1;
    std::vector<size_t> pick(static_cast<size_t>(total), 0);
    while (true) {
        for (int v = 1; v < total; ++v) {
            plan.paths[static_cast<size_t>(v)] =
                paths[static_cast<size_t>(v)][pick[static_cast<size_t>(v)]];
        }
        long long cost = plan_cost(instance, plan);
        if (best < 0 || cost < best) best = cost;
        int v = 1;
        while (v < total) {
            if (++pick[static_cast<size_t>(v)] < paths[static_cast<size_t>(v)].size()) break;
            pick[static_cast<size_t>(v)] = 0;
            ++v;
        }
        if (v == total) break;
    }
    return best;
}

// All labeled connected graphs on exactly total_vertices vertices.
inline std::vector<Graph> all_connected_graphs(int total_vertices) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < total_vertices; ++u) {
        for (int v = u + 1; v < total_vertices; ++v) slots.emplace_back(u, v);
    }
    std::vector<Graph> graphs;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < slots.size(); ++i) {
            if (mask & (1u << i)) edges.push_back(slots[i]);
        }
        Graph graph(total_vertices, std::move(edges));
        if (graph.connected()) graphs.push_back(std::move(graph));
    }
    return graphs;
}

// SET-PARTITION decision by subset-sum: can `elements` split into two halves
// of equal sum?
inline bool is_partitionable(const std::vector<int>& elements) {
    long long sum = std::accumulate(elements.begin(), elements.end(), 0LL);
    if (sum % 2 != 0) return false;
    long long half = sum / 2;
    std::vector<char> reachable(static_cast<size_t>(half) + 1, 0);
    reachable[0] = 1;
    for (int x : elements) {
        for (long long s = half; s >= x; --s) {
            if (reachable[static_cast<size_t>(s - x)]) reachable[static_cast<size_t>(s)] = 1;
        }
    }
    return reachable[static_cast<size_t>(half)];
}

// Brute-force minimum set cover size over all subfamilies.
inline int min_cover_size(int ground_size, const std::vector<std::vector<int>>& subsets) {
    int m = static_cast<int>(subsets.size());
    int best = m + 1;
    unsigned full = (1u << ground_size) - 1;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        unsigned covered = 0;
        int used = 0;
        for (int i = 0; i < m; ++i) {
            if (mask & (1u << i)) {
                ++used;
                for (int x : subsets[static_cast<size_t>(i)]) covered |= 1u << (x - 1);
            }
        }
        if (covered == full) best = std::min(best, used);
    }
    return best;
}

}  // namespace ccast::testing
