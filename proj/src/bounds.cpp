#include "ccast/bounds.hpp"

#include <algorithm>

#include "ccast/generators.hpp"

namespace ccast {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

long long lb1(const Instance& instance) { return instance.reading_count(); }

long long lb2(const Instance& instance) {
    DistanceMap dist = bfs_distances(instance);
    long long sum = 0;
    for (int v = 1; v < instance.graph.vertex_count(); ++v) {
        sum += dist[static_cast<size_t>(v)];
    }
    return ceil_div(sum, instance.capacity_k);
}

long long lb3(const Instance& instance) {
    DistanceMap dist = bfs_distances(instance);
    int diameter = 0;
    for (int v = 1; v < instance.graph.vertex_count(); ++v) {
        diameter = std::max(diameter, dist[static_cast<size_t>(v)]);
    }
    std::vector<long long> at_distance(static_cast<size_t>(diameter) + 1, 0);
    for (int v = 1; v < instance.graph.vertex_count(); ++v) {
        ++at_distance[static_cast<size_t>(dist[static_cast<size_t>(v)])];
    }
    long long total = 0;
    long long beyond = 0;  // n_i, accumulated from the far side
    for (int i = diameter; i >= 1; --i) {
        beyond += at_distance[static_cast<size_t>(i)];
        total += ceil_div(beyond, instance.capacity_k);
    }
    return total;
}

long long grid_lb(int rows, int cols, int k) {
    long long numerator = static_cast<long long>(rows) * cols * (rows + cols - 2);
    return ceil_div(numerator, 2LL * k);
}

long long partial_lb(const Instance& instance) {
    return ceil_div(instance.reading_count(), 2);
}

BoundReport compute_bounds(const Instance& instance) {
    BoundReport report;
    report.lb1 = lb1(instance);
    report.lb2 = lb2(instance);
    report.lb3 = lb3(instance);
    report.partial_lb = partial_lb(instance);
    if (auto dims = infer_grid_dims(instance)) {
        report.grid_lb = grid_lb(dims->first, dims->second, instance.capacity_k);
    }
    DistanceMap dist = bfs_distances(instance);
    long long dist_sum = 0;
    for (int v = 1; v < instance.graph.vertex_count(); ++v) {
        dist_sum += dist[static_cast<size_t>(v)];
    }
    report.lb2_raw = static_cast<double>(dist_sum) / instance.capacity_k;
    report.lb3_raw = report.lb2_raw;  // identical sums, cut-by-cut vs aggregated
    report.best = std::max({report.lb1, report.lb2, report.lb3,
                            report.grid_lb.value_or(0)});
    return report;
}

}  // namespace ccast
