#include "ccast/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ccast {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void check_plan(const Instance& instance, const RoutingPlan& plan) {
    const int total = instance.graph.vertex_count();
    if (static_cast<int>(plan.paths.size()) != total) {
        throw InvalidPlan("plan has wrong number of path slots");
    }
    for (VertexId v = 1; v < total; ++v) {
        const auto& path = plan.paths[static_cast<size_t>(v)];
        if (path.size() < 2 || path.front() != v || path.back() != kSink) {
            throw InvalidPlan("path for reading " + std::to_string(v) +
                              " must run from its origin to the sink");
        }
        std::vector<char> seen(static_cast<size_t>(total), 0);
        for (size_t i = 0; i < path.size(); ++i) {
            VertexId u = path[i];
            if (u < 0 || u >= total || seen[static_cast<size_t>(u)]) {
                throw InvalidPlan("path for reading " + std::to_string(v) + " is not simple");
            }
            seen[static_cast<size_t>(u)] = 1;
            if (i + 1 < path.size() && !instance.graph.has_edge(u, path[i + 1])) {
                throw InvalidPlan("path for reading " + std::to_string(v) +
                                  " uses a missing edge");
            }
        }
    }
}

// Directed edge key for small dense graphs.
inline size_t edge_key(VertexId from, VertexId to, int total) {
    return static_cast<size_t>(from) * static_cast<size_t>(total) + static_cast<size_t>(to);
}

}  // namespace

long long plan_cost_uccp(const Instance& instance, const RoutingPlan& plan) {
    if (!instance.is_uccp()) {
        throw InvalidPlan("plan_cost_uccp requires a UCCP instance");
    }
    check_plan(instance, plan);
    const int total = instance.graph.vertex_count();
    std::vector<int> load(static_cast<size_t>(total) * static_cast<size_t>(total), 0);
    for (VertexId v = 1; v < total; ++v) {
        const auto& path = plan.paths[static_cast<size_t>(v)];
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            ++load[edge_key(path[i], path[i + 1], total)];
        }
    }
    long long cost = 0;
    for (int x : load) {
        if (x > 0) cost += ceil_div(x, instance.capacity_k);
    }
    return cost;
}

long long plan_cost_ccp(const Instance& instance, const RoutingPlan& plan) {
    check_plan(instance, plan);
    const int total = instance.graph.vertex_count();
    std::map<size_t, std::vector<int>> loads;
    for (VertexId v = 1; v < total; ++v) {
        const auto& path = plan.paths[static_cast<size_t>(v)];
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            loads[edge_key(path[i], path[i + 1], total)].push_back(instance.size_of(v));
        }
    }
    long long cost = 0;
    for (auto& [key, sizes] : loads) {
        cost += min_bins(sizes, instance.capacity_k);
    }
    return cost;
}

long long plan_cost(const Instance& instance, const RoutingPlan& plan) {
    return instance.is_uccp() ? plan_cost_uccp(instance, plan) : plan_cost_ccp(instance, plan);
}

namespace {

// Branch and bound over bin assignments; items sorted descending, each item
// tried in every open bin (skipping equal loads) and one new bin.
struct BinPacker {
    int capacity;
    std::vector<int> items;
    int best;
    std::vector<int> loads;
    std::vector<int> assignment;       // bin index per item
    std::vector<int> best_assignment;

    void search(size_t index, int used) {
        if (used >= best) return;
        if (index == items.size()) {
            best = used;
            best_assignment = assignment;
            return;
        }
        long long remaining = 0;
        for (size_t i = index; i < items.size(); ++i) remaining += items[i];
        long long slack = 0;  // free space in the bins already open
        for (int b = 0; b < used; ++b) slack += capacity - loads[static_cast<size_t>(b)];
        if (remaining > slack &&
            used + ceil_div(remaining - slack, capacity) >= best) {
            return;
        }

        int item = items[index];
        int previous_load = -1;
        for (int b = 0; b < used; ++b) {
            if (loads[b] + item > capacity || loads[b] == previous_load) continue;
            previous_load = loads[b];
            loads[b] += item;
            assignment[index] = b;
            search(index + 1, used);
            loads[b] -= item;
        }
        loads[used] = item;
        assignment[index] = used;
        search(index + 1, used + 1);
        loads[used] = 0;
    }
};

BinPacker pack_exact(const std::vector<int>& item_sizes, int k) {
    if (item_sizes.size() > 16) {
        throw PackingTooLarge("refusing exact packing of " + std::to_string(item_sizes.size()) +
                              " items");
    }
    BinPacker packer;
    packer.capacity = k;
    packer.items = item_sizes;
    std::sort(packer.items.begin(), packer.items.end(), std::greater<int>());
    packer.best = static_cast<int>(packer.items.size()) + 1;
    packer.loads.assign(packer.items.size() + 1, 0);
    packer.assignment.assign(packer.items.size(), 0);
    if (packer.items.empty()) {
        packer.best = 0;
        return packer;
    }
    packer.search(0, 0);
    return packer;
}

}  // namespace

int min_bins(const std::vector<int>& item_sizes, int k) {
    return pack_exact(item_sizes, k).best;
}

std::vector<std::vector<VertexId>> enumerate_simple_paths(const Graph& graph, VertexId from,
                                                          long long cap) {
    std::vector<std::vector<VertexId>> paths;
    std::vector<VertexId> current{from};
    std::vector<char> visited(static_cast<size_t>(graph.vertex_count()), 0);
    visited[static_cast<size_t>(from)] = 1;

    // explicit DFS stack of next-neighbor indices
    std::vector<size_t> next{0};
    while (!next.empty()) {
        VertexId v = current.back();
        if (v == kSink) {
            paths.push_back(current);
            if (static_cast<long long>(paths.size()) > cap) {
                throw LimitsExceeded("more than " + std::to_string(cap) +
                                     " simple paths from vertex " + std::to_string(from));
            }
            visited[static_cast<size_t>(v)] = 0;
            current.pop_back();
            next.pop_back();
            continue;
        }
        const auto& nbrs = graph.neighbors(v);
        bool advanced = false;
        while (next.back() < nbrs.size()) {
            VertexId w = nbrs[next.back()++];
            if (!visited[static_cast<size_t>(w)]) {
                visited[static_cast<size_t>(w)] = 1;
                current.push_back(w);
                next.push_back(0);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            visited[static_cast<size_t>(v)] = 0;
            current.pop_back();
            next.pop_back();
        }
    }
    std::stable_sort(paths.begin(), paths.end(),
                     [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
                         return a.size() < b.size();
                     });
    return paths;
}

namespace {

// Shared search state for solve_exact.
struct ExactSearch {
    const Instance* instance;
    int total;
    int k;
    bool uccp;
    std::vector<VertexId> order;                         // readings, far to near
    std::vector<const std::vector<std::vector<VertexId>>*> paths_of;  // per order slot
    std::vector<int> load;                               // per directed edge key
    std::vector<std::vector<int>> ccp_sizes;             // per directed edge key (CCP only)
    std::vector<long long> out_load;                     // per vertex
    std::vector<int> choice;                             // path index per order slot
    long long cost = 0;
    long long best_cost = 0;
    std::vector<int> best_choice;

    long long edge_cost_delta_add(size_t key, int size) {
        if (uccp) {
            int before = load[key];
            ++load[key];
            return ceil_div(before + 1, k) - ceil_div(before, k);
        }
        long long before = load[key] > 0 ? min_bins(ccp_sizes[key], k) : 0;
        ccp_sizes[key].push_back(size);
        ++load[key];
        return min_bins(ccp_sizes[key], k) - before;
    }

    long long edge_cost_delta_remove(size_t key, int size) {
        if (uccp) {
            int before = load[key];
            --load[key];
            return ceil_div(before, k) - ceil_div(before - 1, k);
        }
        long long before = min_bins(ccp_sizes[key], k);
        auto& sizes = ccp_sizes[key];
        sizes.erase(std::find(sizes.begin(), sizes.end(), size));
        --load[key];
        long long after = load[key] > 0 ? min_bins(sizes, k) : 0;
        return before - after;
    }

    // Readings not yet routed whose origin has no outgoing traffic still need
    // at least one fresh packet each; together with the monotone current cost
    // this is a sound bound on any completion.
    long long pending(size_t index) const {
        long long extra = 0;
        for (size_t i = index; i < order.size(); ++i) {
            if (out_load[static_cast<size_t>(order[i])] == 0) ++extra;
        }
        return extra;
    }

    void apply(size_t index, int path_index, int direction) {
        VertexId origin = order[index];
        const auto& path = (*paths_of[index])[static_cast<size_t>(path_index)];
        int size = instance->size_of(origin);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            size_t key = edge_key(path[i], path[i + 1], total);
            if (direction > 0) {
                cost += edge_cost_delta_add(key, size);
                out_load[static_cast<size_t>(path[i])] += 1;
            } else {
                cost -= edge_cost_delta_remove(key, size);
                out_load[static_cast<size_t>(path[i])] -= 1;
            }
        }
    }

    void search(size_t index) {
        if (index == order.size()) {
            if (cost < best_cost) {
                best_cost = cost;
                best_choice = choice;
            }
            return;
        }
        if (cost + pending(index) >= best_cost) return;
        size_t options = paths_of[index]->size();
        for (size_t p = 0; p < options; ++p) {
            choice[index] = static_cast<int>(p);
            apply(index, static_cast<int>(p), +1);
            search(index + 1);
            apply(index, static_cast<int>(p), -1);
        }
    }
};

}  // namespace

RoutingPlan plan_from_tree(const Instance& instance, const ShortestPathTree& tree) {
    RoutingPlan plan;
    plan.paths.resize(static_cast<size_t>(instance.graph.vertex_count()));
    for (VertexId v = 1; v < instance.graph.vertex_count(); ++v) {
        std::vector<VertexId> path{v};
        VertexId at = v;
        while (at != kSink) {
            at = tree.parent[static_cast<size_t>(at)];
            path.push_back(at);
        }
        plan.paths[static_cast<size_t>(v)] = std::move(path);
    }
    return plan;
}

OracleResult solve_exact(const Instance& instance, const OracleLimits& limits) {
    validate_instance(instance);
    const int total = instance.graph.vertex_count();
    if (instance.reading_count() > limits.max_vertices) {
        throw LimitsExceeded("instance has " + std::to_string(instance.reading_count()) +
                             " readings; oracle limit is " + std::to_string(limits.max_vertices));
    }
    if (instance.reading_count() == 0) {
        RoutingPlan empty;
        empty.paths.resize(1);
        return {0, std::move(empty)};
    }

    std::vector<std::vector<std::vector<VertexId>>> all_paths(static_cast<size_t>(total));
    for (VertexId v = 1; v < total; ++v) {
        all_paths[static_cast<size_t>(v)] =
            enumerate_simple_paths(instance.graph, v, limits.max_paths_per_vertex);
    }

    DistanceMap dist = bfs_distances(instance);
    ExactSearch search;
    search.instance = &instance;
    search.total = total;
    search.k = instance.capacity_k;
    search.uccp = instance.is_uccp();
    for (VertexId v = 1; v < total; ++v) search.order.push_back(v);
    std::sort(search.order.begin(), search.order.end(), [&](VertexId a, VertexId b) {
        if (dist[static_cast<size_t>(a)] != dist[static_cast<size_t>(b)])
            return dist[static_cast<size_t>(a)] > dist[static_cast<size_t>(b)];
        return a < b;
    });
    for (VertexId v : search.order) {
        search.paths_of.push_back(&all_paths[static_cast<size_t>(v)]);
    }
    search.load.assign(static_cast<size_t>(total) * static_cast<size_t>(total), 0);
    if (!search.uccp) {
        search.ccp_sizes.assign(static_cast<size_t>(total) * static_cast<size_t>(total), {});
    }
    search.out_load.assign(static_cast<size_t>(total), 0);
    search.choice.assign(search.order.size(), 0);

    // shortest-path-tree plan as the starting incumbent
    RoutingPlan spt_plan =
        plan_from_tree(instance, build_spt(instance, ParentPolicy::min_id()));
    search.best_cost = plan_cost(instance, spt_plan);
    search.best_choice.clear();
    search.search(0);

    RoutingPlan witness;
    witness.paths.resize(static_cast<size_t>(total));
    if (search.best_choice.empty()) {
        witness = std::move(spt_plan);
    } else {
        for (size_t i = 0; i < search.order.size(); ++i) {
            witness.paths[static_cast<size_t>(search.order[i])] =
                (*search.paths_of[i])[static_cast<size_t>(search.best_choice[i])];
        }
    }
    return {search.best_cost, std::move(witness)};
}

HopTrace plan_to_trace(const Instance& instance, const RoutingPlan& plan) {
    check_plan(instance, plan);
    const int total = instance.graph.vertex_count();
    const int k = instance.capacity_k;

    // per directed edge: the readings crossing it; plus precedence pairs
    std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> crossing;
    std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<VertexId, VertexId>>> successors;
    std::map<std::pair<VertexId, VertexId>, int> indegree;
    for (VertexId v = 1; v < total; ++v) {
        const auto& path = plan.paths[static_cast<size_t>(v)];
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            std::pair<VertexId, VertexId> e{path[i], path[i + 1]};
            crossing[e].push_back(v);
            indegree.try_emplace(e, 0);
            if (i + 2 < path.size()) {
                std::pair<VertexId, VertexId> f{path[i + 1], path[i + 2]};
                successors[e].emplace_back(f);
                indegree.try_emplace(f, 0);
            }
        }
    }
    for (const auto& [e, succs] : successors) {
        for (const auto& f : succs) ++indegree[f];
    }

    // Kahn's algorithm with a min-heap over (from,to) keys, so the
    // topological order is deterministic.
    std::vector<std::pair<VertexId, VertexId>> ready;
    for (const auto& [e, deg] : indegree) {
        if (deg == 0) ready.push_back(e);
    }
    std::make_heap(ready.begin(), ready.end(), std::greater<>());
    std::vector<std::pair<VertexId, VertexId>> topo;
    while (!ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), std::greater<>());
        auto e = ready.back();
        ready.pop_back();
        topo.push_back(e);
        auto it = successors.find(e);
        if (it == successors.end()) continue;
        for (const auto& f : it->second) {
            if (--indegree[f] == 0) {
                ready.push_back(f);
                std::push_heap(ready.begin(), ready.end(), std::greater<>());
            }
        }
    }
    if (topo.size() != indegree.size()) {
        throw CyclicDependency("plan's edge-precedence relation has a cycle");
    }

    HopTrace trace;
    for (const auto& e : topo) {
        std::vector<VertexId>& origins = crossing[e];
        std::sort(origins.begin(), origins.end());
        std::vector<std::pair<VertexId, int>> pool;
        for (VertexId origin : origins) pool.emplace_back(origin, instance.size_of(origin));
        std::vector<std::vector<std::pair<VertexId, int>>> packets;
        if (instance.is_uccp()) {
            std::vector<std::pair<VertexId, int>> current;
            for (const auto& r : pool) {
                if (static_cast<int>(current.size()) == k) {
                    packets.push_back(std::move(current));
                    current.clear();
                }
                current.push_back(r);
            }
            if (!current.empty()) packets.push_back(std::move(current));
        } else {
            // the exact packer works on descending sizes; map its bin
            // assignment back to the pool's readings
            std::vector<size_t> order(pool.size());
            std::iota(order.begin(), order.end(), size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                return pool[a].second > pool[b].second;
            });
            std::vector<int> sorted_sizes;
            for (size_t i : order) sorted_sizes.push_back(pool[i].second);
            BinPacker packer = pack_exact(sorted_sizes, k);
            packets.resize(static_cast<size_t>(packer.best));
            for (size_t i = 0; i < order.size(); ++i) {
                packets[static_cast<size_t>(packer.best_assignment[i])].push_back(pool[order[i]]);
            }
        }
        for (auto& packet : packets) {
            std::sort(packet.begin(), packet.end());
            trace.hops.push_back(PacketHop{static_cast<int>(trace.hops.size()), e.first,
                                           e.second, std::move(packet)});
        }
    }
    return trace;
}

}  // namespace ccast
