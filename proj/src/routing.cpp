#include "ccast/routing.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ccast {

namespace {

using Reading = std::pair<VertexId, int>;  // (origin, size)
using Packet = std::vector<Reading>;

void emit(HopTrace& trace, VertexId from, VertexId to, Packet readings) {
    std::sort(readings.begin(), readings.end());
    trace.hops.push_back(PacketHop{static_cast<int>(trace.hops.size()), from, to,
                                   std::move(readings)});
}

// Splits pool (already ordered) into packets of at most k bytes, never
// splitting a reading. For unit sizes this is plain chunking; the caller
// supplies a pool ordered the way it wants the packets to form.
std::vector<Packet> chunk_sequential(const std::vector<Reading>& pool, int k) {
    std::vector<Packet> packets;
    Packet current;
    int load = 0;
    for (const Reading& r : pool) {
        if (load + r.second > k) {
            packets.push_back(std::move(current));
            current.clear();
            load = 0;
        }
        current.push_back(r);
        load += r.second;
    }
    if (!current.empty()) packets.push_back(std::move(current));
    return packets;
}

// First-fit-decreasing repackaging for CCP pools.
std::vector<Packet> pack_ffd(std::vector<Reading> pool, int k) {
    std::sort(pool.begin(), pool.end(), [](const Reading& a, const Reading& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<Packet> bins;
    std::vector<int> loads;
    for (const Reading& r : pool) {
        bool placed = false;
        for (size_t b = 0; b < bins.size(); ++b) {
            if (loads[b] + r.second <= k) {
                bins[b].push_back(r);
                loads[b] += r.second;
                placed = true;
                break;
            }
        }
        if (!placed) {
            bins.push_back({r});
            loads.push_back(r.second);
        }
    }
    return bins;
}

// The shared per-vertex drain loop: depth is any tree depth for the given
// parent map (children strictly deeper), so processing by decreasing depth
// hands every vertex its complete inbox before it sends.
HopTrace aggregate_over_tree(const Instance& instance, const std::vector<VertexId>& parent,
                             const std::vector<int>& depth) {
    const int k = instance.capacity_k;
    const int total = instance.graph.vertex_count();
    std::vector<VertexId> order;
    order.reserve(static_cast<size_t>(total) - 1);
    for (VertexId v = 1; v < total; ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (depth[static_cast<size_t>(a)] != depth[static_cast<size_t>(b)])
            return depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)];
        return a < b;
    });

    std::vector<std::vector<Packet>> inbox(static_cast<size_t>(total));
    HopTrace trace;
    for (VertexId v : order) {
        std::vector<Packet> outgoing;
        std::vector<Reading> pool{{v, instance.size_of(v)}};
        for (Packet& p : inbox[static_cast<size_t>(v)]) {
            int load = 0;
            for (const Reading& r : p) load += r.second;
            if (load == k) {
                outgoing.push_back(std::move(p));  // forwarded unchanged
            } else {
                pool.insert(pool.end(), p.begin(), p.end());
            }
        }
        std::sort(pool.begin(), pool.end());
        std::vector<Packet> repacked =
            instance.is_uccp() ? chunk_sequential(pool, k) : pack_ffd(std::move(pool), k);
        for (Packet& p : repacked) outgoing.push_back(std::move(p));

        VertexId to = parent[static_cast<size_t>(v)];
        for (Packet& p : outgoing) {
            inbox[static_cast<size_t>(to)].push_back(p);
            emit(trace, v, to, std::move(p));
        }
    }
    return trace;
}

}  // namespace

HopTrace run_spt(const Instance& instance, const ShortestPathTree& tree) {
    const int total = instance.graph.vertex_count();
    if (static_cast<int>(tree.parent.size()) != total ||
        static_cast<int>(tree.dist.size()) != total) {
        throw TreeMismatch("tree size does not match instance");
    }
    DistanceMap dist = bfs_distances(instance);
    if (dist != tree.dist) {
        throw TreeMismatch("tree distances disagree with BFS");
    }
    for (VertexId v = 1; v < total; ++v) {
        VertexId p = tree.parent[static_cast<size_t>(v)];
        if (p < 0 || !instance.graph.has_edge(v, p) ||
            dist[static_cast<size_t>(p)] != dist[static_cast<size_t>(v)] - 1) {
            throw TreeMismatch("parent of vertex " + std::to_string(v) +
                               " is not one hop closer to the sink");
        }
    }
    return aggregate_over_tree(instance, tree.parent, tree.dist);
}

HopTrace run_sptg(const Instance& instance) {
    auto dims = infer_grid_dims(instance);
    if (!dims) {
        throw NotAGrid("instance is not a gen_grid lattice");
    }
    auto [rows, cols] = *dims;
    const int total = instance.graph.vertex_count();
    std::vector<VertexId> parent(static_cast<size_t>(total), -1);
    std::vector<int> depth(static_cast<size_t>(total), 0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int id = r * cols + c;
            depth[static_cast<size_t>(id)] = r + c;
            if (id == kSink) continue;
            parent[static_cast<size_t>(id)] = r > 0 ? id - cols : id - 1;
        }
    }
    return aggregate_over_tree(instance, parent, depth);
}

HopTrace run_basic(const Instance& instance, std::uint64_t seed) {
    (void)seed;
    const int total = instance.graph.vertex_count();
    std::vector<VertexId> parent(static_cast<size_t>(total), -1);
    std::vector<int> depth(static_cast<size_t>(total), -1);
    // iterative DFS, ascending-id neighbor order
    std::vector<std::pair<VertexId, size_t>> stack{{kSink, 0}};
    depth[kSink] = 0;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& nbrs = instance.graph.neighbors(v);
        if (next >= nbrs.size()) {
            stack.pop_back();
            continue;
        }
        VertexId w = nbrs[next++];
        if (depth[static_cast<size_t>(w)] < 0) {
            depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
            parent[static_cast<size_t>(w)] = v;
            stack.emplace_back(w, 0);
        }
    }
    return aggregate_over_tree(instance, parent, depth);
}

HopTrace run_gadget_opt(const Instance& instance, const GadgetSpec& spec) {
    if (spec.ell < 2 || !(gen_gadget_instance(spec) == instance)) {
        throw NotAGadget("instance does not match the gadget spec");
    }
    const int k = spec.k;
    HopTrace trace;

    // Ships `load` (kept in a stable order) across one edge as ceil(|load|/k)
    // packets.
    auto ship = [&](VertexId from, VertexId to, const std::vector<Reading>& load) {
        for (Packet& p : chunk_sequential(load, k)) {
            emit(trace, from, to, std::move(p));
        }
    };

    std::vector<Reading> carry;  // readings that arrived at the next gateway
    for (int i = 1; i <= spec.ell; ++i) {
        const auto& g = spec.gadgets[static_cast<size_t>(i - 1)];
        std::vector<Reading> pool = std::move(carry);
        carry.clear();
        pool.emplace_back(g.gateway, 1);
        std::sort(pool.begin(), pool.end());

        // even split over the i*k lanes: lane j gets q (+1 for the first r)
        size_t lane_count = g.lanes.size();
        size_t q = pool.size() / lane_count;
        size_t r = pool.size() % lane_count;
        size_t taken = 0;
        VertexId exit_to = i < spec.ell ? spec.gadgets[static_cast<size_t>(i)].gateway : kSink;
        std::vector<std::vector<Reading>> feeders(lane_count);
        for (size_t j = 0; j < lane_count; ++j) {
            size_t share = q + (j < r ? 1 : 0);
            feeders[j].assign(pool.begin() + static_cast<long>(taken),
                              pool.begin() + static_cast<long>(taken + share));
            taken += share;
            if (!feeders[j].empty()) {
                ship(g.gateway, g.lanes[j].front(), feeders[j]);
            }
        }
        for (size_t j = 0; j < lane_count; ++j) {
            std::vector<Reading> load = std::move(feeders[j]);
            const auto& lane = g.lanes[j];
            for (size_t p = 0; p < lane.size(); ++p) {
                load.emplace_back(lane[p], 1);
                VertexId to = p + 1 < lane.size() ? lane[p + 1] : exit_to;
                ship(lane[p], to, load);
            }
            carry.insert(carry.end(), load.begin(), load.end());
        }
    }
    return trace;
}

Metrics validate_trace(const Instance& instance, const HopTrace& trace) {
    const int k = instance.capacity_k;
    const int total = instance.graph.vertex_count();
    // buffers[v][origin] == 1 when origin's reading currently sits at v
    std::vector<std::vector<char>> buffers(static_cast<size_t>(total),
                                           std::vector<char>(static_cast<size_t>(total), 0));
    std::vector<VertexId> location(static_cast<size_t>(total));
    for (VertexId v = 1; v < total; ++v) {
        buffers[static_cast<size_t>(v)][static_cast<size_t>(v)] = 1;
        location[static_cast<size_t>(v)] = v;
    }

    Metrics metrics;
    long long last_seq = -1;
    for (const PacketHop& hop : trace.hops) {
        if (hop.seq <= last_seq) {
            throw TraceError(TraceError::Kind::CausalityViolation, hop.seq,
                             "seq " + std::to_string(hop.seq) + " is not increasing");
        }
        last_seq = hop.seq;
        if (hop.from < 0 || hop.from >= total || hop.to < 0 || hop.to >= total ||
            !instance.graph.has_edge(hop.from, hop.to)) {
            throw TraceError(TraceError::Kind::NonEdgeHop, hop.seq,
                             "hop " + std::to_string(hop.seq) + " does not follow an edge");
        }
        if (hop.readings.empty()) {
            throw TraceError(TraceError::Kind::CausalityViolation, hop.seq,
                             "hop " + std::to_string(hop.seq) + " carries no readings");
        }
        int load = 0;
        VertexId prev_origin = -1;
        for (const auto& [origin, size] : hop.readings) {
            if (origin == prev_origin) {
                throw TraceError(TraceError::Kind::ReadingDuplicated, origin,
                                 "reading " + std::to_string(origin) + " duplicated in hop " +
                                     std::to_string(hop.seq));
            }
            prev_origin = origin;
            if (origin < 1 || origin >= total || size != instance.size_of(origin) ||
                !buffers[static_cast<size_t>(hop.from)][static_cast<size_t>(origin)]) {
                throw TraceError(TraceError::Kind::CausalityViolation, hop.seq,
                                 "hop " + std::to_string(hop.seq) + " moves reading " +
                                     std::to_string(origin) + " that is not at vertex " +
                                     std::to_string(hop.from));
            }
            load += size;
        }
        if (load > k) {
            throw TraceError(TraceError::Kind::CapacityExceeded, hop.seq,
                             "hop " + std::to_string(hop.seq) + " carries " +
                                 std::to_string(load) + " bytes > k=" + std::to_string(k));
        }
        for (const auto& [origin, size] : hop.readings) {
            buffers[static_cast<size_t>(hop.from)][static_cast<size_t>(origin)] = 0;
            buffers[static_cast<size_t>(hop.to)][static_cast<size_t>(origin)] = 1;
            location[static_cast<size_t>(origin)] = hop.to;
        }
        metrics.total_hops += 1;
        metrics.full_hops += load == k ? 1 : 0;
        metrics.partial_hops += load < k ? 1 : 0;
        metrics.reading_distance_sum += static_cast<long long>(hop.readings.size());
    }
    for (VertexId v = 1; v < total; ++v) {
        if (location[static_cast<size_t>(v)] != kSink) {
            throw TraceError(TraceError::Kind::ReadingLost, v,
                             "reading " + std::to_string(v) + " never reached the sink");
        }
    }
    return metrics;
}

bool check_shortest_path_property(const Instance& instance, const HopTrace& trace) {
    DistanceMap dist = bfs_distances(instance);
    for (const PacketHop& hop : trace.hops) {
        if (dist[static_cast<size_t>(hop.to)] != dist[static_cast<size_t>(hop.from)] - 1) {
            return false;
        }
    }
    return true;
}

std::vector<int> partial_sends_per_vertex(const Instance& instance, const HopTrace& trace) {
    std::vector<int> partials(static_cast<size_t>(instance.graph.vertex_count()), 0);
    for (const PacketHop& hop : trace.hops) {
        if (hop.payload() < instance.capacity_k) {
            ++partials[static_cast<size_t>(hop.from)];
        }
    }
    return partials;
}

bool check_elementary_property(const Instance& instance, const HopTrace& trace) {
    for (int count : partial_sends_per_vertex(instance, trace)) {
        if (count > 1) return false;
    }
    return true;
}

}  // namespace ccast
