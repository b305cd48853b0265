#pragma once

#include <cstdint>
#include <vector>

#include "ccast/generators.hpp"
#include "ccast/graph.hpp"

namespace ccast {

// One packet crossing one edge. readings lists (origin, size) pairs sorted
// by origin; their sizes sum to at most capacity_k.
struct PacketHop {
    int seq = 0;
    VertexId from = -1;
    VertexId to = -1;
    std::vector<std::pair<VertexId, int>> readings;

    int payload() const {
        int total = 0;
        for (const auto& [origin, size] : readings) total += size;
        return total;
    }

    bool operator==(const PacketHop& other) const {
        return seq == other.seq && from == other.from && to == other.to &&
               readings == other.readings;
    }
};

// The universal router output: an ordered event list that replays against
// the instance (see validate_trace).
struct HopTrace {
    std::vector<PacketHop> hops;

    bool operator==(const HopTrace& other) const { return hops == other.hops; }
};

struct Metrics {
    long long total_hops = 0;
    long long full_hops = 0;     // payload == k
    long long partial_hops = 0;  // payload < k
    long long reading_distance_sum = 0;
};

// Aggregation along a shortest path tree: vertices drain in decreasing
// depth order (ties by ascending id); incoming full packets are forwarded
// unchanged, everything else is repacked into maximal full packets plus at
// most one partial. CCP instances repack with first-fit-decreasing instead
// (a documented extension; elementary packing is only defined for UCCP).
HopTrace run_spt(const Instance& instance, const ShortestPathTree& tree);

// run_spt over the grid-specific tree: all vertical edges plus the row-1
// horizontal edges. The instance must be laid out exactly like gen_grid.
HopTrace run_sptg(const Instance& instance);

// Baseline: same aggregation over a depth-first-search tree rooted at the
// sink, neighbors visited in ascending id order. The seed is reserved for a
// randomized-order variant and is currently unused.
HopTrace run_basic(const Instance& instance, std::uint64_t seed = 0);

// The layered-instance router that beats every tree algorithm: each gateway
// splits everything it has evenly across its gadget's lanes, lanes sweep
// their local readings into (near-)full packets at the heads. Deliberately
// not elementary at the gateways.
HopTrace run_gadget_opt(const Instance& instance, const GadgetSpec& spec);

// Replays the trace against per-vertex buffers, enforcing edge existence,
// capacity, causality and exactly-once delivery. Returns the hop metrics.
// Throws TraceError.
Metrics validate_trace(const Instance& instance, const HopTrace& trace);

// True iff every hop strictly decreases BFS distance to the sink.
bool check_shortest_path_property(const Instance& instance, const HopTrace& trace);

// True iff no vertex sends more than one partial packet over the whole
// trace.
bool check_elementary_property(const Instance& instance, const HopTrace& trace);

// Partial packets sent per vertex; the elementary checker is "all <= 1".
std::vector<int> partial_sends_per_vertex(const Instance& instance, const HopTrace& trace);

}  // namespace ccast
