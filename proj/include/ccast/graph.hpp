#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ccast/errors.hpp"

namespace ccast {

using VertexId = int;

// Vertex 0 is always the sink.
inline constexpr VertexId kSink = 0;

// Undirected simple graph over vertex ids 0..vertex_count-1. The edge list
// and adjacency lists are kept in canonical sorted order, so everything
// downstream is independent of the order edges were supplied in.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
    bool has_edge(VertexId u, VertexId v) const;
    bool connected() const;

    bool operator==(const Graph& other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;  // u < v, sorted
    std::vector<std::vector<VertexId>> adjacency_;      // sorted per vertex
};

// A problem input: graph + packet capacity + per-vertex reading sizes in
// bytes. sizes[0] is 0 (the sink holds no reading); every other vertex must
// have 1 <= size <= capacity_k. UCCP is the all-unit-size special case.
struct Instance {
    Graph graph;
    int capacity_k = 1;
    std::vector<int> sizes;

    int reading_count() const { return graph.vertex_count() - 1; }
    int size_of(VertexId v) const { return sizes[static_cast<size_t>(v)]; }
    bool is_uccp() const;

    bool operator==(const Instance& other) const {
        return graph == other.graph && capacity_k == other.capacity_k && sizes == other.sizes;
    }
};

// Checks connectivity and size ranges; returns the instance unchanged.
// Throws DisconnectedGraph / SizeOutOfRange.
Instance validate_instance(Instance instance);

// d(v) = BFS hop distance from v to the sink. d(sink) = 0.
using DistanceMap = std::vector<int>;

DistanceMap bfs_distances(const Instance& instance);

// Tie-break rule used when a vertex has several neighbors one hop closer to
// the sink. random and round-robin advance internal state on every choice,
// so successive queries (and successive tree builds sharing one policy
// object) rotate through the candidates; both are deterministic given the
// construction arguments.
class ParentPolicy {
public:
    enum class Kind { MinId, MaxId, Random, RoundRobin, PreferSet };

    static ParentPolicy min_id() { return ParentPolicy(Kind::MinId, 0, {}); }
    static ParentPolicy max_id() { return ParentPolicy(Kind::MaxId, 0, {}); }
    static ParentPolicy random(std::uint64_t seed) { return ParentPolicy(Kind::Random, seed, {}); }
    static ParentPolicy round_robin() { return ParentPolicy(Kind::RoundRobin, 0, {}); }
    static ParentPolicy prefer_set(std::vector<VertexId> preferred);

    // candidates must be non-empty and sorted ascending.
    VertexId choose(VertexId at, const std::vector<VertexId>& candidates);

    Kind kind() const { return kind_; }
    std::string tag() const;

private:
    ParentPolicy(Kind kind, std::uint64_t seed, std::vector<VertexId> preferred);

    Kind kind_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    std::vector<VertexId> preferred_;  // sorted
    std::unordered_map<VertexId, size_t> round_robin_next_;
};

// Parent assignment realizing the BFS distances: parent[v] is a neighbor of
// v with d(parent) = d(v) - 1; parent[sink] = -1.
struct ShortestPathTree {
    std::vector<VertexId> parent;
    DistanceMap dist;
    std::string policy_tag;
};

ShortestPathTree build_spt(const Instance& instance, ParentPolicy& policy);
ShortestPathTree build_spt(const Instance& instance, ParentPolicy&& policy);

}  // namespace ccast
