#include "ccast/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace ccast {

Graph::Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges)
    : vertex_count_(vertex_count) {
    if (vertex_count < 1) {
        throw MalformedEdge("graph needs at least the sink vertex");
    }
    for (auto& [u, v] : edges) {
        if (u == v) {
            throw MalformedEdge("self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw MalformedEdge("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for " + std::to_string(vertex_count) + " vertices");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw MalformedEdge("duplicate edge in edge list");
    }
    edges_ = std::move(edges);
    adjacency_.assign(static_cast<size_t>(vertex_count), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<size_t>(u)].push_back(v);
        adjacency_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= vertex_count_) return false;
    const auto& nbrs = adjacency_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::connected() const {
    if (vertex_count_ == 0) return false;
    std::vector<char> seen(static_cast<size_t>(vertex_count_), 0);
    std::deque<VertexId> queue{kSink};
    seen[kSink] = 1;
    int reached = 1;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : adjacency_[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

bool Instance::is_uccp() const {
    for (size_t v = 1; v < sizes.size(); ++v) {
        if (sizes[v] != 1) return false;
    }
    return true;
}

Instance validate_instance(Instance instance) {
    if (instance.capacity_k < 1) {
        throw SizeOutOfRange(-1, "capacity k must be positive");
    }
    if (instance.sizes.size() != static_cast<size_t>(instance.graph.vertex_count())) {
        throw SizeOutOfRange(-1, "sizes vector does not match vertex count");
    }
    if (instance.sizes[kSink] != 0) {
        throw SizeOutOfRange(kSink, "sink must not hold a reading");
    }
    for (int v = 1; v < instance.graph.vertex_count(); ++v) {
        int s = instance.sizes[static_cast<size_t>(v)];
        if (s < 1 || s > instance.capacity_k) {
            throw SizeOutOfRange(v, "reading size " + std::to_string(s) + " at vertex " +
                                        std::to_string(v) + " outside [1," +
                                        std::to_string(instance.capacity_k) + "]");
        }
    }
    if (!instance.graph.connected()) {
        throw DisconnectedGraph("graph is not connected");
    }
    return instance;
}

DistanceMap bfs_distances(const Instance& instance) {
    const Graph& g = instance.graph;
    DistanceMap dist(static_cast<size_t>(g.vertex_count()), -1);
    std::deque<VertexId> queue{kSink};
    dist[kSink] = 0;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

ParentPolicy::ParentPolicy(Kind kind, std::uint64_t seed, std::vector<VertexId> preferred)
    : kind_(kind), seed_(seed), rng_(seed), preferred_(std::move(preferred)) {
    std::sort(preferred_.begin(), preferred_.end());
}

ParentPolicy ParentPolicy::prefer_set(std::vector<VertexId> preferred) {
    return ParentPolicy(Kind::PreferSet, 0, std::move(preferred));
}

VertexId ParentPolicy::choose(VertexId at, const std::vector<VertexId>& candidates) {
    switch (kind_) {
        case Kind::MinId:
            return candidates.front();
        case Kind::MaxId:
            return candidates.back();
        case Kind::Random:
            return candidates[static_cast<size_t>(rng_() % candidates.size())];
        case Kind::RoundRobin: {
            size_t& next = round_robin_next_[at];
            VertexId out = candidates[next % candidates.size()];
            ++next;
            return out;
        }
        case Kind::PreferSet:
            for (VertexId c : candidates) {
                if (std::binary_search(preferred_.begin(), preferred_.end(), c)) return c;
            }
            return candidates.front();
    }
    return candidates.front();
}

std::string ParentPolicy::tag() const {
    switch (kind_) {
        case Kind::MinId:
            return "min-id";
        case Kind::MaxId:
            return "max-id";
        case Kind::Random:
            return "random(seed=" + std::to_string(seed_) + ")";
        case Kind::RoundRobin:
            return "round-robin";
        case Kind::PreferSet:
            return "prefer-set(n=" + std::to_string(preferred_.size()) + ")";
    }
    return "?";
}

ShortestPathTree build_spt(const Instance& instance, ParentPolicy& policy) {
    DistanceMap dist = bfs_distances(instance);
    std::vector<VertexId> parent(static_cast<size_t>(instance.graph.vertex_count()), -1);
    std::vector<VertexId> candidates;
    for (int v = 1; v < instance.graph.vertex_count(); ++v) {
        candidates.clear();
        for (VertexId w : instance.graph.neighbors(v)) {
            if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(v)] - 1) {
                candidates.push_back(w);
            }
        }
        // neighbors() is sorted, so candidates already are.
        parent[static_cast<size_t>(v)] =
            candidates.size() == 1 ? candidates.front() : policy.choose(v, candidates);
    }
    return ShortestPathTree{std::move(parent), std::move(dist), policy.tag()};
}

ShortestPathTree build_spt(const Instance& instance, ParentPolicy&& policy) {
    return build_spt(instance, policy);
}

}  // namespace ccast
