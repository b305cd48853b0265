#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccast/graph.hpp"

namespace ccast {

// Path of n unit-reading vertices; vertex i sits at distance i from the
// sink. A sizes override (indexed by distance-1) turns it into a CCP line.
Instance gen_line(int n, int k, const std::vector<int>& sizes = {});

// rows x cols lattice, sink at row 1 / column 1, row-major vertex ids
// (vertex (r,c), 1-based, has id (r-1)*cols + (c-1)), all unit readings.
Instance gen_grid(int rows, int cols, int k);

// Uniform random recursive tree: vertex i attaches to a uniformly random
// existing vertex. Deterministic per seed.
Instance gen_random_tree(int n, int k, std::uint64_t seed);

// Random recursive spanning tree plus each non-tree pair added
// independently with probability density. Deterministic per seed.
Instance gen_random_connected(int n, double density, int k, std::uint64_t seed);

// Layered lower-bound instance: ell gadgets between the sink and the far
// end, capacity k = ell!. Gadget i (1 = farthest) has i*k parallel lanes of
// k/i vertices plus one gateway. The gateway connects to every lane tail of
// its own gadget (lane 0, the corridor segment, via a plain edge; the rest
// via off-ramps) and to every lane head of gadget i-1 (on-ramps). Heads of
// gadget ell connect directly to the sink. Every vertex, gateways included,
// carries a unit reading.
struct GadgetSpec {
    struct Gadget {
        VertexId gateway = -1;
        // lanes[j] lists lane j's vertices from tail to head; lane 0 is the
        // corridor (SPC) segment.
        std::vector<std::vector<VertexId>> lanes;
    };

    int ell = 0;
    int k = 0;                    // ell!
    std::vector<Gadget> gadgets;  // gadgets[i-1] is gadget i

    int gadget_of(VertexId v) const;  // 1-based, 0 for the sink
    bool is_gateway(VertexId v) const;
    bool is_spc(VertexId v) const;  // lies on a corridor segment
    bool is_head(VertexId v) const;
    bool is_tail(VertexId v) const;
    std::vector<VertexId> spc_vertices() const;  // ascending
};

Instance gen_gadget_instance(const GadgetSpec& spec);
std::pair<Instance, GadgetSpec> gen_gadget(int ell);

// Sidecar annotation format, one flag per line, ascending vertex id:
//   a <v> gateway|spc|head|tail gadget=<i>
std::string write_annotations(const GadgetSpec& spec);
// Recovers the spec (ell is read off the annotations, the construction is
// rebuilt and cross-checked against both the annotations and the instance).
GadgetSpec read_annotations(const std::string& text, const Instance& instance);

// Set-cover reduction: level 2 vertices are the subsets, level 3 the ground
// elements, plus k-1 enforcer leaves per subset; k = max subset size.
struct SetCoverSpec {
    int ground_size = 0;
    std::vector<std::vector<int>> subsets;  // 1-based ground elements
};

// Vertex ids: subsets 1..m, elements m+1..m+n, then enforcers grouped by
// subset.
Instance gen_setcover(const SetCoverSpec& spec);

// SET-PARTITION reduction: elements (each <= k, summing to 2k) become
// readings on a line or on leaves behind a neck vertex of size k.
struct SetPartitionSpec {
    enum class Shape { Line, NeckTree };
    std::vector<int> elements;
    int k = 0;
    Shape shape = Shape::NeckTree;
};

// Line shape: first listed element lands farthest from the sink. Neck-tree
// shape: neck is vertex 1, leaf j+1 carries element j.
Instance gen_setpartition(const SetPartitionSpec& spec);

// Recognizes instances laid out exactly like gen_grid; returns (rows, cols).
std::optional<std::pair<int, int>> infer_grid_dims(const Instance& instance);

}  // namespace ccast
