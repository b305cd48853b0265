#include "ccast/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace ccast {

namespace {

std::vector<int> unit_sizes(int n) {
    std::vector<int> sizes(static_cast<size_t>(n) + 1, 1);
    sizes[0] = 0;
    return sizes;
}

// All draws go through mt19937_64 directly; its output sequence is pinned by
// the standard, so generated instances are identical across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

bool bernoulli(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

Instance gen_line(int n, int k, const std::vector<int>& sizes) {
    if (n < 1 || k < 1) {
        throw Error("gen_line requires n >= 1 and k >= 1");
    }
    if (!sizes.empty() && sizes.size() != static_cast<size_t>(n)) {
        throw Error("gen_line sizes override must have one entry per vertex");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int v = 1; v <= n; ++v) {
        edges.emplace_back(v - 1, v);
    }
    std::vector<int> s = unit_sizes(n);
    for (size_t i = 0; i < sizes.size(); ++i) {
        s[i + 1] = sizes[i];
    }
    return validate_instance({Graph(n + 1, std::move(edges)), k, std::move(s)});
}

Instance gen_grid(int rows, int cols, int k) {
    if (rows < 1 || cols < 1 || k < 1) {
        throw Error("gen_grid requires positive dimensions and k");
    }
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    int n = rows * cols - 1;
    return validate_instance({Graph(n + 1, std::move(edges)), k, unit_sizes(n)});
}

Instance gen_random_tree(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1) {
        throw Error("gen_random_tree requires n >= 1 and k >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int v = 1; v <= n; ++v) {
        edges.emplace_back(static_cast<VertexId>(bounded(rng, static_cast<std::uint64_t>(v))), v);
    }
    return validate_instance({Graph(n + 1, std::move(edges)), k, unit_sizes(n)});
}

Instance gen_random_connected(int n, double density, int k, std::uint64_t seed) {
    if (n < 1 || k < 1 || density < 0.0 || density > 1.0) {
        throw Error("gen_random_connected requires n >= 1, k >= 1, density in [0,1]");
    }
    std::mt19937_64 rng(seed);
    std::set<std::pair<VertexId, VertexId>> edges;
    for (int v = 1; v <= n; ++v) {
        edges.emplace(static_cast<VertexId>(bounded(rng, static_cast<std::uint64_t>(v))), v);
    }
    for (int u = 0; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (!edges.count({u, v}) && bernoulli(rng, density)) {
                edges.emplace(u, v);
            }
        }
    }
    std::vector<std::pair<VertexId, VertexId>> edge_list(edges.begin(), edges.end());
    return validate_instance({Graph(n + 1, std::move(edge_list)), k, unit_sizes(n)});
}

int GadgetSpec::gadget_of(VertexId v) const {
    for (size_t i = 0; i < gadgets.size(); ++i) {
        if (gadgets[i].gateway == v) return static_cast<int>(i) + 1;
        for (const auto& lane : gadgets[i].lanes) {
            if (std::binary_search(lane.begin(), lane.end(), v)) {
                return static_cast<int>(i) + 1;
            }
        }
    }
    return 0;
}

bool GadgetSpec::is_gateway(VertexId v) const {
    for (const auto& g : gadgets) {
        if (g.gateway == v) return true;
    }
    return false;
}

bool GadgetSpec::is_spc(VertexId v) const {
    for (const auto& g : gadgets) {
        if (std::binary_search(g.lanes[0].begin(), g.lanes[0].end(), v)) return true;
    }
    return false;
}

bool GadgetSpec::is_head(VertexId v) const {
    for (const auto& g : gadgets) {
        for (const auto& lane : g.lanes) {
            if (lane.back() == v) return true;
        }
    }
    return false;
}

bool GadgetSpec::is_tail(VertexId v) const {
    for (const auto& g : gadgets) {
        for (const auto& lane : g.lanes) {
            if (lane.front() == v) return true;
        }
    }
    return false;
}

std::vector<VertexId> GadgetSpec::spc_vertices() const {
    std::vector<VertexId> out;
    for (const auto& g : gadgets) {
        out.insert(out.end(), g.lanes[0].begin(), g.lanes[0].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Instance, GadgetSpec> gen_gadget(int ell) {
    if (ell < 2) {
        throw Error("gen_gadget requires ell >= 2");
    }
    if (ell > 6) {
        throw EllTooLarge("ell=" + std::to_string(ell) + " exceeds the memory guard (max 6)");
    }
    int k = 1;
    for (int i = 2; i <= ell; ++i) k *= i;

    GadgetSpec spec;
    spec.ell = ell;
    spec.k = k;
    VertexId next = 1;
    for (int i = 1; i <= ell; ++i) {
        GadgetSpec::Gadget g;
        int lane_count = i * k;
        int lane_len = k / i;
        g.lanes.resize(static_cast<size_t>(lane_count));
        for (int j = 0; j < lane_count; ++j) {
            for (int p = 0; p < lane_len; ++p) {
                g.lanes[static_cast<size_t>(j)].push_back(next++);
            }
        }
        g.gateway = next++;
        spec.gadgets.push_back(std::move(g));
    }

    return {gen_gadget_instance(spec), std::move(spec)};
}

Instance gen_gadget_instance(const GadgetSpec& spec) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= spec.ell; ++i) {
        const auto& g = spec.gadgets[static_cast<size_t>(i - 1)];
        for (const auto& lane : g.lanes) {
            for (size_t p = 0; p + 1 < lane.size(); ++p) {
                edges.emplace_back(lane[p], lane[p + 1]);
            }
            // plain corridor edge for lane 0, off-ramps for the rest
            edges.emplace_back(g.gateway, lane.front());
            if (i == spec.ell) {
                edges.emplace_back(lane.back(), kSink);
            } else {
                // on-ramp into the next gadget's gateway
                edges.emplace_back(lane.back(), spec.gadgets[static_cast<size_t>(i)].gateway);
            }
        }
    }
    int n = spec.ell * (spec.k * spec.k + 1);
    return validate_instance({Graph(n + 1, std::move(edges)), spec.k, unit_sizes(n)});
}

std::string write_annotations(const GadgetSpec& spec) {
    // (vertex, flag rank, gadget) rows; flag ranks keep a stable order
    std::vector<std::tuple<VertexId, int, int>> rows;
    for (int i = 1; i <= spec.ell; ++i) {
        const auto& g = spec.gadgets[static_cast<size_t>(i - 1)];
        rows.emplace_back(g.gateway, 0, i);
        for (VertexId v : g.lanes[0]) {
            rows.emplace_back(v, 1, i);
        }
        for (const auto& lane : g.lanes) {
            rows.emplace_back(lane.back(), 2, i);
            rows.emplace_back(lane.front(), 3, i);
        }
    }
    std::sort(rows.begin(), rows.end());
    static const char* kFlagNames[] = {"gateway", "spc", "head", "tail"};
    std::ostringstream out;
    for (const auto& [v, flag, i] : rows) {
        out << "a " << v << " " << kFlagNames[flag] << " gadget=" << i << "\n";
    }
    return out.str();
}

GadgetSpec read_annotations(const std::string& text, const Instance& instance) {
    std::istringstream in(text);
    std::string line;
    int ell = 0;
    bool any = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string tag, flag, gadget_field;
        int v;
        if (!(row >> tag >> v >> flag >> gadget_field) || tag != "a" ||
            gadget_field.rfind("gadget=", 0) != 0) {
            throw ParseError("bad annotation line: " + line);
        }
        if (flag != "gateway" && flag != "spc" && flag != "head" && flag != "tail") {
            throw ParseError("unknown annotation flag: " + line);
        }
        int i = 0;
        try {
            i = std::stoi(gadget_field.substr(7));
        } catch (const std::exception&) {
            throw ParseError("bad gadget index: " + line);
        }
        ell = std::max(ell, i);
        any = true;
    }
    if (!any) {
        throw NotAGadget("no annotations present");
    }
    auto [reference, spec] = gen_gadget(ell);
    if (!(reference == instance)) {
        throw NotAGadget("instance does not match the reference construction for ell=" +
                         std::to_string(ell));
    }
    if (write_annotations(spec) != text) {
        throw NotAGadget("annotations do not match the reference construction");
    }
    return spec;
}

Instance gen_setcover(const SetCoverSpec& spec) {
    int n = spec.ground_size;
    int m = static_cast<int>(spec.subsets.size());
    if (n < 1 || m < 1) {
        throw Error("gen_setcover requires a ground set and at least one subset");
    }
    int k = 0;
    std::vector<char> covered(static_cast<size_t>(n) + 1, 0);
    for (const auto& subset : spec.subsets) {
        k = std::max(k, static_cast<int>(subset.size()));
        for (int x : subset) {
            if (x < 1 || x > n) {
                throw Error("subset element " + std::to_string(x) + " outside ground set");
            }
            covered[static_cast<size_t>(x)] = 1;
        }
    }
    for (int x = 1; x <= n; ++x) {
        if (!covered[static_cast<size_t>(x)]) {
            throw Error("ground element " + std::to_string(x) + " is covered by no subset");
        }
    }

    // ids: subsets 1..m, elements m+1..m+n, then k-1 enforcers per subset
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= m; ++i) {
        edges.emplace_back(kSink, i);
    }
    for (int i = 1; i <= m; ++i) {
        for (int x : spec.subsets[static_cast<size_t>(i - 1)]) {
            edges.emplace_back(i, m + x);
        }
    }
    VertexId next = m + n + 1;
    for (int i = 1; i <= m; ++i) {
        for (int e = 0; e < k - 1; ++e) {
            edges.emplace_back(i, next++);
        }
    }
    int total = m + n + m * (k - 1);
    return validate_instance({Graph(total + 1, std::move(edges)), k, unit_sizes(total)});
}

Instance gen_setpartition(const SetPartitionSpec& spec) {
    int n = static_cast<int>(spec.elements.size());
    if (n < 1 || spec.k < 1) {
        throw Error("gen_setpartition requires elements and k >= 1");
    }
    long long sum = 0;
    for (int x : spec.elements) {
        if (x < 1 || x > spec.k) {
            throw Error("element " + std::to_string(x) + " outside [1,k]");
        }
        sum += x;
    }
    if (sum != 2LL * spec.k) {
        throw Error("elements must sum to 2k (got " + std::to_string(sum) + ")");
    }

    if (spec.shape == SetPartitionSpec::Shape::Line) {
        // first listed element farthest: vertex at distance d carries
        // element n+1-d
        std::vector<int> sizes(static_cast<size_t>(n));
        for (int d = 1; d <= n; ++d) {
            sizes[static_cast<size_t>(d - 1)] = spec.elements[static_cast<size_t>(n - d)];
        }
        return gen_line(n, spec.k, sizes);
    }

    // neck-tree: leaves 2..n+1 -> neck 1 -> sink
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.emplace_back(kSink, 1);
    for (int j = 0; j < n; ++j) {
        edges.emplace_back(1, 2 + j);
    }
    std::vector<int> sizes(static_cast<size_t>(n) + 2, 0);
    sizes[1] = spec.k;
    for (int j = 0; j < n; ++j) {
        sizes[static_cast<size_t>(2 + j)] = spec.elements[static_cast<size_t>(j)];
    }
    return validate_instance({Graph(n + 2, std::move(edges)), spec.k, std::move(sizes)});
}

std::optional<std::pair<int, int>> infer_grid_dims(const Instance& instance) {
    int total = instance.graph.vertex_count();
    for (int cols = 1; cols <= total; ++cols) {
        if (total % cols != 0) continue;
        int rows = total / cols;
        size_t expected = static_cast<size_t>(rows) * (cols - 1) + static_cast<size_t>(cols) * (rows - 1);
        if (instance.graph.edges().size() != expected) continue;
        bool match = true;
        for (int r = 0; r < rows && match; ++r) {
            for (int c = 0; c < cols && match; ++c) {
                int id = r * cols + c;
                if (c + 1 < cols && !instance.graph.has_edge(id, id + 1)) match = false;
                if (r + 1 < rows && !instance.graph.has_edge(id, id + cols)) match = false;
            }
        }
        if (match) return std::make_pair(rows, cols);
    }
    return std::nullopt;
}

}  // namespace ccast
