#include "ccast/instance_io.hpp"

#include <sstream>

namespace ccast {

std::string write_instance(const Instance& instance) {
    std::ostringstream out;
    out << (instance.is_uccp() ? "uccp" : "ccp") << " k=" << instance.capacity_k
        << " n=" << instance.reading_count() << "\n";
    for (const auto& [u, v] : instance.graph.edges()) {
        out << "e " << u << " " << v << "\n";
    }
    for (int v = 1; v < instance.graph.vertex_count(); ++v) {
        if (instance.size_of(v) != 1) {
            out << "s " << v << " " << instance.size_of(v) << "\n";
        }
    }
    return out.str();
}

Instance read_instance(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError("empty instance file");
    }
    std::istringstream head(header);
    std::string mode, kfield, nfield;
    if (!(head >> mode >> kfield >> nfield) || (mode != "uccp" && mode != "ccp") ||
        kfield.rfind("k=", 0) != 0 || nfield.rfind("n=", 0) != 0) {
        throw ParseError("bad header: " + header);
    }
    int k = 0, n = 0;
    try {
        k = std::stoi(kfield.substr(2));
        n = std::stoi(nfield.substr(2));
    } catch (const std::exception&) {
        throw ParseError("bad header numbers: " + header);
    }
    if (n < 0 || k < 1) {
        throw ParseError("bad header values: " + header);
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> sizes(static_cast<size_t>(n) + 1, 1);
    sizes[0] = 0;
    std::vector<char> size_seen(static_cast<size_t>(n) + 1, 0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "e") {
            int u, v;
            if (!(row >> u >> v)) throw ParseError("bad edge line: " + line);
            edges.emplace_back(u, v);
        } else if (tag == "s") {
            int v, bytes;
            if (!(row >> v >> bytes)) throw ParseError("bad size line: " + line);
            if (v < 1 || v > n) throw ParseError("size line for unknown vertex: " + line);
            if (size_seen[static_cast<size_t>(v)]) {
                throw ParseError("duplicate size line for vertex " + std::to_string(v));
            }
            size_seen[static_cast<size_t>(v)] = 1;
            sizes[static_cast<size_t>(v)] = bytes;
        } else {
            throw ParseError("unknown line: " + line);
        }
    }

    Instance instance{Graph(n + 1, std::move(edges)), k, std::move(sizes)};
    if ((mode == "uccp") != instance.is_uccp()) {
        throw ParseError("header mode does not match reading sizes");
    }
    return validate_instance(std::move(instance));
}

}  // namespace ccast
