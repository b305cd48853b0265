#include "ccast/trace_io.hpp"

#include <sstream>

namespace ccast {

std::string write_trace(const HopTrace& trace) {
    std::ostringstream out;
    for (const PacketHop& hop : trace.hops) {
        out << "h " << hop.seq << " " << hop.from << " " << hop.to << " ";
        for (size_t i = 0; i < hop.readings.size(); ++i) {
            if (i > 0) out << ",";
            out << hop.readings[i].first << ":" << hop.readings[i].second;
        }
        out << "\n";
    }
    return out.str();
}

HopTrace read_trace(const std::string& text) {
    HopTrace trace;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string tag, readings;
        PacketHop hop;
        if (!(row >> tag >> hop.seq >> hop.from >> hop.to >> readings) || tag != "h") {
            throw ParseError("bad trace line: " + line);
        }
        std::istringstream items(readings);
        std::string item;
        while (std::getline(items, item, ',')) {
            size_t colon = item.find(':');
            if (colon == std::string::npos) {
                throw ParseError("bad reading token '" + item + "' in line: " + line);
            }
            try {
                hop.readings.emplace_back(std::stoi(item.substr(0, colon)),
                                          std::stoi(item.substr(colon + 1)));
            } catch (const std::exception&) {
                throw ParseError("bad reading token '" + item + "' in line: " + line);
            }
        }
        if (hop.readings.empty()) {
            throw ParseError("hop without readings: " + line);
        }
        trace.hops.push_back(std::move(hop));
    }
    return trace;
}

}  // namespace ccast
