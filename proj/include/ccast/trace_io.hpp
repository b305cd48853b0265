#pragma once

#include <string>

#include "ccast/routing.hpp"

namespace ccast {

// One line per hop:
//   h <seq> <from> <to> <origin:size,...>
// Readings are listed in ascending origin order; round-trips bit-exactly.
std::string write_trace(const HopTrace& trace);
HopTrace read_trace(const std::string& text);

}  // namespace ccast
