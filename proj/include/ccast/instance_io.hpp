#pragma once

#include <string>

#include "ccast/graph.hpp"

namespace ccast {

// Line-oriented instance format:
//
//   uccp|ccp k=<int> n=<int>     header; n counts non-sink vertices
//   e <u> <v>                    one line per edge
//   s <v> <bytes>                one line per non-unit reading
//
// write_instance emits the canonical form (edges sorted, s-lines sorted,
// unit sizes omitted); read_instance accepts any line order and validates.
// write(read(text)) == text holds for canonical text.
std::string write_instance(const Instance& instance);
Instance read_instance(const std::string& text);

}  // namespace ccast
