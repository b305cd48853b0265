#pragma once

#include <stdexcept>
#include <string>

namespace ccast {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedEdge : Error {
    using Error::Error;
};

struct DisconnectedGraph : Error {
    using Error::Error;
};

struct SizeOutOfRange : Error {
    SizeOutOfRange(int vertex_, const std::string& msg) : Error(msg), vertex(vertex_) {}
    int vertex;
};

struct ParseError : Error {
    using Error::Error;
};

struct TreeMismatch : Error {
    using Error::Error;
};

struct NotAGrid : Error {
    using Error::Error;
};

struct NotAGadget : Error {
    using Error::Error;
};

struct EllTooLarge : Error {
    using Error::Error;
};

// Replay failures carry the offending hop seq (or reading origin).
struct TraceError : Error {
    enum class Kind {
        CapacityExceeded,
        NonEdgeHop,
        ReadingLost,
        ReadingDuplicated,
        CausalityViolation,
    };
    TraceError(Kind kind_, long long ref_, const std::string& msg)
        : Error(msg), kind(kind_), ref(ref_) {}
    Kind kind;
    long long ref;  // hop seq for seq-anchored kinds, reading origin otherwise
};

struct InvalidPlan : Error {
    using Error::Error;
};

struct PackingTooLarge : Error {
    using Error::Error;
};

struct LimitsExceeded : Error {
    using Error::Error;
};

struct CyclicDependency : Error {
    using Error::Error;
};

}  // namespace ccast
