#pragma once

#include <stdexcept>
#include <string>

namespace golod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vertex of [m] that no facet covers.
struct GhostVertexError : Error {
    int vertex;
    explicit GhostVertexError(int v)
        : Error("ghost vertex: vertex " + std::to_string(v) + " appears in no facet"), vertex(v) {}
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct EmptySubsetError : Error {
    EmptySubsetError() : Error("vertex subset must be non-empty") {}
};

struct NotSimplicialError : Error {
    using Error::Error;
};

struct DimensionTooHighError : Error {
    using Error::Error;
};

// The conditional lemma behind the edge/product criterion was invoked with
// its surjectivity hypothesis unsatisfied.
struct HypothesisNotMetError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace golod
