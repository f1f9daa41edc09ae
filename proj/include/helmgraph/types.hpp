#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace helm {

/// Vertex identifiers are arbitrary non-negative integers chosen by the
/// input; matrix columns always follow ascending id order.
using VertexId = long long;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input record; `record` is the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t record, const std::string& what)
        : Error("record " + std::to_string(record) + ": " + what), record_(record) {}
    std::size_t record() const noexcept { return record_; }

private:
    std::size_t record_;
};

class SelfLoopError : public ParseError {
public:
    explicit SelfLoopError(std::size_t record)
        : ParseError(record, "self-loop is not allowed") {}
};

class DuplicateEdgeError : public ParseError {
public:
    explicit DuplicateEdgeError(std::size_t record)
        : ParseError(record, "duplicate edge (unordered pair repeats)") {}
};

class NotPendantError : public Error {
public:
    explicit NotPendantError(VertexId v)
        : Error("vertex " + std::to_string(v) + " is not pendant"), vertex_(v) {}
    VertexId vertex() const noexcept { return vertex_; }

private:
    VertexId vertex_;
};

class CommonNeighborError : public Error {
public:
    explicit CommonNeighborError(std::size_t edge)
        : Error("edge " + std::to_string(edge) +
                ": endpoints share a neighbor, contraction hypothesis fails"),
          edge_(edge) {}
    std::size_t edge() const noexcept { return edge_; }

private:
    std::size_t edge_;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class NotSymmetricError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed (two routes to the same quantity
/// disagreed).  The CLI maps this to exit code 2.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace helm
