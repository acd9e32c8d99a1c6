#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arbormatch {

// An input stream broke the simple-graph contract. `position` is the
// zero-based index of the first offending stream item.
class StreamValidationError : public std::runtime_error {
public:
    enum class Kind { SelfLoop, DuplicateEdge, VertexOutOfRange };

    StreamValidationError(Kind kind, std::size_t position)
        : std::runtime_error(describe(kind, position)), kind_(kind), position_(position) {}

    Kind kind() const { return kind_; }
    std::size_t position() const { return position_; }

    static const char* kind_name(Kind kind) {
        switch (kind) {
        case Kind::SelfLoop: return "self-loop";
        case Kind::DuplicateEdge: return "duplicate edge";
        case Kind::VertexOutOfRange: return "vertex id out of range";
        }
        return "invalid edge";
    }

private:
    static std::string describe(Kind kind, std::size_t position) {
        return std::string(kind_name(kind)) + " at stream position " + std::to_string(position);
    }

    Kind kind_;
    std::size_t position_;
};

// An exact oracle was asked for more than its configured size cap allows.
class InstanceTooLarge : public std::runtime_error {
public:
    InstanceTooLarge(const std::string& what_exceeded, std::size_t actual, std::size_t cap)
        : std::runtime_error(what_exceeded + " is " + std::to_string(actual) +
                             ", exceeds oracle cap " + std::to_string(cap)) {}
};

// Arboricity is undefined for a graph with no edges.
class EmptyGraphError : public std::runtime_error {
public:
    EmptyGraphError() : std::runtime_error("graph has no edges") {}
};

// An estimator configuration field is out of its allowed range.
class InvalidConfig : public std::runtime_error {
public:
    InvalidConfig(const std::string& field, const std::string& reason)
        : std::runtime_error("invalid config field '" + field + "': " + reason), field_(field) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// A prefix length outside 1..stream length was requested.
class PrefixOutOfRange : public std::out_of_range {
public:
    PrefixOutOfRange(std::size_t t, std::size_t stream_length)
        : std::out_of_range("prefix length " + std::to_string(t) + " outside 1.." +
                            std::to_string(stream_length)) {}
};

// An edge-list text file failed to parse. `line` is one-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace arbormatch
