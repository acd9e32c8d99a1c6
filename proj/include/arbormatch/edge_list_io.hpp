#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbormatch/stream.hpp"

namespace arbormatch {

// Edge-list text format: one edge per line as two base-10 integers separated
// by whitespace, '#' lines are comments, and an optional "# n=<int>" header
// declares the vertex count. ASCII, LF line endings.

struct EdgeListFile {
    std::vector<std::pair<VertexId, VertexId>> edges;  // raw pairs, file order
    std::vector<std::size_t> lines;                    // 1-based source line per pair
    std::optional<VertexId> declared_n;
};

EdgeListFile read_edge_list(std::istream& in);            // throws ParseError
EdgeListFile read_edge_list_file(const std::string& path);  // + std::runtime_error on I/O

void write_edge_list(std::ostream& out, const EdgeStream& s);  // includes the n header
void write_edge_list_file(const std::string& path, const EdgeStream& s);

}  // namespace arbormatch
