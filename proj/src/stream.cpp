#include "arbormatch/stream.hpp"

#include <stdexcept>
#include <unordered_set>

#include "arbormatch/errors.hpp"

namespace arbormatch {

EdgeStream EdgeStream::validate(const std::vector<std::pair<VertexId, VertexId>>& raw,
                                VertexId n) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(raw.size() * 2);

    for (std::size_t pos = 0; pos < raw.size(); ++pos) {
        const auto [a, b] = raw[pos];
        if (a == b)
            throw StreamValidationError(StreamValidationError::Kind::SelfLoop, pos);
        if (a >= n || b >= n)
            throw StreamValidationError(StreamValidationError::Kind::VertexOutOfRange, pos);
        Edge e(a, b);
        if (!seen.insert(e.key()).second)
            throw StreamValidationError(StreamValidationError::Kind::DuplicateEdge, pos);
        edges.push_back(e);
    }
    return EdgeStream(std::move(edges), n);
}

EdgeStream EdgeStream::from_validated(std::vector<Edge> edges, VertexId n) {
    return EdgeStream(std::move(edges), n);
}

}  // namespace arbormatch
