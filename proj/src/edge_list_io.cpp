#include "arbormatch/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "arbormatch/errors.hpp"

namespace arbormatch {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view text) {
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    return text;
}

// Parses one base-10 vertex id off the front of `text`, advancing past it.
std::optional<VertexId> take_vertex_id(std::string_view& text) {
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    std::uint64_t value = 0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) return std::nullopt;
    if (value > std::numeric_limits<VertexId>::max()) return std::nullopt;
    if (ptr != end && !is_space(*ptr)) return std::nullopt;
    text.remove_prefix(static_cast<std::size_t>(ptr - begin));
    return static_cast<VertexId>(value);
}

}  // namespace

EdgeListFile read_edge_list(std::istream& in) {
    EdgeListFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            std::string_view rest = trim(text.substr(1));
            if (rest.rfind("n=", 0) == 0) {
                if (file.declared_n)
                    throw ParseError(line_no, "duplicate \"# n=\" header");
                std::string_view digits = rest.substr(2);
                auto n = take_vertex_id(digits);
                if (!n || !trim(digits).empty())
                    throw ParseError(line_no, "malformed \"# n=<int>\" header");
                file.declared_n = *n;
            }
            continue;
        }
        auto a = take_vertex_id(text);
        auto b = take_vertex_id(text);
        if (!a || !b || !trim(text).empty())
            throw ParseError(line_no, "expected two base-10 vertex ids");
        file.edges.emplace_back(*a, *b);
        file.lines.push_back(line_no);
    }
    return file;
}

EdgeListFile read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeStream& s) {
    out << "# n=" << s.vertex_count() << "\n";
    for (const Edge& e : s.edges()) out << e.u << " " << e.v << "\n";
}

void write_edge_list_file(const std::string& path, const EdgeStream& s) {
    std::ofstream out(path, std::ios::binary);  // keep LF endings everywhere
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(out, s);
    if (!out.flush()) throw std::runtime_error("failed writing " + path);
}

}  // namespace arbormatch
