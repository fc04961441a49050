#include "meg/io.hpp"

#include <sstream>

#include "meg/error.hpp"

namespace meg {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::string where(int line_no) { return "line " + std::to_string(line_no) + ": "; }

/// Reads exactly `count` integers from the line; anything else is an error.
std::vector<long long> parse_ints(const std::string& line, int count, int line_no) {
    std::istringstream fields(line);
    std::vector<long long> values;
    long long value;
    while (fields >> value) values.push_back(value);
    if (!fields.eof() || static_cast<int>(values.size()) != count) {
        throw InvalidInput(where(line_no) + "expected " + std::to_string(count) + " integers");
    }
    return values;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw InvalidInput("missing \"n m\" header");
    auto header = parse_ints(line, 2, line_no);
    if (header[0] < 0 || header[1] < 0 || header[0] > (1 << 24) || header[1] > (1LL << 28)) {
        throw InvalidInput(where(line_no) + "header values out of range");
    }
    const int n = static_cast<int>(header[0]);
    const long long m = header[1];

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (next_content_line(in, line, line_no)) {
        auto uv = parse_ints(line, 2, line_no);
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n) {
            throw InvalidInput(where(line_no) + "endpoint outside 0.." + std::to_string(n - 1));
        }
        edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw InvalidInput("header declares " + std::to_string(m) + " edges but file has " +
                           std::to_string(edges.size()));
    }
    return Graph::build(n, edges);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace meg
