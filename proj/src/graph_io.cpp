#include "legal/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace legal {

namespace {

bool next_content_line(std::istream& in, std::string& line, long long& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void fail(long long lineno, const std::string& what) {
    throw ParseError("graph parse error at line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    long long lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError("empty graph file");

    long long n = -1, m = -1;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra)) fail(lineno, "expected header \"n m\"");
    }
    if (n < 0 || m < 0 || m > n * (n - 1) / 2) fail(lineno, "invalid header counts");

    Graph g{int(n)};
    for (long long e = 0; e < m; ++e) {
        if (!next_content_line(in, line, lineno)) {
            throw ParseError("graph file ends after " + std::to_string(e) + " of " +
                             std::to_string(m) + " edges");
        }
        std::istringstream ss(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra)) fail(lineno, "expected edge \"u v\"");
        if (u < 0 || v >= n || u >= v) fail(lineno, "edge must satisfy 0 <= u < v < n");
        if (g.adjacent(int(u), int(v))) fail(lineno, "duplicate edge");
        g.add_edge(int(u), int(v));
    }
    if (next_content_line(in, line, lineno)) fail(lineno, "trailing content after edge list");
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_graph(out, g);
}

}  // namespace legal
