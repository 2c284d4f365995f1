#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "legal/graph.hpp"

namespace legal {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
/// Blank lines and lines starting with '#' are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace legal
