#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cyciso/graph.hpp"

namespace cyciso {

/// Raised on malformed graph6 or edge-list input; the message carries the
/// byte offset or line number.
class format_error : public std::runtime_error {
public:
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Standard graph6, single-byte size form (n <= 62): byte 1 is n+63, then the
/// upper-triangle adjacency bits in column order packed into 6-bit groups,
/// each emitted as value+63.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& s);

/// Whitespace-separated vertex pairs, one edge per line; '#' starts a
/// comment; an optional first line "n=<int>" declares isolated vertices.
Graph parse_edge_list(const std::string& text);

/// One graph per line.
std::vector<Graph> read_graph6_file(const std::string& path);

/// Dispatch on extension: ".g6" reads a graph6 file (possibly many graphs),
/// anything else is parsed as a single edge list.
std::vector<Graph> load_graphs(const std::string& path);

}  // namespace cyciso
