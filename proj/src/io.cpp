#include "cyciso/io.hpp"

#include <fstream>
#include <sstream>

namespace cyciso {

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw format_error("encode_graph6: only the single-byte size form (n <= 62) is supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(const std::string& s) {
    if (s.empty()) throw format_error("decode_graph6: empty string (byte offset 0)");
    int b0 = static_cast<unsigned char>(s[0]);
    if (b0 == 126)
        throw format_error("decode_graph6: multi-byte size form (n > 62) not supported (byte offset 0)");
    if (b0 < 63 || b0 > 126) throw format_error("decode_graph6: byte out of range (byte offset 0)");
    int n = b0 - 63;
    int total_bits = n * (n - 1) / 2;
    int need = (total_bits + 5) / 6;
    if (static_cast<int>(s.size()) - 1 < need)
        throw format_error("decode_graph6: truncated bit stream (byte offset " + std::to_string(s.size()) + ")");
    if (static_cast<int>(s.size()) - 1 > need)
        throw format_error("decode_graph6: trailing data (byte offset " + std::to_string(1 + need) + ")");

    std::vector<std::pair<int, int>> edges;
    int bit_index = 0;
    for (int byte = 0; byte < need; ++byte) {
        int raw = static_cast<unsigned char>(s[static_cast<std::size_t>(1 + byte)]);
        if (raw < 63 || raw > 126)
            throw format_error("decode_graph6: byte out of range (byte offset " + std::to_string(1 + byte) + ")");
        int value = raw - 63;
        for (int k = 5; k >= 0; --k, ++bit_index) {
            int bit = (value >> k) & 1;
            if (bit_index >= total_bits) {
                if (bit != 0)
                    throw format_error("decode_graph6: nonzero padding (byte offset " +
                                       std::to_string(1 + byte) + ")");
                continue;
            }
            if (bit) {
                // recover the pair (i,j) of upper-triangle position bit_index
                int t = bit_index, j = 1;
                while (t >= j) {
                    t -= j;
                    ++j;
                }
                edges.emplace_back(t, j);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int declared_n = 0;
    bool saw_decl = false, saw_edge = false;
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only
        if (!saw_decl && !saw_edge && first.rfind("n=", 0) == 0) {
            try {
                declared_n = std::stoi(first.substr(2));
            } catch (const std::exception&) {
                throw format_error("parse_edge_list: malformed n= declaration (line " +
                                   std::to_string(lineno) + ")");
            }
            if (declared_n < 0)
                throw format_error("parse_edge_list: negative vertex count (line " + std::to_string(lineno) + ")");
            saw_decl = true;
            std::string extra;
            if (ls >> extra)
                throw format_error("parse_edge_list: trailing token after n= (line " + std::to_string(lineno) + ")");
            continue;
        }
        int u, v;
        std::istringstream retry(line);
        std::string second, extra;
        if (!(retry >> first >> second))
            throw format_error("parse_edge_list: expected two vertex ids (line " + std::to_string(lineno) + ")");
        if (retry >> extra)
            throw format_error("parse_edge_list: trailing token (line " + std::to_string(lineno) + ")");
        try {
            std::size_t pos = 0;
            u = std::stoi(first, &pos);
            if (pos != first.size()) throw std::invalid_argument("junk");
            v = std::stoi(second, &pos);
            if (pos != second.size()) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
            throw format_error("parse_edge_list: malformed token (line " + std::to_string(lineno) + ")");
        }
        if (u < 0 || v < 0)
            throw format_error("parse_edge_list: negative vertex id (line " + std::to_string(lineno) + ")");
        if (u == v) throw format_error("parse_edge_list: self-loop (line " + std::to_string(lineno) + ")");
        saw_edge = true;
        max_id = std::max(max_id, std::max(u, v));
        edges.emplace_back(u, v);
    }
    int n = std::max(declared_n, max_id + 1);
    return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(decode_graph6(line));
        } catch (const format_error& e) {
            throw format_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Graph> load_graphs(const std::string& path) {
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) return read_graph6_file(path);
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {parse_edge_list(buf.str())};
}

}  // namespace cyciso
