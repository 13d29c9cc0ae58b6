#pragma once

// graph6 interchange: one graph per ASCII line. Header byte is n+63 for
// n <= 62, or '~' followed by three 6-bit digits for larger n. Edge bits are
// the upper triangle in column-major order, packed six per byte (MSB first),
// each byte offset by 63, with zero padding in the final byte.

#include <string>
#include <string_view>

#include "otd/graph.hpp"

namespace otd {

class Graph6ParseError : public std::runtime_error {
public:
    enum class Kind {
        bad_header,        // header byte missing or outside the printable range
        size_out_of_range, // encoded n is not in 1..64
        truncated,         // fewer edge bytes than n(n-1)/2 bits require
        trailing_data,     // extra bytes after the edge bits
        bad_char,          // edge byte outside 63..126
        nonzero_padding,   // padding bits in the last byte are set
    };

    Graph6ParseError(Kind kind_, const std::string& what) : std::runtime_error(what), kind(kind_) {}

    Kind kind;
};

namespace detail {

inline std::string_view strip_graph6_line(std::string_view line) {
    constexpr std::string_view prefix = ">>graph6<<";
    if (line.substr(0, prefix.size()) == prefix) line.remove_prefix(prefix.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    return line;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view line) {
    line = detail::strip_graph6_line(line);
    if (line.empty()) throw Graph6ParseError(Graph6ParseError::Kind::bad_header, "empty graph6 line");

    std::size_t pos = 0;
    int n = 0;
    unsigned char h = static_cast<unsigned char>(line[pos]);
    if (h == 126) {
        // Long-form header. The format reserves it for n >= 63; the even
        // longer "~~" form starts at n = 258048, beyond the supported range.
        if (line.size() < 4)
            throw Graph6ParseError(Graph6ParseError::Kind::bad_header, "truncated size header");
        if (static_cast<unsigned char>(line[1]) == 126)
            throw Graph6ParseError(Graph6ParseError::Kind::size_out_of_range,
                                   "graph order above the 64-vertex limit");
        for (int i = 1; i <= 3; ++i) {
            unsigned char c = static_cast<unsigned char>(line[i]);
            if (c < 63 || c > 126)
                throw Graph6ParseError(Graph6ParseError::Kind::bad_header,
                                       "size header byte out of range");
            n = (n << 6) | (c - 63);
        }
        if (n < 63)
            throw Graph6ParseError(Graph6ParseError::Kind::bad_header,
                                   "long-form header used for an order below 63");
        pos = 4;
    } else if (h >= 63 && h <= 125) {
        n = h - 63;
        pos = 1;
    } else {
        throw Graph6ParseError(Graph6ParseError::Kind::bad_header, "header byte out of range");
    }

    if (n < 1 || n > kMaxVertices)
        throw Graph6ParseError(Graph6ParseError::Kind::size_out_of_range,
                               "graph order " + std::to_string(n) + " not in 1..64");

    const int bits = n * (n - 1) / 2;
    const int bytes = (bits + 5) / 6;
    if (static_cast<std::size_t>(bytes) > line.size() - pos)
        throw Graph6ParseError(Graph6ParseError::Kind::truncated, "edge bits truncated");
    if (static_cast<std::size_t>(bytes) < line.size() - pos)
        throw Graph6ParseError(Graph6ParseError::Kind::trailing_data,
                               "unexpected bytes after the edge bits");

    Graph g(n);
    int bit = 0;
    for (int i = 0; i < bytes; ++i) {
        unsigned char c = static_cast<unsigned char>(line[pos + static_cast<std::size_t>(i)]);
        if (c < 63 || c > 126)
            throw Graph6ParseError(Graph6ParseError::Kind::bad_char, "edge byte out of range");
        int group = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            bool set = (group >> k) & 1;
            if (bit >= bits) {
                if (set)
                    throw Graph6ParseError(Graph6ParseError::Kind::nonzero_padding,
                                           "padding bits must be zero");
                continue;
            }
            if (set) {
                // Column-major upper triangle: bit index b covers pair (u, v)
                // where v is the smallest with v(v-1)/2 > b.
                int v = 1;
                while ((v + 1) * v / 2 <= bit) ++v;
                int u = bit - v * (v - 1) / 2;
                g.add_edge(u, v);
            }
        }
    }
    check_invariants(g);
    return g;
}

inline std::string to_graph6(const Graph& g) {
    check_invariants(g);
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((g.n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((g.n & 0x3f) + 63));
    }
    const int bits = g.n * (g.n - 1) / 2;
    int group = 0, filled = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6 != 0) out.push_back(static_cast<char>((group << (6 - bits % 6)) + 63));
    return out;
}

/// Plain-text edge list: first token is the vertex count, then one "u v" pair
/// per edge. A CLI convenience only; loops and repeated edges are rejected.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<long> nums;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' ||
                                   text[i] == '\r' || text[i] == ','))
            ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i) throw std::invalid_argument("edge list contains a non-numeric token");
        nums.push_back(std::stol(std::string(text.substr(i, j - i))));
        i = j;
    }
    if (nums.empty()) throw std::invalid_argument("edge list is empty");
    if (nums.size() % 2 == 0) throw std::invalid_argument("edge list has a dangling endpoint");
    Graph g(static_cast<int>(nums[0]));
    for (std::size_t k = 1; k + 1 < nums.size(); k += 2)
        g.add_edge(static_cast<int>(nums[k]), static_cast<int>(nums[k + 1]));
    check_invariants(g);
    return g;
}

}  // namespace otd
