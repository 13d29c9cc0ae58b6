#pragma once

// A direction assignment for every edge of a base graph, with derived in/out
// adjacency masks. Edge i of the canonical edge list is directed
// first->second when dir[i] == 0 and second->first when dir[i] == 1.

#include <cstdint>

#include "otd/graph.hpp"

namespace otd {

/// Thrown when a total domination query is made on an orientation in which
/// some vertex has no in-neighbor: no total dominating set exists there.
class InvalidOrientationError : public std::invalid_argument {
public:
    explicit InvalidOrientationError(const std::string& what) : std::invalid_argument(what) {}
};

struct Orientation {
    Graph base;
    std::vector<std::pair<int, int>> edges;  // canonical edge order of base
    std::vector<std::uint8_t> dir;
    std::array<std::uint64_t, kMaxVertices> out_adj{};
    std::array<std::uint64_t, kMaxVertices> in_adj{};

    Orientation() = default;

    Orientation(Graph base_, std::vector<std::uint8_t> dir_)
        : base(std::move(base_)), edges(edge_list(base)), dir(std::move(dir_)) {
        if (dir.size() != edges.size())
            throw std::invalid_argument("one direction bit per edge required");
        rebuild_masks();
    }

    int n() const { return base.n; }

    int tail(std::size_t i) const { return dir[i] ? edges[i].second : edges[i].first; }
    int head(std::size_t i) const { return dir[i] ? edges[i].first : edges[i].second; }

    bool has_arc(int u, int v) const { return (out_adj[u] >> v) & 1u; }
    VertexSet out(int v) const { return VertexSet{out_adj[v]}; }
    VertexSet in(int v) const { return VertexSet{in_adj[v]}; }
    int out_degree(int v) const { return std::popcount(out_adj[v]); }
    int in_degree(int v) const { return std::popcount(in_adj[v]); }

    void rebuild_masks() {
        out_adj.fill(0);
        in_adj.fill(0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            out_adj[tail(i)] |= std::uint64_t{1} << head(i);
            in_adj[head(i)] |= std::uint64_t{1} << tail(i);
        }
    }

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.base == b.base && a.dir == b.dir;
    }
};

inline bool is_valid(const Orientation& d) {
    for (int v = 0; v < d.n(); ++v)
        if (d.in_adj[v] == 0) return false;
    return true;
}

/// Arcs in canonical edge order, each written tail-first.
inline std::vector<std::pair<int, int>> to_arcs(const Orientation& d) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.edges.size());
    for (std::size_t i = 0; i < d.edges.size(); ++i) arcs.emplace_back(d.tail(i), d.head(i));
    return arcs;
}

/// Builds the orientation whose arc set is exactly `arcs`; the arcs must
/// orient every edge of g exactly once.
inline Orientation orientation_from_arcs(const Graph& g,
                                         const std::vector<std::pair<int, int>>& arcs) {
    auto edges = edge_list(g);
    if (arcs.size() != edges.size())
        throw std::invalid_argument("arc list must orient every edge exactly once");
    std::vector<std::uint8_t> dir(edges.size(), 2);
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v))
            throw std::invalid_argument("arc does not correspond to an edge of the graph");
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        auto it = std::lower_bound(edges.begin(), edges.end(), key);
        std::size_t i = static_cast<std::size_t>(it - edges.begin());
        if (dir[i] != 2) throw std::invalid_argument("edge oriented twice in the arc list");
        dir[i] = (u < v) ? 0 : 1;
    }
    return Orientation(g, std::move(dir));
}

}  // namespace otd
