#pragma once

// Undirected simple graphs on at most 64 vertices, one adjacency bitmask per
// vertex. Everything here is a pure function over small value types; graphs
// are treated as immutable once built, so concurrent reads need no locking.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace otd {

inline constexpr int kMaxVertices = 64;

/// Thrown when an operation is asked to exceed its hard enumeration budget.
/// Budgets are refusals, never silent approximations.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Subset of {0..63} packed into one machine word.
struct VertexSet {
    std::uint64_t mask = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t m) : mask(m) {}

    static VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
    static VertexSet full(int n) {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    bool contains(int v) const { return (mask >> v) & 1u; }
    void add(int v) { mask |= std::uint64_t{1} << v; }
    void remove(int v) { mask &= ~(std::uint64_t{1} << v); }
    int size() const { return std::popcount(mask); }
    bool empty() const { return mask == 0; }
    int lowest() const { return std::countr_zero(mask); }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.mask | b.mask}; }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.mask & b.mask}; }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.mask & ~b.mask}; }
    friend bool operator==(VertexSet a, VertexSet b) { return a.mask == b.mask; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.mask != b.mask; }
    bool is_subset_of(VertexSet other) const { return (mask & ~other.mask) == 0; }

    // Iterates member indices in ascending order.
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {mask}; }
    iterator end() const { return {0}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }
};

/// Simple undirected graph; adj[v] is the neighborhood of v as a bitmask.
struct Graph {
    int n = 0;
    std::array<std::uint64_t, kMaxVertices> adj{};

    Graph() = default;
    explicit Graph(int n_) : n(n_) {
        if (n_ < 1 || n_ > kMaxVertices)
            throw std::invalid_argument("vertex count must be between 1 and 64");
    }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (has_edge(u, v)) throw std::invalid_argument("parallel edges are not allowed");
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }

    VertexSet neighbors(int v) const { return VertexSet{adj[v]}; }
    int degree(int v) const { return std::popcount(adj[v]); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }

    VertexSet vertices() const { return VertexSet::full(n); }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n != b.n) return false;
        for (int v = 0; v < a.n; ++v)
            if (a.adj[v] != b.adj[v]) return false;
        return true;
    }
};

/// Degree of v counted inside `within` only.
inline int degree_within(const Graph& g, int v, VertexSet within) {
    return std::popcount(g.adj[v] & within.mask);
}

/// Symmetry, looplessness, and no bits at or above position n. Throws on
/// violation; run after any construction path that bypasses add_edge.
inline void check_invariants(const Graph& g) {
    if (g.n < 1 || g.n > kMaxVertices) throw std::logic_error("graph order out of range");
    const std::uint64_t high = ~VertexSet::full(g.n).mask;
    for (int v = 0; v < g.n; ++v) {
        if (g.adj[v] & high) throw std::logic_error("adjacency bit beyond vertex range");
        if ((g.adj[v] >> v) & 1u) throw std::logic_error("loop in adjacency");
        for (int u : VertexSet{g.adj[v]})
            if (!g.has_edge(u, v)) throw std::logic_error("asymmetric adjacency");
    }
    for (int v = g.n; v < kMaxVertices; ++v)
        if (g.adj[v]) throw std::logic_error("adjacency row beyond vertex count");
}

/// Edges as (u,v) with u < v, ordered lexicographically. This order is the
/// canonical edge indexing used by orientations and arc lists.
inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int u = 0; u < g.n; ++u)
        for (int v : VertexSet{g.adj[u] & ~((std::uint64_t{1} << (u + 1)) - 1)})
            out.emplace_back(u, v);
    return out;
}

struct ComponentDecomposition {
    std::vector<VertexSet> components;  // partition of the vertex set
    std::vector<int> edge_counts;       // edges inside each component
};

/// Connected components inside `within`, listed by ascending lowest vertex.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    std::uint64_t todo = within.mask;
    while (todo) {
        std::uint64_t comp = 0;
        std::uint64_t frontier = todo & -todo;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            for (int v : VertexSet{frontier}) next |= g.adj[v];
            frontier = next & within.mask & ~comp;
        }
        out.push_back(VertexSet{comp});
        todo &= ~comp;
    }
    return out;
}

inline ComponentDecomposition components(const Graph& g) {
    ComponentDecomposition d;
    d.components = components_within(g, g.vertices());
    d.edge_counts.reserve(d.components.size());
    for (VertexSet comp : d.components) {
        int twice = 0;
        for (int v : comp) twice += degree_within(g, v, comp);
        d.edge_counts.push_back(twice / 2);
    }
    return d;
}

inline bool is_connected(const Graph& g) {
    return components_within(g, g.vertices()).size() == 1;
}

/// True iff every component has at least as many edges as vertices, i.e. every
/// component contains a cycle. Exactly these graphs admit an orientation in
/// which every vertex has an in-neighbor.
inline bool in_class_c(const Graph& g) {
    auto d = components(g);
    for (std::size_t i = 0; i < d.components.size(); ++i)
        if (d.edge_counts[i] < d.components[i].size()) return false;
    return true;
}

/// Every vertex has degree exactly 2; components are then single cycles.
inline bool is_disjoint_union_of_cycles(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool is_cycle_graph(const Graph& g) {
    return is_disjoint_union_of_cycles(g) && is_connected(g);
}

/// Subgraph induced by `keep`, vertices relabeled in ascending order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::array<int, kMaxVertices> relabel{};
    int m = 0;
    for (int v : keep) relabel[v] = m++;
    Graph h(m);
    for (int v : keep)
        for (int u : VertexSet{g.adj[v] & keep.mask})
            if (u < v) h.add_edge(relabel[u], relabel[v]);
    return h;
}

/// Graph with the vertices of `b` relabeled to follow those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.n + b.n > kMaxVertices) throw std::invalid_argument("union exceeds 64 vertices");
    Graph g(a.n + b.n);
    for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v];
    for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = b.adj[v] << a.n;
    return g;
}

/// Exact isomorphism test by permutation search; inputs above 10 vertices are
/// refused rather than approximated.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n > 10 || b.n > 10)
        throw BudgetError("isomorphism is decided by brute force only up to 10 vertices");
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    std::vector<int> perm(static_cast<std::size_t>(a.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n && ok; ++u)
            for (int v = u + 1; v < a.n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace detail {

// Upper-triangle pairs in lexicographic order; bit p of a labeled code is
// stored at position (m-1-p) so that integer comparison matches string order.
inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

inline Graph graph_from_pair_mask(int n, const std::vector<std::pair<int, int>>& pairs,
                                  std::uint32_t mask) {
    Graph g(n);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if ((mask >> p) & 1u) g.add_edge(pairs[p].first, pairs[p].second);
    return g;
}

// True iff no relabeling of g yields a lexicographically smaller upper
// triangle than the labeling g already has.
inline bool is_canonical_labeling(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                                  const std::vector<std::vector<int>>& perms) {
    for (const auto& perm : perms) {
        for (const auto& [u, v] : pairs) {
            bool own = g.has_edge(u, v);
            bool relabeled = g.has_edge(perm[u], perm[v]);
            if (relabeled != own) {
                if (own) goto next_perm;  // relabeled string is smaller: reject
                break;                    // relabeled string is larger: perm done
            }
        }
        continue;
    next_perm:
        return false;
    }
    return true;
}

}  // namespace detail

/// Streams one representative per isomorphism class of graphs on n vertices
/// that satisfy `filter` (which must be isomorphism-invariant; pass nullptr
/// for no filter). Representatives carry the lexicographically minimal upper
/// triangle labeling. Built-in enumeration stops at n = 7.
inline void enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter,
                             const std::function<void(const Graph&)>& yield) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    if (n > 7)
        throw BudgetError("built-in enumeration covers n <= 7; larger orders must be ingested "
                          "from graph6 files");
    const auto pairs = detail::vertex_pairs(n);
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        while (std::next_permutation(p.begin(), p.end())) perms.push_back(p);
    }
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Graph g = detail::graph_from_pair_mask(n, pairs, mask);
        if (filter && !filter(g)) continue;
        if (!detail::is_canonical_labeling(g, pairs, perms)) continue;
        yield(g);
    }
}

inline std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter) {
    std::vector<Graph> out;
    enumerate_graphs(n, filter, [&](const Graph& g) { out.push_back(g); });
    return out;
}

/// Uniform random graph on n vertices (each pair independently with p = 1/2).
inline Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1u) g.add_edge(u, v);
    return g;
}

/// Rejection-samples a connected graph whose every component contains a cycle,
/// optionally capped in edge count.
inline Graph random_connected_class_c_graph(int n, std::mt19937_64& rng, int max_edges = -1) {
    for (;;) {
        Graph g = random_graph(n, rng);
        if (max_edges >= 0 && g.edge_count() > max_edges) continue;
        if (is_connected(g) && in_class_c(g)) return g;
    }
}

}  // namespace otd
