#pragma once

// Orientation construction and search: building one valid orientation,
// enumerating all of them, taking the exact min/max of the total domination
// number over them, and a pruned backtracking search for orientations whose
// total domination number is n-1.

#include <optional>

#include "otd/domination.hpp"

namespace otd {

/// Deterministic valid orientation: per component, one cycle through a fixed
/// spanning tree is oriented as a circuit, the remaining tree edges point away
/// from the cycle, and every other edge runs from its lower endpoint.
inline Orientation construct_valid_orientation(const Graph& g) {
    if (!in_class_c(g))
        throw std::invalid_argument(
            "graph has an acyclic component, so no orientation gives every vertex an in-neighbor");

    const auto edges = edge_list(g);
    std::vector<std::uint8_t> dir(edges.size(), 2);
    auto orient = [&](int u, int v) {  // arc u -> v
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        auto it = std::lower_bound(edges.begin(), edges.end(), key);
        dir[static_cast<std::size_t>(it - edges.begin())] = (u < v) ? 0 : 1;
    };

    for (VertexSet comp : components_within(g, g.vertices())) {
        // BFS spanning tree from the lowest vertex, visiting neighbors in
        // ascending order so the whole construction is reproducible.
        std::array<int, kMaxVertices> parent{};
        parent.fill(-1);
        const int root = comp.lowest();
        std::vector<int> order{root};
        std::uint64_t seen = std::uint64_t{1} << root;
        for (std::size_t qi = 0; qi < order.size(); ++qi) {
            int v = order[qi];
            for (int u : VertexSet{g.adj[v] & comp.mask & ~seen}) {
                parent[u] = v;
                seen |= std::uint64_t{1} << u;
                order.push_back(u);
            }
        }

        auto is_tree_edge = [&](int u, int v) { return parent[u] == v || parent[v] == u; };

        // Lowest non-tree edge closes the cycle the component is hung on.
        std::pair<int, int> extra{-1, -1};
        for (const auto& [u, v] : edges) {
            if (!comp.contains(u)) continue;
            if (!is_tree_edge(u, v)) {
                extra = {u, v};
                break;
            }
        }

        // The unique tree path between its endpoints plus the edge itself.
        auto ancestors = [&](int v) {
            std::vector<int> path{v};
            while (parent[path.back()] != -1) path.push_back(parent[path.back()]);
            return path;
        };
        std::vector<int> au = ancestors(extra.first), av = ancestors(extra.second);
        std::uint64_t in_au = 0;
        for (int v : au) in_au |= std::uint64_t{1} << v;
        int lca = -1;
        for (int v : av)
            if ((in_au >> v) & 1u) {
                lca = v;
                break;
            }
        std::vector<int> cycle;
        for (int v : au) {
            cycle.push_back(v);
            if (v == lca) break;
        }
        std::vector<int> down;
        for (int v : av) {
            if (v == lca) break;
            down.push_back(v);
        }
        cycle.insert(cycle.end(), down.rbegin(), down.rend());

        std::uint64_t on_cycle = 0;
        for (int v : cycle) on_cycle |= std::uint64_t{1} << v;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            orient(cycle[i], cycle[(i + 1) % cycle.size()]);

        // Remaining tree edges point away from the cycle.
        std::vector<int> frontier;
        std::uint64_t reached = on_cycle;
        for (int v : VertexSet{on_cycle}) frontier.push_back(v);
        for (std::size_t qi = 0; qi < frontier.size(); ++qi) {
            int v = frontier[qi];
            for (int u : VertexSet{g.adj[v] & comp.mask & ~reached}) {
                if (!is_tree_edge(u, v)) continue;
                orient(v, u);
                reached |= std::uint64_t{1} << u;
                frontier.push_back(u);
            }
        }
    }

    // Validity does not depend on the leftover non-tree edges.
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (dir[i] == 2) dir[i] = 0;

    Orientation d(g, std::move(dir));
    if (!is_valid(d)) throw std::logic_error("constructed orientation left an in-degree at zero");
    return d;
}

namespace detail {

// Backtracking over the canonical edge order. A branch dies as soon as some
// vertex has in-degree 0 with no unassigned incident edge left.
template <typename Callback>
void enumerate_valid_orientations_impl(const Graph& g, Callback&& cb) {
    const auto edges = edge_list(g);
    Orientation work;
    work.base = g;
    work.edges = edges;
    work.dir.assign(edges.size(), 0);

    std::array<int, kMaxVertices> in_deg{}, unassigned{};
    for (const auto& [u, v] : edges) {
        ++unassigned[u];
        ++unassigned[v];
    }

    auto assign = [&](std::size_t i, std::uint8_t d) {
        work.dir[i] = d;
        int t = work.tail(i), h = work.head(i);
        work.out_adj[t] |= std::uint64_t{1} << h;
        work.in_adj[h] |= std::uint64_t{1} << t;
        ++in_deg[h];
        --unassigned[t];
        --unassigned[h];
    };
    auto undo = [&](std::size_t i) {
        int t = work.tail(i), h = work.head(i);
        work.out_adj[t] &= ~(std::uint64_t{1} << h);
        work.in_adj[h] &= ~(std::uint64_t{1} << t);
        --in_deg[h];
        ++unassigned[t];
        ++unassigned[h];
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == edges.size()) {
            cb(const_cast<const Orientation&>(work));
            return;
        }
        auto [u, v] = edges[i];
        for (std::uint8_t d : {std::uint8_t{0}, std::uint8_t{1}}) {
            assign(i, d);
            bool dead = (unassigned[u] == 0 && in_deg[u] == 0) ||
                        (unassigned[v] == 0 && in_deg[v] == 0);
            if (!dead) self(self, i + 1);
            undo(i);
        }
    };
    rec(rec, 0);
}

}  // namespace detail

/// Calls `cb` once per valid orientation of g (labeled, no symmetry
/// reduction). The reference passed to cb is a reused workspace; copy it to
/// keep it. Refuses graphs with more than 24 edges.
inline void for_each_valid_orientation(const Graph& g,
                                       const std::function<void(const Orientation&)>& cb) {
    if (!in_class_c(g))
        throw std::invalid_argument("graph has an acyclic component: no valid orientations");
    if (g.edge_count() > 24)
        throw BudgetError("exhaustive orientation enumeration covers at most 24 edges");
    detail::enumerate_valid_orientations_impl(g, cb);
}

inline std::vector<Orientation> enumerate_valid_orientations(const Graph& g) {
    std::vector<Orientation> out;
    for_each_valid_orientation(g, [&](const Orientation& d) { out.push_back(d); });
    return out;
}

inline std::uint64_t count_valid_orientations(const Graph& g) {
    std::uint64_t c = 0;
    for_each_valid_orientation(g, [&](const Orientation&) { ++c; });
    return c;
}

/// Exact minimum and maximum of the total domination number over all valid
/// orientations, with witnesses for both. One pass; each orientation is
/// solved only as precisely as the running bounds require.
struct OrientationRange {
    int lower = 0;
    int upper = 0;
    Orientation argmin;
    Orientation argmax;
};

inline OrientationRange domt_range(const Graph& g) {
    OrientationRange r;
    bool first = true;
    for_each_valid_orientation(g, [&](const Orientation& d) {
        if (first) {
            GammaT e = gamma_t(d);
            r.lower = r.upper = e.value;
            r.argmin = r.argmax = d;
            first = false;
            return;
        }
        GammaT e = detail::gamma_t_capped(d, r.upper + 1);
        if (e.value > r.upper) {
            e = gamma_t(d);  // above the running max: resolve exactly
            r.upper = e.value;
            r.argmax = d;
        } else if (e.value < r.lower) {
            detail::check_gamma_floor(e.value);
            r.lower = e.value;
            r.argmin = d;
        }
    });
    return r;
}

inline int domt_upper(const Graph& g) { return domt_range(g).upper; }
inline int domt_lower(const Graph& g) { return domt_range(g).lower; }

enum class ExtremalRule {
    in_degree,           // some vertex can no longer receive an in-neighbor
    out_degree_cap,      // some out-degree exceeds 2
    zero_out_degree_cap, // two vertices finished with out-degree 0
    common_out_neighbor, // two finished out-degree-2 vertices share no target
    overdomination,      // some set covers at least |S| + 2 vertices
};

inline const char* to_string(ExtremalRule r) {
    switch (r) {
        case ExtremalRule::in_degree: return "in_degree";
        case ExtremalRule::out_degree_cap: return "out_degree_cap";
        case ExtremalRule::zero_out_degree_cap: return "zero_out_degree_cap";
        case ExtremalRule::common_out_neighbor: return "common_out_neighbor";
        case ExtremalRule::overdomination: return "overdomination";
    }
    return "?";
}

struct OrientationSearchStats {
    std::uint64_t orientations_examined = 0;  // search nodes visited
    std::uint64_t solver_calls = 0;           // complete orientations solved
    std::array<std::uint64_t, 4> pruned_by_rule{};  // the four partial-assignment rules

    std::uint64_t pruned(ExtremalRule r) const {
        auto i = static_cast<std::size_t>(r);
        return i < pruned_by_rule.size() ? pruned_by_rule[i] : 0;
    }

    OrientationSearchStats& operator+=(const OrientationSearchStats& o) {
        orientations_examined += o.orientations_examined;
        solver_calls += o.solver_calls;
        for (std::size_t i = 0; i < pruned_by_rule.size(); ++i)
            pruned_by_rule[i] += o.pruned_by_rule[i];
        return *this;
    }
};

struct ExtremalSearchResult {
    std::optional<Orientation> orientation;  // some orientation with gamma_t = n-1
    OrientationSearchStats stats;
};

/// The four conditions every orientation with total domination number n-1
/// must satisfy. Empty result means all hold.
inline std::vector<ExtremalRule> verify_extremal_necessary_conditions(const Orientation& d) {
    if (!is_valid(d)) throw InvalidOrientationError("orientation has a vertex with in-degree 0");
    std::vector<ExtremalRule> violated;
    int zero_out = 0;
    bool cap_hit = false;
    for (int v = 0; v < d.n(); ++v) {
        int od = d.out_degree(v);
        if (od > 2) cap_hit = true;
        if (od == 0) ++zero_out;
    }
    if (cap_hit) violated.push_back(ExtremalRule::out_degree_cap);
    if (zero_out > 1) violated.push_back(ExtremalRule::zero_out_degree_cap);

    bool disjoint_pair = false;
    for (int u = 0; u < d.n() && !disjoint_pair; ++u) {
        if (d.out_degree(u) != 2) continue;
        for (int v = u + 1; v < d.n() && !disjoint_pair; ++v)
            if (d.out_degree(v) == 2 && (d.out_adj[u] & d.out_adj[v]) == 0) disjoint_pair = true;
    }
    if (disjoint_pair) violated.push_back(ExtremalRule::common_out_neighbor);
    if (has_overdominating_set(d)) violated.push_back(ExtremalRule::overdomination);
    return violated;
}

/// Searches for a valid orientation with total domination number exactly n-1.
/// Backtracks over edge directions, assigning edges at high-degree vertices
/// first, and prunes any partial assignment that violates a condition every
/// such orientation must satisfy:
///   - every vertex must still be able to reach in-degree >= 1,
///   - no out-degree may exceed 2,
///   - at most one vertex may finish with out-degree 0,
///   - two finished out-degree-2 vertices must share an out-neighbor
///     (checked only once both endpoints' edges are all assigned, so no
///     completable assignment is ever cut).
/// Every surviving complete orientation is confirmed by the exact solver.
inline ExtremalSearchResult exists_extremal_orientation(const Graph& g) {
    if (!in_class_c(g)) throw std::invalid_argument("graph has an acyclic component");
    if (!is_connected(g)) throw std::invalid_argument("extremal search expects a connected graph");
    if (is_cycle_graph(g))
        throw std::invalid_argument("cycles are excluded: every orientation there needs all n vertices");

    ExtremalSearchResult result;
    auto& stats = result.stats;

    auto edges = edge_list(g);
    std::stable_sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
        int da = std::max(g.degree(a.first), g.degree(a.second));
        int db = std::max(g.degree(b.first), g.degree(b.second));
        return da > db;
    });

    Orientation work;
    work.base = g;
    work.edges = edges;
    work.dir.assign(edges.size(), 0);

    std::array<int, kMaxVertices> in_deg{}, out_deg{}, unassigned{};
    for (const auto& [u, v] : edges) {
        ++unassigned[u];
        ++unassigned[v];
    }
    std::vector<int> finished_out2;  // vertices with all edges assigned and out-degree 2

    const int n = g.n;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        ++stats.orientations_examined;
        if (i == edges.size()) {
            ++stats.solver_calls;
            GammaT e = detail::gamma_t_capped(work, n - 1);
            if (e.value == n - 1) {  // cannot exceed n-1 on a connected non-cycle
                Orientation found = work;
                found.rebuild_masks();
                result.orientation = std::move(found);
                return true;
            }
            return false;
        }
        auto [eu, ev] = edges[i];
        for (std::uint8_t dbit : {std::uint8_t{0}, std::uint8_t{1}}) {
            work.dir[i] = dbit;
            int t = work.tail(i), h = work.head(i);
            work.out_adj[t] |= std::uint64_t{1} << h;
            work.in_adj[h] |= std::uint64_t{1} << t;
            ++in_deg[h];
            ++out_deg[t];
            --unassigned[eu];
            --unassigned[ev];

            bool ok = true;
            if (out_deg[t] > 2) {
                stats.pruned_by_rule[static_cast<int>(ExtremalRule::out_degree_cap)]++;
                ok = false;
            }
            for (int w : {eu, ev}) {
                if (!ok) break;
                if (unassigned[w] == 0 && in_deg[w] == 0) {
                    stats.pruned_by_rule[static_cast<int>(ExtremalRule::in_degree)]++;
                    ok = false;
                }
            }
            if (ok) {
                int finished_zero = 0;
                for (int w : {eu, ev})
                    if (unassigned[w] == 0 && out_deg[w] == 0) ++finished_zero;
                if (finished_zero > 0) {
                    int total_zero = 0;
                    for (int w = 0; w < n; ++w)
                        if (unassigned[w] == 0 && out_deg[w] == 0) ++total_zero;
                    if (total_zero > 1) {
                        stats.pruned_by_rule[static_cast<int>(ExtremalRule::zero_out_degree_cap)]++;
                        ok = false;
                    }
                }
            }
            std::size_t pushed = 0;
            if (ok) {
                for (int w : {eu, ev}) {
                    if (unassigned[w] != 0 || out_deg[w] != 2) continue;
                    for (int other : finished_out2) {
                        if ((work.out_adj[w] & work.out_adj[other]) == 0) {
                            stats.pruned_by_rule[static_cast<int>(
                                ExtremalRule::common_out_neighbor)]++;
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                    finished_out2.push_back(w);
                    ++pushed;
                }
            }

            if (ok && self(self, i + 1)) return true;

            finished_out2.resize(finished_out2.size() - pushed);
            work.out_adj[t] &= ~(std::uint64_t{1} << h);
            work.in_adj[h] &= ~(std::uint64_t{1} << t);
            --in_deg[h];
            --out_deg[t];
            ++unassigned[eu];
            ++unassigned[ev];
        }
        return false;
    };
    rec(rec, 0);
    return result;
}

}  // namespace otd
