#pragma once

// Shared helpers for the test suites: deterministic random samplers for the
// structural families and a few deliberately naive re-implementations used as
// independent oracles (vector-based, no bitmasks, no shared code paths with
// the library internals they check).

#include <random>
#include <set>

#include "otd/families.hpp"

namespace otd::testsupport {

inline Orientation make_circuit(int n) {
    Graph g = fixture_cycle(n);
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
    return orientation_from_arcs(g, arcs);
}

/// Naive cycle detection per component via DFS over adjacency vectors.
inline bool every_component_has_cycle_naive(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (auto [u, v] : edge_list(g)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(static_cast<std::size_t>(g.n), 0);
    for (int start = 0; start < g.n; ++start) {
        if (color[start]) continue;
        bool found_cycle = false;
        std::vector<std::pair<int, int>> stack{{start, -1}};
        color[start] = 1;
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            int skipped_parent = 0;
            for (int u : adj[v]) {
                if (u == parent && !skipped_parent) {
                    ++skipped_parent;  // one parent edge allowed; a second is a multi-edge cycle
                    continue;
                }
                if (color[u])
                    found_cycle = true;
                else {
                    color[u] = 1;
                    stack.push_back({u, v});
                }
            }
        }
        if (!found_cycle) return false;
    }
    return true;
}

/// Brute-force overdomination check over explicit subsets of a vector world.
inline bool has_overdominating_set_naive(const Orientation& d) {
    const int n = d.n();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::set<int> covered;
        int size = 0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) {
                ++size;
                for (int u = 0; u < n; ++u)
                    if (d.has_arc(v, u)) covered.insert(u);
            }
        if (static_cast<int>(covered.size()) >= size + 2) return true;
    }
    return false;
}

inline Orientation random_valid_orientation(const Graph& g, std::mt19937_64& rng) {
    const std::size_t m = edge_list(g).size();
    for (;;) {
        std::vector<std::uint8_t> dir(m);
        for (auto& b : dir) b = static_cast<std::uint8_t>(rng() & 1u);
        Orientation d(g, std::move(dir));
        if (is_valid(d)) return d;
    }
}

inline F1Params random_f1_params(std::mt19937_64& rng, int max_n) {
    for (;;) {
        F1Params p;
        p.k = 1 + static_cast<int>(rng() % 6);
        int cycles = static_cast<int>(rng() % 3);
        for (int i = 0; i < cycles; ++i) {
            p.cycle_lengths.push_back(3 + static_cast<int>(rng() % 4));
            p.links.push_back(1 + static_cast<int>(rng() % p.cycle_lengths.back()));
        }
        for (int c = 1; c <= p.k - 2; ++c)
            if (rng() & 1u) p.chords.push_back(c);
        if (p.cycle_lengths.empty() && p.chords.empty()) continue;
        int n = 1 + p.k;
        for (int len : p.cycle_lengths) n += len;
        if (n > max_n) continue;
        return p;
    }
}

inline F2Params random_f2_params(std::mt19937_64& rng, int max_n) {
    for (;;) {
        F2Params p;
        int cycles = 1 + static_cast<int>(rng() % 3);
        int total_links = 0, n = 1;
        for (int i = 0; i < cycles; ++i) {
            p.cycle_lengths.push_back(3 + static_cast<int>(rng() % 4));
            p.links.push_back(1 + static_cast<int>(rng() % p.cycle_lengths.back()));
            total_links += p.links.back();
            n += p.cycle_lengths.back();
        }
        if (total_links < 2 || n > max_n) continue;
        return p;
    }
}

inline GeneratedF3 random_f3_member(std::mt19937_64& rng, int max_n) {
    const F3Case tags[] = {F3Case::single_edge, F3Case::dwk_ge4,    F3Case::dwk3_via_wk,
                           F3Case::dwk3_via_xy, F3Case::dwk2_via_wk, F3Case::dwk2_via_x};
    for (;;) {
        F3Params p;
        p.base = random_f1_params(rng, max_n);
        p.tag = tags[rng() % 6];
        try {
            return generate_f3(p);
        } catch (const std::invalid_argument&) {
            continue;  // tag not applicable to this base; resample
        }
    }
}

}  // namespace otd::testsupport
