#pragma once

// Exact total domination on oriented graphs. A set S is total dominating when
// the union of out-neighborhoods over S covers every vertex; the solver finds
// a minimum one by branch and bound, and an exhaustive subset oracle provides
// an independent route for cross-checks.

#include <climits>
#include <cstdint>

#include "otd/orientation.hpp"

namespace otd {

struct GammaT {
    int value = 0;
    VertexSet witness;
};

namespace detail {

// On a simple digraph no set of size one or two can be total dominating: a
// vertex never dominates itself, and two vertices cannot dominate each other
// both ways. Every exact solver result is checked against this floor.
inline void check_gamma_floor(int value) {
    if (value < 3)
        throw std::logic_error("total domination number below 3 on a simple digraph");
}

struct GammaTSearch {
    const Orientation& d;
    std::uint64_t all;
    int max_out = 1;
    int best;
    std::uint64_t best_set = 0;
    std::vector<int> in_deg;

    GammaTSearch(const Orientation& d_, int cap) : d(d_), all(VertexSet::full(d_.n()).mask), best(cap) {
        for (int v = 0; v < d.n(); ++v) {
            max_out = std::max(max_out, d.out_degree(v));
            in_deg.push_back(d.in_degree(v));
        }
    }

    void seed_greedy() {
        std::uint64_t chosen = 0, dominated = 0;
        int size = 0;
        while (dominated != all) {
            int pick = -1, gain = -1;
            for (int v = 0; v < d.n(); ++v) {
                int g = std::popcount(d.out_adj[v] & ~dominated);
                if (g > gain) {
                    gain = g;
                    pick = v;
                }
            }
            if (gain == 0) return;  // some vertex is unreachable: not a valid orientation
            chosen |= std::uint64_t{1} << pick;
            dominated |= d.out_adj[pick];
            ++size;
        }
        if (size < best) {
            best = size;
            best_set = chosen;
        }
    }

    void run(std::uint64_t chosen, int size, std::uint64_t dominated) {
        if (dominated == all) {
            best = size;
            best_set = chosen;
            return;
        }
        int undominated = std::popcount(all & ~dominated);
        if (size + (undominated + max_out - 1) / max_out >= best) return;
        // Branch on an undominated vertex with the fewest in-neighbors: one of
        // them must join the set, and a unique in-neighbor is a forced move.
        int pick = -1, fewest = INT_MAX;
        for (int v : VertexSet{all & ~dominated}) {
            if (in_deg[v] < fewest) {
                fewest = in_deg[v];
                pick = v;
            }
        }
        for (int u : VertexSet{d.in_adj[pick]})
            run(chosen | (std::uint64_t{1} << u), size + 1, dominated | d.out_adj[u]);
    }
};

// Exact value and witness when the optimum is below `cap`; returns {cap, {}}
// once the search proves no total dominating set smaller than cap exists.
inline GammaT gamma_t_capped(const Orientation& d, int cap) {
    GammaTSearch s(d, cap);
    s.seed_greedy();
    s.run(0, 0, 0);
    if (s.best >= cap) return {cap, VertexSet{}};
    return {s.best, VertexSet{s.best_set}};
}

}  // namespace detail

inline bool is_total_dominating(const Orientation& d, VertexSet s) {
    std::uint64_t covered = 0;
    for (int v : s) covered |= d.out_adj[v];
    return covered == VertexSet::full(d.n()).mask;
}

/// Minimum size of a total dominating set, with one optimal witness.
inline GammaT gamma_t(const Orientation& d) {
    if (!is_valid(d))
        throw InvalidOrientationError("a vertex has in-degree 0: no total dominating set exists");
    GammaT r = detail::gamma_t_capped(d, d.n() + 1);
    detail::check_gamma_floor(r.value);
    return r;
}

/// Same contract as gamma_t, decided by enumerating subsets in increasing
/// cardinality. Kept deliberately independent of the branch-and-bound path.
inline GammaT gamma_t_oracle(const Orientation& d) {
    if (!is_valid(d))
        throw InvalidOrientationError("a vertex has in-degree 0: no total dominating set exists");
    if (d.n() > 20) throw BudgetError("subset oracle covers at most 20 vertices");
    const int n = d.n();
    const std::uint64_t all = VertexSet::full(n).mask;
    for (int k = 1; k <= n; ++k) {
        std::uint64_t s = (std::uint64_t{1} << k) - 1;
        const std::uint64_t last = s << (n - k);
        for (;;) {
            std::uint64_t covered = 0;
            for (int v : VertexSet{s}) covered |= d.out_adj[v];
            if (covered == all) {
                detail::check_gamma_floor(k);
                return {k, VertexSet{s}};
            }
            if (s == last) break;
            std::uint64_t low = s & (~s + 1);
            std::uint64_t carry = s + low;
            s = carry | (((s ^ carry) / low) >> 2);
        }
    }
    throw std::logic_error("valid orientation without a total dominating set");
}

/// All inclusion-minimal total dominating sets, in ascending mask order.
inline std::vector<VertexSet> minimal_total_dominating_sets(const Orientation& d) {
    if (!is_valid(d))
        throw InvalidOrientationError("a vertex has in-degree 0: no total dominating set exists");
    if (d.n() > 16) throw BudgetError("minimal-set enumeration covers at most 16 vertices");
    const int n = d.n();
    const std::uint64_t all = VertexSet::full(n).mask;
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint64_t> covered(total, 0);
    for (std::size_t m = 1; m < total; ++m)
        covered[m] = covered[m & (m - 1)] | d.out_adj[std::countr_zero(m)];
    std::vector<VertexSet> out;
    for (std::size_t m = 1; m < total; ++m) {
        if (covered[m] != all) continue;
        bool minimal = true;
        for (int v : VertexSet{m}) {
            if (covered[m & ~(std::uint64_t{1} << v)] == all) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(VertexSet{m});
    }
    return out;
}

/// True iff some set S covers at least |S| + 2 vertices with its combined
/// out-neighborhood. Such a set rules out the domination number reaching n-1.
/// Subset scan over 2^n; a polynomial surplus computation via matching could
/// replace it if inputs beyond 20 vertices ever matter.
inline bool has_overdominating_set(const Orientation& d) {
    if (d.n() > 20) throw BudgetError("overdomination test covers at most 20 vertices");
    const int n = d.n();
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) >= 3) return true;
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint64_t> covered(total, 0);
    for (std::size_t m = 1; m < total; ++m) {
        covered[m] = covered[m & (m - 1)] | d.out_adj[std::countr_zero(m)];
        if (std::popcount(covered[m]) >= std::popcount(m) + 2) return true;
    }
    return false;
}

}  // namespace otd
