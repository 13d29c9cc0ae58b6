#include <catch2/catch_amalgamated.hpp>

#include "otd/verify.hpp"
#include "tests/test_support.hpp"

using namespace otd;
using testsupport::make_circuit;

TEST_CASE("constructed orientations are valid and deterministic") {
    SECTION("a cycle becomes one of its two circuits") {
        Orientation d = construct_valid_orientation(fixture_cycle(4));
        REQUIRE(is_valid(d));
        REQUIRE(gamma_t(d).value == 4);
        REQUIRE(d == construct_valid_orientation(fixture_cycle(4)));
    }
    SECTION("paw: triangle circuit, pendant arc outward") {
        Orientation d = construct_valid_orientation(fixture_paw());
        REQUIRE(is_valid(d));
        REQUIRE(d.in_degree(0) == 1);  // the pendant is fed by its neighbor
    }
    SECTION("trees are refused") {
        Graph p4(4);
        p4.add_edge(0, 1);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        REQUIRE_THROWS_AS(construct_valid_orientation(p4), std::invalid_argument);
    }
    SECTION("every class-C graph up to 6 vertices gets a valid orientation") {
        for (int n = 3; n <= 6; ++n)
            enumerate_graphs(n, [](const Graph& g) { return in_class_c(g); },
                             [&](const Graph& g) {
                                 Orientation d = construct_valid_orientation(g);
                                 REQUIRE(is_valid(d));
                             });
    }
}

TEST_CASE("valid orientation enumeration") {
    REQUIRE(count_valid_orientations(fixture_cycle(3)) == 2);
    REQUIRE(count_valid_orientations(fixture_cycle(4)) == 2);

    // Independent route for K4: filter all 2^6 assignments by in-degrees.
    const Graph k4 = fixture_k4();
    const auto edges = edge_list(k4);
    std::uint64_t brute = 0;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
        int in_deg[4] = {0, 0, 0, 0};
        for (std::size_t i = 0; i < edges.size(); ++i)
            ++in_deg[((mask >> i) & 1u) ? edges[i].first : edges[i].second];
        if (in_deg[0] && in_deg[1] && in_deg[2] && in_deg[3]) ++brute;
    }
    REQUIRE(count_valid_orientations(k4) == brute);
    REQUIRE(brute == 32);

    std::set<std::vector<std::uint8_t>> seen;
    for_each_valid_orientation(k4, [&](const Orientation& d) {
        REQUIRE(is_valid(d));
        REQUIRE(seen.insert(d.dir).second);  // exactly once each
    });

    Graph big(10);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (big.edge_count() < 25) big.add_edge(u, v);
    if (in_class_c(big)) REQUIRE_THROWS_AS(count_valid_orientations(big), BudgetError);
}

TEST_CASE("arc lists round-trip and reject foreign arcs") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_class_c_graph(4 + static_cast<int>(rng() % 4), rng);
        Orientation d = testsupport::random_valid_orientation(g, rng);
        REQUIRE(orientation_from_arcs(g, to_arcs(d)) == d);
    }
    // an arc between non-adjacent vertices is a type error, not data
    Graph two_triangles = disjoint_union(fixture_cycle(3), fixture_cycle(3));
    REQUIRE_THROWS_AS(
        orientation_from_arcs(two_triangles,
                              {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}}),
        std::invalid_argument);
    REQUIRE_THROWS_AS(orientation_from_arcs(fixture_cycle(3), {{0, 1}, {1, 0}, {1, 2}}),
                      std::invalid_argument);  // edge oriented twice
}

TEST_CASE("orientation min and max over all assignments") {
    for (int n : {3, 4, 5, 6, 7}) {
        OrientationRange r = domt_range(fixture_cycle(n));
        REQUIRE(r.lower == n);
        REQUIRE(r.upper == n);
    }
    OrientationRange k4 = domt_range(fixture_k4());
    REQUIRE(k4.lower == 3);
    REQUIRE(k4.upper == 3);

    OrientationRange k23 = domt_range(fixture_k23());
    REQUIRE(k23.lower == 4);
    REQUIRE(k23.upper == 4);

    OrientationRange f9 = domt_range(fixture_fig9(5).graph);
    REQUIRE(f9.lower == 3);
    REQUIRE(f9.upper == 5);

    OrientationRange paw = domt_range(fixture_paw());
    REQUIRE(paw.lower == 3);
    REQUIRE(paw.upper == 3);

    // witnesses achieve the reported values
    REQUIRE(gamma_t(f9.argmin).value == 3);
    REQUIRE(gamma_t(f9.argmax).value == 5);
}

TEST_CASE("range endpoints come from genuinely solved orientations") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        Graph g = random_connected_class_c_graph(n, rng);
        OrientationRange r = domt_range(g);
        int lo = g.n + 1, hi = 0;
        for_each_valid_orientation(g, [&](const Orientation& d) {
            int v = gamma_t_oracle(d).value;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        });
        REQUIRE(r.lower == lo);
        REQUIRE(r.upper == hi);
    }
}

TEST_CASE("additivity over disjoint unions") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g1 = random_connected_class_c_graph(3 + static_cast<int>(rng() % 3), rng);
        Graph g2 = random_connected_class_c_graph(3 + static_cast<int>(rng() % 3), rng);
        if (g1.edge_count() + g2.edge_count() > 16) continue;
        REQUIRE(domt_upper(disjoint_union(g1, g2)) == domt_upper(g1) + domt_upper(g2));
    }
}

TEST_CASE("pruned extremal search") {
    SECTION("cycles are outside the search contract") {
        REQUIRE_THROWS_AS(exists_extremal_orientation(fixture_cycle(4)), std::invalid_argument);
    }
    SECTION("the complete bipartite fixture reaches 4 = n-1") {
        ExtremalSearchResult r = exists_extremal_orientation(fixture_k23());
        REQUIRE(r.orientation.has_value());
        REQUIRE(gamma_t(*r.orientation).value == 4);
        REQUIRE(r.stats.orientations_examined >= r.stats.solver_calls);
    }
    SECTION("the Petersen graph has no extremal orientation") {
        ExtremalSearchResult r = exists_extremal_orientation(fixture_petersen());
        REQUIRE_FALSE(r.orientation.has_value());
    }
    SECTION("pruned search agrees with the unpruned maximum up to 6 vertices") {
        for (int n = 4; n <= 6; ++n)
            enumerate_graphs(
                n,
                [](const Graph& g) { return is_connected(g) && in_class_c(g) && !is_cycle_graph(g); },
                [&](const Graph& g) {
                    bool pruned = exists_extremal_orientation(g).orientation.has_value();
                    bool unpruned = domt_upper(g) == g.n - 1;
                    REQUIRE(pruned == unpruned);
                });
    }
}

TEST_CASE("necessary-condition checker") {
    SECTION("search witnesses satisfy all four conditions") {
        ExtremalSearchResult r = exists_extremal_orientation(fixture_k23());
        REQUIRE(verify_extremal_necessary_conditions(*r.orientation).empty());
    }
    SECTION("an out-degree-3 vertex is tagged") {
        DrawnFixture f8 = fixture_fig8();
        std::vector<std::pair<int, int>> arcs;
        for (const auto& c :
             std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}})
            for (std::size_t i = 0; i < c.size(); ++i)
                arcs.emplace_back(c[i], c[(i + 1) % c.size()]);
        arcs.emplace_back(1, 0);  // one spoke feeds the hub, the rest fan out
        for (int v = 2; v <= 11; ++v) arcs.emplace_back(0, v);
        Orientation d = orientation_from_arcs(f8.graph, arcs);
        REQUIRE(is_valid(d));
        auto tags = verify_extremal_necessary_conditions(d);
        REQUIRE(std::find(tags.begin(), tags.end(), ExtremalRule::out_degree_cap) != tags.end());
    }
    SECTION("circuits satisfy the conditions vacuously") {
        for (int n = 3; n <= 7; ++n)
            REQUIRE(verify_extremal_necessary_conditions(make_circuit(n)).empty());
    }
}
