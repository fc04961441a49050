#include <doctest.h>

#include "meg/classes.hpp"
#include "meg/error.hpp"
#include "meg/hierarchy.hpp"
#include "meg/monitoring.hpp"
#include "meg/random.hpp"
#include "oracles.hpp"

using namespace meg;

TEST_CASE("is_geodetic_set") {
    CHECK(is_geodetic_set(gen_path(5), VertexSet(5, {0, 4})));
    CHECK(is_geodetic_set(gen_cycle(6), VertexSet(6, {0, 3})));
    CHECK_FALSE(is_geodetic_set(gen_cycle(6), VertexSet(6, {0, 1})));
    CHECK_THROWS_AS(is_geodetic_set(Graph::build(3, {{0, 1}}), VertexSet(3)), DisconnectedGraph);
}

TEST_CASE("is_edge_geodetic_set") {
    CHECK(is_edge_geodetic_set(gen_cycle(6), VertexSet(6, {0, 3})));
    CHECK_FALSE(is_edge_geodetic_set(gen_cycle(6), VertexSet(6, {0, 2})));
    CHECK(is_edge_geodetic_set(gen_complete(5), VertexSet::all(5)));
}

TEST_CASE("is_strong_edge_geodetic_set") {
    CHECK(is_strong_edge_geodetic_set(gen_cycle(6), VertexSet(6, {0, 2, 4})));
    CHECK(is_strong_edge_geodetic_set(gen_path(4), VertexSet(4, {0, 3})));
    CHECK_FALSE(is_strong_edge_geodetic_set(gen_cycle(4), VertexSet(4, {0, 2})));
    CHECK_FALSE(is_strong_edge_geodetic_set(gen_cycle(4), VertexSet(4)));

    StrongGeodeticOptions tight;
    tight.max_combinations = 3;
    // Four antipodal pairs in Q3 each have six geodesics.
    CHECK_THROWS_AS(is_strong_edge_geodetic_set(gen_hypercube(3), VertexSet::all(8), tight), CapExceeded);
}

TEST_CASE("strong edge-geodetic check agrees with the raw product oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const int m = std::min(n * (n - 1) / 2, n + static_cast<int>(seed % 4));
        Graph g = random_connected(n, m, seed);
        Rng rng(seed ^ 0xabc);
        for (int trial = 0; trial < 6; ++trial) {
            VertexSet s = VertexSet::from_mask(n, rng.below(std::uint64_t{1} << n));
            if (s.size() > 5) continue;
            CHECK(is_strong_edge_geodetic_set(g, s) == oracle::exhaustive_strong_edge_geodetic(g, s));
        }
    }
}

TEST_CASE("is_dem_set") {
    CHECK(is_dem_set(gen_path(5), VertexSet(5, {0})));
    CHECK_FALSE(is_dem_set(gen_cycle(4), VertexSet(4, {0})));
    CHECK(is_dem_set(gen_cycle(5), VertexSet(5, {0, 1, 3})));
}

TEST_CASE("is_dem_set agrees with pairwise monitoring from set members") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_connected(7, 9, seed);
        VertexSet s = VertexSet::from_mask(7, Rng(seed).below(std::uint64_t{1} << 7));
        bool expected = true;
        for (const Edge& e : g.edges()) {
            bool hit = false;
            s.for_each([&](Vertex x) {
                for (Vertex y = 0; y < 7; ++y)
                    if (y != x && oracle::monitors_by_definition(g, x, y, e)) hit = true;
            });
            expected = expected && hit;
        }
        CHECK(is_dem_set(g, s) == expected);
    }
}

TEST_CASE("containment chain on random sets") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 4 + static_cast<int>(seed % 6);
        Graph g = random_connected(n, std::min(n * (n - 1) / 2, n + static_cast<int>(seed % 4)), seed);
        Rng rng(seed);
        for (int trial = 0; trial < 10; ++trial) {
            VertexSet s = VertexSet::from_mask(n, rng.below(std::uint64_t{1} << n));
            if (is_meg_set(g, s)) {
                CHECK(is_dem_set(g, s));
                CHECK(is_strong_edge_geodetic_set(g, s));
            }
            if (is_strong_edge_geodetic_set(g, s)) CHECK(is_edge_geodetic_set(g, s));
            if (is_edge_geodetic_set(g, s)) CHECK(is_geodetic_set(g, s));
        }
    }
}
