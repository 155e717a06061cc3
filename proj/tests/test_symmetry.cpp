#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fraclocdim/families.hpp"
#include "fraclocdim/family_string.hpp"
#include "fraclocdim/symmetry.hpp"
#include "oracle.hpp"

using namespace fraclocdim;

TEST(Symmetry, MappingExamples) {
    const Graph c5 = make_cycle(5);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = 0; v < 5; ++v) EXPECT_TRUE(exists_automorphism_mapping(c5, u, v));
    EXPECT_FALSE(exists_automorphism_mapping(make_path(3), 0, 1));
    EXPECT_TRUE(exists_automorphism_mapping(make_path(3), 0, 2));
    const Graph p = make_petersen();
    for (Vertex v = 0; v < 10; ++v) EXPECT_TRUE(exists_automorphism_mapping(p, 0, v));
}

TEST(Symmetry, OrbitExamples) {
    const auto star = orbits(make_star(3));
    EXPECT_EQ(star.count, 2u);
    EXPECT_FALSE(star.transitive);
    EXPECT_TRUE(orbits(make_hypercube(3)).transitive);
    const Graph lp = make_lollipop(4, 2);
    const auto lo = orbits(lp);
    EXPECT_FALSE(lo.transitive);
    for (Vertex u = 0; u < lp.order(); ++u)
        for (Vertex v = 0; v < lp.order(); ++v)
            if (lo.orbit_of[u] == lo.orbit_of[v]) {
                EXPECT_EQ(lp.degree(u), lp.degree(v));
            }
    EXPECT_EQ(lo.count, 4u);  // three clique vertices, bridge head, middle, tail
}

TEST(Symmetry, Transitivity) {
    EXPECT_TRUE(is_vertex_transitive(make_cycle(9)));
    EXPECT_FALSE(is_vertex_transitive(make_fan(4)));
    EXPECT_TRUE(is_vertex_transitive(make_family("cartesian(complete(4),complete(4))")));
    EXPECT_TRUE(is_vertex_transitive(make_petersen()));
    EXPECT_TRUE(is_vertex_transitive(make_family("cartesian(complete(2),petersen)")));
    EXPECT_FALSE(is_vertex_transitive(make_family("multipartite(2,3)")));
    EXPECT_TRUE(is_vertex_transitive(make_family("multipartite(3,3,3)")));
}

TEST(Symmetry, Ceiling) { EXPECT_THROW(orbits(make_path(kSymmetryCeiling + 1)), GraphError); }

TEST(Symmetry, OrbitsAgreeWithPermutationEnumeration) {
    std::mt19937 rng(123);
    for (int t = 0; t < 60; ++t) {
        const Graph g = oracle::random_connected(rng, 2, 7);
        const std::size_t n = g.order();
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        do {
            bool ok = true;
            for (const Edge& e : g.edges()) ok = ok && g.adjacent(perm[e.u], perm[e.v]);
            if (!ok) continue;
            for (Vertex v = 0; v < n; ++v) reach[v][perm[v]] = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        const auto part = orbits(g);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                EXPECT_EQ(part.orbit_of[u] == part.orbit_of[v], static_cast<bool>(reach[u][v]));
                EXPECT_EQ(exists_automorphism_mapping(g, u, v), static_cast<bool>(reach[u][v]));
            }
    }
}
