#include <gtest/gtest.h>

#include <random>

#include "fraclocdim/families.hpp"
#include "fraclocdim/family_string.hpp"
#include "fraclocdim/resolve.hpp"
#include "oracle.hpp"

using namespace fraclocdim;

TEST(ResolvingSets, PairSetExamples) {
    const Graph p3 = make_path(3);
    EXPECT_EQ(resolving_pair_set(p3, 0, 2), VertexSet(3, {0, 2}));
    const Graph k4 = make_complete(4);
    EXPECT_EQ(resolving_pair_set(k4, 1, 3), VertexSet(4, {1, 3}));
    const Graph c4 = make_cycle(4);
    EXPECT_EQ(resolving_pair_set(c4, 0, 1).count(), 4u);
}

TEST(ResolvingSets, LocalNeighborhoodExamples) {
    const Graph k6 = make_complete(6);
    EXPECT_EQ(local_resolving_neighborhood(k6, DistMatrix(k6), Edge{2, 5}), VertexSet(6, {2, 5}));
    const Graph c5 = make_cycle(5);
    for (const auto& [e, l] : local_neighborhoods(c5)) EXPECT_EQ(l.count(), 4u);
    for (const char* bip : {"cycle(8)", "hypercube(3)", "multipartite(2,3)", "path(6)", "cartesian(path(4),path(5))"}) {
        const Graph g = make_family(bip);
        for (const auto& [e, l] : local_neighborhoods(g)) EXPECT_EQ(l.count(), g.order()) << bip;
    }
    EXPECT_THROW(local_resolving_neighborhood(c5, DistMatrix(c5), Edge{0, 2}), GraphError);
}

TEST(ResolvingSets, Parameters) {
    EXPECT_EQ(l_parameter(make_cycle(7)), 6u);
    const Graph p = make_petersen();
    EXPECT_EQ(l_parameter(p), 6u);
    EXPECT_EQ(r_parameter(p), 6u);
    EXPECT_EQ(l_parameter(make_complete(5)), 2u);
    // In C6 antipodal vertices see every neighbour pair symmetrically: |R| = 4 for distance-two pairs.
    EXPECT_EQ(l_parameter(make_cycle(6)), 6u);
    EXPECT_EQ(r_parameter(make_cycle(6)), 4u);
}

TEST(ResolvingSets, LocalResolvingPredicates) {
    const Graph c6 = make_cycle(6);
    for (Vertex v = 0; v < 6; ++v) EXPECT_TRUE(is_local_resolving_set(c6, VertexSet(6, {v})));
    const Graph k4 = make_complete(4);
    EXPECT_FALSE(is_local_resolving_set(k4, VertexSet(4, {0, 1})));
    EXPECT_TRUE(is_local_resolving_set(k4, VertexSet(4, {0, 1, 2})));
    const Graph c5 = make_cycle(5);
    for (Vertex v = 0; v < 5; ++v) {
        EXPECT_FALSE(is_local_resolving_set(c5, VertexSet(5, {v})));
        EXPECT_TRUE(is_local_resolving_set(c5, VertexSet(5, {v, (v + 1) % 5})));
    }
    EXPECT_TRUE(is_resolving_set(DistMatrix(make_path(5)), VertexSet(5, {0})));
    EXPECT_FALSE(is_resolving_set(DistMatrix(make_path(5)), VertexSet(5, {2})));
}

TEST(ResolvingSets, IntegerDimensions) {
    EXPECT_EQ(integer_ldim(make_cycle(6)), 1u);
    EXPECT_EQ(integer_ldim(make_family("multipartite(2,3,3)")), 2u);
    EXPECT_EQ(integer_ldim(make_family("multipartite(2,2,3,3)")), 3u);
    EXPECT_EQ(integer_ldim(make_complete(5)), 4u);
    EXPECT_EQ(integer_ldim(make_petersen()), 3u);
    EXPECT_EQ(integer_dim(make_path(6)), 1u);
    EXPECT_EQ(integer_dim(make_cycle(6)), 2u);
    EXPECT_EQ(integer_dim(make_complete(4)), 3u);
    EXPECT_EQ(integer_dim(make_petersen()), 3u);
}

TEST(ResolvingSets, WitnessesAreValid) {
    const Graph g = make_family("lollipop(5,2)");
    const DistMatrix d(g);
    EXPECT_TRUE(is_local_resolving_set(g, d, minimum_local_resolving_set(g, d)));
    EXPECT_TRUE(is_resolving_set(d, minimum_resolving_set(g, d)));
}

TEST(ResolvingSets, SearchCeiling) {
    EXPECT_THROW(integer_ldim(make_path(kHittingSetCeiling + 1)), SearchCeilingError);
}

TEST(ResolvingSets, ReportStructure) {
    const ResolveReport rep = resolve_report(make_petersen(), true);
    EXPECT_EQ(rep.local.size(), 15u);
    ASSERT_TRUE(rep.pairs.has_value());
    EXPECT_EQ(rep.pairs->size(), 45u);
    EXPECT_EQ(rep.l_G, 6u);
    EXPECT_EQ(rep.r_G, 6u);
    EXPECT_FALSE(resolve_report(make_petersen()).pairs.has_value());
}

// Random graphs against the Floyd-Warshall oracle: rows, parameters and
// the exact hitting-set minimum.
TEST(ResolvingSets, AgreeWithBruteForce) {
    std::mt19937 rng(2024);
    for (int t = 0; t < 150; ++t) {
        const Graph g = oracle::random_connected(rng, 2, 9);
        const DistMatrix d(g);
        const auto rows = oracle::local_rows(g);
        const auto local = local_neighborhoods(g, d);
        ASSERT_EQ(rows.size(), local.size());
        std::size_t l = g.order();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            EXPECT_EQ(detail::to_mask(local[i].second), rows[i]);
            l = std::min<std::size_t>(l, std::popcount(rows[i]));
        }
        EXPECT_EQ(l_parameter(g, d), l);
        const auto pr = oracle::pair_rows(g);
        std::size_t r = g.order();
        for (auto row : pr) r = std::min<std::size_t>(r, std::popcount(row));
        EXPECT_EQ(r_parameter(g, d), r);
        EXPECT_LE(r, l);
        EXPECT_EQ(integer_ldim(g, d), oracle::min_hitting(rows, g.order()));
        EXPECT_EQ(integer_dim(g, d), oracle::min_hitting(pr, g.order()));
        EXPECT_GE(integer_ldim(g, d), 1u);
        EXPECT_LE(integer_ldim(g, d), integer_dim(g, d));
    }
}

TEST(ResolvingSets, BipartiteIffAllFull) {
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        const Graph g = oracle::random_connected(rng, 2, 10);
        bool full = true;
        for (const auto& [e, l] : local_neighborhoods(g)) full = full && l.count() == g.order();
        EXPECT_EQ(full, is_bipartite(g));
        EXPECT_EQ(integer_ldim(g) == 1, is_bipartite(g));
    }
}
