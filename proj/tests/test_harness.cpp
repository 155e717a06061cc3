#include <gtest/gtest.h>

#include "fraclocdim/families.hpp"
#include "fraclocdim/family_string.hpp"
#include "fraclocdim/harness.hpp"

using namespace fraclocdim;

namespace {
Rational q(long long a, long long b = 1) { return Rational(a, b); }

GraphAnalysis analyse(const char* family) { return GraphAnalysis(make_family(family)); }

VertexSet first_k(std::size_t n, std::size_t k) {
    VertexSet s(n);
    for (Vertex v = 0; v < k; ++v) s.insert(v);
    return s;
}
}  // namespace

TEST(Harness, BipartiteIffOne) {
    for (const char* f : {"cycle(6)", "cycle(5)", "complete(2)", "petersen", "hypercube(3)"}) {
        auto a = analyse(f);
        EXPECT_EQ(check_bipartite_iff_one(a).status, Status::pass) << f;
    }
    auto k2 = analyse("complete(2)");
    EXPECT_EQ(check_bipartite_iff_one(k2).values.at("ldim_f"), q(1));
    auto k1 = analyse("complete(1)");
    EXPECT_EQ(check_bipartite_iff_one(k1).status, Status::skipped_hypothesis);
}

TEST(Harness, HalfNCharacterization) {
    auto k6 = analyse("complete(6)");
    auto r = check_half_n_characterization(k6);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("ldim_f"), q(3));
    auto p4 = analyse("path(4)");
    EXPECT_EQ(check_half_n_characterization(p4).status, Status::pass);
    auto ck = analyse("strong(cycle(4),complete(2))");
    r = check_half_n_characterization(ck);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("ldim_f"), q(4));
    EXPECT_EQ(r.values.at("twin_classes"), q(4));
}

TEST(Harness, TwinQuotientRebuildsGraph) {
    const Graph g = make_family("lex(cycle(5),complete(2),complete(1),complete(3),complete(1),complete(2))");
    const auto tq = twin_quotient(g);
    EXPECT_TRUE(tq.rebuild_matches);
    EXPECT_EQ(tq.classes.size(), 5u);
    EXPECT_FALSE(tq.all_nontrivial_cliques);
    const auto pet = twin_quotient(make_petersen());
    EXPECT_TRUE(pet.rebuild_matches);
    EXPECT_EQ(pet.classes.size(), 10u);
}

TEST(Harness, CliqueTheorem) {
    auto l43 = analyse("lollipop(4,3)");
    auto r = check_clique_theorem(l43, {first_k(7, 4)});
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("ldim_f"), q(2));
    auto l52 = analyse("lollipop(5,2)");
    r = check_clique_theorem(l52, {first_k(7, 5)});
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("ldim_f"), q(5, 2));
    auto c6 = analyse("cycle(6)");
    EXPECT_EQ(check_clique_theorem(c6, {}).status, Status::skipped_hypothesis);
}

TEST(Harness, CliqueTheoremRejectsBadCliques) {
    auto l43 = analyse("lollipop(4,3)");
    EXPECT_THROW(check_clique_theorem(l43, {VertexSet(7, {3, 4, 5})}), std::invalid_argument);
    EXPECT_THROW(check_clique_theorem(l43, {VertexSet(7, {0, 1})}), std::invalid_argument);
    auto k6 = analyse("complete(6)");
    EXPECT_THROW(check_clique_theorem(k6, {VertexSet(6, {0, 1, 2}), VertexSet(6, {2, 3, 4})}), std::invalid_argument);
}

// Two disjoint triangles in K6: the half-sum is 3 = ldim_f(K6), yet a cross edge
// such as 03 has L = {0,3}, which contains no triangle edge's L. The value side
// of the equivalence holds while the containment side does not.
TEST(Harness, CliqueTheoremCrossEdgeCounterexample) {
    auto k6 = analyse("complete(6)");
    const auto r = check_clique_theorem(k6, {VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})});
    EXPECT_EQ(r.status, Status::fail);
    EXPECT_EQ(r.values.at("ldim_f"), r.values.at("clique_half_sum"));
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_NE(r.witness->find("containment-condition:no"), std::string::npos);
}

TEST(Harness, JoinTheta) {
    auto k3 = analyse("complete(3)"), k4 = analyse("complete(4)");
    auto r = check_join_theta(k3, k4);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("ldim_f_join"), q(7, 2));
    auto sk = analyse("strong(complete(2),complete(2))"), k2 = analyse("complete(2)");
    r = check_join_theta(sk, k2);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("ldim_f_join"), q(3));
    auto p3 = analyse("path(3)");
    EXPECT_EQ(check_join_theta(p3, k3).status, Status::skipped_hypothesis);
}

TEST(Harness, GapWitnesses) {
    auto r = check_gap_witnesses(3);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("dim_f(K_n,n)"), q(3));
    r = check_gap_witnesses(6);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("dim_f(C_n)"), q(3, 2));
    r = check_gap_witnesses(4);
    EXPECT_EQ(r.values.at("ldim_f(C_n)"), q(1));
}

TEST(Harness, VertexDeletion) {
    auto k5 = analyse("complete(5)");
    EXPECT_EQ(check_vertex_deletion(k5).status, Status::pass);
    auto c5 = analyse("cycle(5)");
    EXPECT_EQ(check_vertex_deletion(c5, 0).status, Status::pass);
    auto star = analyse("star(4)");
    const auto hub = check_vertex_deletion(star, 0);
    EXPECT_EQ(hub.status, Status::skipped_hypothesis);
    EXPECT_NE(hub.note.find("cut"), std::string::npos);
    const auto whole = check_vertex_deletion(star);
    EXPECT_EQ(whole.status, Status::pass);
    EXPECT_EQ(whole.values.at("skipped_cut_vertices"), q(1));
}

TEST(Harness, StrongLayerLemma) {
    EXPECT_EQ(check_strong_layer_lemma(make_path(2), make_path(3)).status, Status::pass);
    EXPECT_EQ(check_strong_layer_lemma(make_cycle(5), make_complete(2)).status, Status::pass);
    const auto kk = check_strong_layer_lemma(make_complete(3), make_complete(3));
    EXPECT_EQ(kk.status, Status::pass);
    // K3 x K3 is K9, so every L has two vertices while each layer bound has at least six.
    EXPECT_EQ(kk.values.at("edges_with_equality"), q(0));
    EXPECT_EQ(check_strong_layer_lemma(make_hypercube(4), make_hypercube(5)).status, Status::skipped_ceiling);
}

TEST(Harness, AdjacencyKResolved) {
    EXPECT_TRUE(check_adjacency_k_resolved(make_path(6), 3));
    EXPECT_TRUE(check_adjacency_k_resolved(make_cycle(8), 4));
    EXPECT_FALSE(check_adjacency_k_resolved(make_complete(4), 2));
    EXPECT_FALSE(check_adjacency_k_resolved(make_path(6), 6));
}

TEST(Harness, StrongBoundsSharpAndLowerCases) {
    auto k3 = analyse("complete(3)"), k4 = analyse("complete(4)");
    auto r = check_strong_bounds(k3, k4);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("ldim_f(GxH)"), q(6));
    EXPECT_EQ(r.values.at("sandwich_upper"), q(6));
    auto k2a = analyse("complete(2)"), k2b = analyse("complete(2)");
    r = check_strong_bounds(k2a, k2b);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("ldim_f(GxH)"), q(2));
}

// K3 has diameter 1 and P6 is adjacency 3-resolved, so the full set of bounds applies.
// The value bound holds but the edge containment does not: diagonal product
// edges are resolved by vertices in other G-layers.
TEST(Harness, StrongBoundsContainmentCounterexample) {
    auto k3 = analyse("complete(3)"), p6 = analyse("path(6)");
    const auto r = check_strong_bounds(k3, p6);
    EXPECT_EQ(r.status, Status::fail);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_NE(r.witness->find("containment"), std::string::npos);
    EXPECT_EQ(r.witness->find("diameter bound"), std::string::npos);
    EXPECT_EQ(r.witness->find("sandwich"), std::string::npos);
    EXPECT_LE(r.values.at("ldim_f(GxH)"), q(9));
    EXPECT_EQ(r.values.at("diameter_bound"), q(9));
    EXPECT_EQ(r.values.at("k"), q(2));

    // Direct check of the witness edge (a,0)(b,1) and the resolving vertex (c,2).
    const Graph p = strong_product(k3.graph(), p6.graph());
    const VertexSet l = resolving_pair_set(p, product_index(0, 0, 6), product_index(1, 1, 6));
    EXPECT_TRUE(l.contains(product_index(2, 2, 6)));
}

TEST(Harness, CartesianClaims) {
    struct Case {
        const char* g;
        const char* h;
        Rational value;
    };
    for (const Case& c : {Case{"path(4)", "path(5)", q(1)}, Case{"complete(2)", "cycle(5)", q(5, 4)},
                          Case{"complete(3)", "complete(5)", q(5, 2)}, Case{"complete(3)", "complete(3)", q(3, 2)},
                          Case{"path(3)", "complete(4)", q(2)}}) {
        auto g = analyse(c.g), h = analyse(c.h);
        const auto r = check_cartesian_claims(g, h);
        EXPECT_EQ(r.status, Status::pass) << c.g << " x " << c.h << " " << r.witness.value_or("");
        EXPECT_EQ(r.values.at("ldim_f(GxH)"), c.value) << c.g << " x " << c.h;
    }
    auto k3 = analyse("complete(3)");
    auto k3b = analyse("complete(3)");
    EXPECT_NE(check_cartesian_claims(k3, k3b).note.find(",e"), std::string::npos);
}

TEST(Harness, CartesianLayerIsExact) {
    EXPECT_EQ(check_cartesian_layer_lemma(make_petersen(), make_complete(2)).status, Status::pass);
    EXPECT_EQ(check_cartesian_layer_lemma(make_fan(4), make_cycle(5)).status, Status::pass);
}

TEST(Harness, ProductDistanceClaims) {
    EXPECT_EQ(check_strong_distance(make_cycle(5), make_path(3)).status, Status::pass);
    EXPECT_EQ(check_cartesian_distance(make_petersen(), make_cycle(4)).status, Status::pass);
}

TEST(Harness, VertexTransitiveClaims) {
    auto p = analyse("petersen");
    auto r = check_vertex_transitive(p);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.values.at("n_over_l"), q(5, 3));
    EXPECT_EQ(check_vertex_transitive_dim(p).status, Status::pass);
    auto fan = analyse("fan(4)");
    EXPECT_EQ(check_vertex_transitive(fan).status, Status::skipped_hypothesis);
    auto c6 = analyse("cycle(6)");
    EXPECT_EQ(check_vertex_transitive_dim(c6).status, Status::skipped_hypothesis);  // l = 6, r = 4
}

TEST(Harness, SubsetNeighborhoodAndBounds) {
    for (const char* f : {"petersen", "lollipop(4,3)", "fan(5)", "cycle(7)", "multipartite(2,3,4)"}) {
        auto a = analyse(f);
        EXPECT_EQ(check_subset_neighborhood(a).status, Status::pass) << f;
        EXPECT_EQ(check_basic_bounds(a).status, Status::pass) << f;
        EXPECT_EQ(check_l_upper_bound(a).status, Status::pass) << f;
        EXPECT_EQ(check_ldim_lower_bound(a).status, Status::pass) << f;
        EXPECT_EQ(check_twin_neighborhood(a).status, Status::pass) << f;
        EXPECT_EQ(check_r_le_l(a).status, Status::pass) << f;
    }
    auto big = analyse("hypercube(4)");
    EXPECT_EQ(check_subset_neighborhood(big).status, Status::skipped_ceiling);
}

TEST(Harness, OddCycleClaimPerGraph) {
    for (const char* f : {"cycle(3)", "cycle(9)", "cycle(8)", "path(4)", "petersen"}) {
        auto a = analyse(f);
        EXPECT_EQ(check_odd_cycle_l(a).status, Status::pass) << f;
    }
    EXPECT_TRUE(is_odd_cycle(make_cycle(7)));
    EXPECT_FALSE(is_odd_cycle(make_cycle(6)));
}

// Connected labelled graphs on n vertices: 1, 4, 38, 728, 26704 for n = 2..6;
// labelled odd cycles: (n-1)!/2.
TEST(Harness, EnumerationKernelCounts) {
    const std::uint64_t connected[] = {0, 0, 1, 4, 38, 728, 26704};
    const std::uint64_t cycles[] = {0, 0, 0, 1, 0, 12, 0};
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto c = detail::enumerate_odd_cycle_claim(n);
        EXPECT_EQ(c.connected, connected[n]) << n;
        EXPECT_EQ(c.l_is_n_minus_1, cycles[n]) << n;
        EXPECT_EQ(c.odd_cycles, cycles[n]) << n;
        EXPECT_FALSE(c.mismatch_mask.has_value());
    }
    EXPECT_THROW(detail::enumerate_odd_cycle_claim(9), std::invalid_argument);
}

TEST(Harness, EnumerationKernelMatchesLibraryOnEveryMask) {
    const std::size_t n = 5;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::uint64_t hits = 0;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1U) e.push_back(pairs[i]);
        const Graph g = build_graph(n, e);
        if (!is_connected(g)) continue;
        hits += l_parameter(g) == n - 1;
    }
    EXPECT_EQ(hits, detail::enumerate_odd_cycle_claim(n).l_is_n_minus_1);
}

TEST(Harness, RunSuiteShapes) {
    EXPECT_TRUE(run_suite({}, {"bipartite-iff-one"}).empty());
    const auto one = run_suite({parse_family_string("cycle(5)")}, {"bipartite-iff-one"});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].graphs, std::vector<std::string>{"cycle(5)"});
    EXPECT_THROW(run_suite({}, {"no-such-claim"}), std::invalid_argument);
    const auto pair = run_suite({parse_family_string("strong(complete(2),complete(3))")}, {"strong-layer", "half-n-twins"});
    ASSERT_EQ(pair.size(), 2u);
    EXPECT_EQ(pair[0].graphs.size(), 2u);
    EXPECT_EQ(pair[1].claim, "half-n-twins");
}

TEST(Harness, RunSuiteIsDeterministic) {
    std::vector<FamilySpec> corpus;
    for (const char* f : {"petersen", "fan(5)", "cartesian(complete(2),cycle(5))", "join(complete(3),complete(4))"})
        corpus.push_back(parse_family_string(f));
    const auto ids = std::vector<std::string>{"half-n-twins", "cartesian-claims", "join-closure", "basic-bounds"};
    EXPECT_EQ(run_suite(corpus, ids), run_suite(corpus, ids));
}

TEST(Harness, FailuresCarryWitnesses) {
    auto k3 = analyse("complete(3)"), p6 = analyse("path(6)");
    const auto r = check_strong_bounds(k3, p6);
    EXPECT_TRUE(!r.failed() || r.witness.has_value());
}

TEST(Harness, CatalogIdsAreUnique) {
    auto ids = all_claim_ids();
    std::sort(ids.begin(), ids.end());
    EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
    EXPECT_NO_THROW(claim_info("strong-bounds"));
}
