#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ggg/certify.hpp"
#include "ggg/families.hpp"

#include "reference.hpp"

using namespace ggg;
using namespace ggg::certify;
using families::build_cycle;
using families::build_G;
using families::build_H;
using families::mycielskian;

namespace {

Graph k_n(size_t n)
{
    std::vector<VertexLabel> labels;
    EdgeList edges;
    for (size_t i = 0; i < n; ++i) {
        labels.push_back(VertexLabel::rim(static_cast<int>(i + 1)));
        for (size_t j = i + 1; j < n; ++j)
            edges.push_back({static_cast<VertexIndex>(i), static_cast<VertexIndex>(j)});
    }
    return build_graph(labels, edges);
}

Graph path(size_t n)
{
    std::vector<VertexLabel> labels;
    EdgeList edges;
    for (size_t i = 0; i < n; ++i) {
        labels.push_back(VertexLabel::rim(static_cast<int>(i + 1)));
        if (i > 0)
            edges.push_back({static_cast<VertexIndex>(i - 1), static_cast<VertexIndex>(i)});
    }
    return build_graph(labels, edges);
}

Graph fixture()
{
    std::ifstream file(GGG_TEST_DATA_DIR "/grotzsch_drawing.json");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return import_json(buffer.str());
}

}  // namespace

TEST(TriangleFree, FamiliesAndK3)
{
    EXPECT_TRUE(is_triangle_free(build_G(5)).triangle_free());
    EXPECT_TRUE(is_triangle_free(build_H(6)).triangle_free());
    auto k3 = k_n(3);
    auto check = is_triangle_free(k3);
    ASSERT_FALSE(check.triangle_free());
    EXPECT_EQ(check.witness->vertices, (std::array<VertexIndex, 3>{0, 1, 2}));
    EXPECT_TRUE(is_triangle(k3, *check.witness));
}

TEST(TriangleFree, WitnessValidation)
{
    auto c5 = build_cycle(5);
    EXPECT_FALSE(is_triangle(c5, {{0, 1, 2}}));
    EXPECT_FALSE(is_triangle(k_n(3), {{0, 0, 1}}));
}

TEST(Girth, Examples)
{
    EXPECT_EQ(girth(build_G(7)), 4);
    EXPECT_EQ(girth(build_H(8)), 4);
    EXPECT_EQ(girth(build_cycle(6)), 6);
    EXPECT_EQ(girth(build_cycle(3)), 3);
    EXPECT_EQ(girth(path(5)), std::nullopt);
    EXPECT_EQ(girth(Graph{}), std::nullopt);
    EXPECT_EQ(girth(mycielskian(make_graph(2, {{0, 1}}))), 5);
}

TEST(Girth, FamilySweep)
{
    for (int m = 5; m <= 17; ++m)
        EXPECT_EQ(girth(families::build({m % 2 ? Family::G : Family::H, m})), 4) << "m=" << m;
}

TEST(Maximality, Examples)
{
    EXPECT_TRUE(maximality_check(build_G(5)).maximal);
    EXPECT_TRUE(maximality_check(build_G(9)).maximal);

    auto h6 = build_H(6);
    auto report = maximality_check(h6);
    EXPECT_FALSE(report.maximal);
    ASSERT_TRUE(report.addable);
    EXPECT_EQ(*report.addable, (Edge{ref::idx(h6, "p1"), ref::idx(h6, "p4")}));
}

TEST(Maximality, AuditModeCoversEveryNonEdge)
{
    auto g = build_G(7);
    auto report = maximality_check(g, true);
    ASSERT_TRUE(report.maximal);
    size_t n = g.vertex_count();
    EXPECT_EQ(report.audit.size(), n * (n - 1) / 2 - g.edge_count());
    for (const auto& [edge, triangle] : report.audit) {
        Edge added = edge;
        auto bigger = g.with_edges(std::span(&added, 1), g.meta());
        EXPECT_TRUE(is_triangle(bigger, triangle));
    }
}

TEST(Maximality, EvenFamilyWitnessIsRimPairAtOddDistance)
{
    for (int m = 6; m <= 16; m += 2) {
        auto h = build_H(m);
        auto report = maximality_check(h);
        ASSERT_FALSE(report.maximal);
        const auto& e = *report.addable;
        EXPECT_EQ(h.label(e.u).kind(), LabelKind::Rim);
        EXPECT_EQ(h.label(e.v).kind(), LabelKind::Rim);
        EXPECT_EQ(h.label(e.u).to_string(), "p1");
        EXPECT_EQ(h.label(e.v).to_string(), "p4");
    }
}

TEST(Maximality, RejectsTriangle)
{
    EXPECT_THROW(maximality_check(k_n(4)), TriangleError);
}

TEST(Hamiltonian, G5)
{
    auto g = build_G(5);
    auto result = find_hamiltonian_cycle(g);
    ASSERT_EQ(result.status, SearchStatus::Found);
    ASSERT_TRUE(result.cycle);
    EXPECT_EQ(result.cycle->order.size(), 11u);
    EXPECT_EQ(result.cycle->order.front(), 0u);  // anchored at the hub
    EXPECT_TRUE(is_hamiltonian_cycle(g, *result.cycle));
    // every consecutive pair obeys the construction rule
    auto rule = ref::reference_G(5);
    const auto& order = result.cycle->order;
    for (size_t i = 0; i < order.size(); ++i) {
        auto a = g.label(order[i]).to_string();
        auto b = g.label(order[(i + 1) % order.size()]).to_string();
        EXPECT_TRUE(rule.contains(ref::ordered(a, b))) << a << "-" << b;
    }
}

TEST(Hamiltonian, H6)
{
    auto g = build_H(6);
    auto result = find_hamiltonian_cycle(g);
    ASSERT_EQ(result.status, SearchStatus::Found);
    EXPECT_EQ(result.cycle->order.size(), 13u);
    EXPECT_TRUE(is_hamiltonian_cycle(g, *result.cycle));
}

TEST(Hamiltonian, Deterministic)
{
    auto g = build_H(10);
    EXPECT_EQ(find_hamiltonian_cycle(g).cycle->order, find_hamiltonian_cycle(g).cycle->order);
}

TEST(Hamiltonian, NegativeCasesAreProofs)
{
    EXPECT_EQ(find_hamiltonian_cycle(path(4)).status, SearchStatus::NotFound);
    // K_{2,3}: bipartite with unequal sides
    auto k23 = make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    EXPECT_EQ(find_hamiltonian_cycle(k23).status, SearchStatus::NotFound);
    // Petersen graph is the classic non-Hamiltonian cubic graph.
    auto petersen = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                    {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    auto result = find_hamiltonian_cycle(petersen);
    EXPECT_EQ(result.status, SearchStatus::NotFound);
    EXPECT_GT(result.steps, 0u);
}

TEST(Hamiltonian, BudgetExceededIsDistinct)
{
    auto petersen = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                    {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    auto result = find_hamiltonian_cycle(petersen, 3);
    EXPECT_EQ(result.status, SearchStatus::BudgetExceeded);
    EXPECT_FALSE(result.cycle);
}

TEST(Hamiltonian, CertificateChecker)
{
    auto c5 = build_cycle(5);
    EXPECT_TRUE(is_hamiltonian_cycle(c5, {{0, 1, 2, 3, 4}}));
    EXPECT_FALSE(is_hamiltonian_cycle(c5, {{0, 2, 1, 3, 4}}));
    EXPECT_FALSE(is_hamiltonian_cycle(c5, {{0, 1, 2, 3}}));
    EXPECT_FALSE(is_hamiltonian_cycle(c5, {{0, 1, 2, 3, 3}}));
}

TEST(LiteralPath, LiteralExpansion)
{
    auto audit5 = check_lemma2_path(build_G(5), 5);
    EXPECT_TRUE(audit5.edges_valid);
    EXPECT_FALSE(audit5.covers_all);
    EXPECT_EQ(audit5.distinct_vertices, 8u);
    std::vector<std::string> labels;
    auto g5 = build_G(5);
    for (auto v : audit5.sequence)
        labels.push_back(g5.label(v).to_string());
    EXPECT_EQ(labels, (std::vector<std::string>{"p1", "q2", "p3", "p4", "q5", "a", "q1", "p5"}));

    auto audit6 = check_lemma2_path(build_H(6), 6);
    EXPECT_TRUE(audit6.edges_valid);
    EXPECT_FALSE(audit6.covers_all);
    EXPECT_EQ(audit6.distinct_vertices, 9u);
}

TEST(LiteralPath, NeverContradictsSearch)
{
    for (int m = 5; m <= 14; ++m) {
        auto g = families::build({m % 2 ? Family::G : Family::H, m});
        auto audit = check_lemma2_path(g, m);
        EXPECT_TRUE(audit.edges_valid) << m;
        EXPECT_FALSE(audit.covers_all) << m;
        EXPECT_EQ(audit.distinct_vertices, static_cast<size_t>(m + 3)) << m;
        EXPECT_EQ(find_hamiltonian_cycle(g).status, SearchStatus::Found) << m;
    }
    EXPECT_THROW(check_lemma2_path(build_cycle(5), 5), Error);
    EXPECT_THROW(check_lemma2_path(build_G(5), 7), Error);
}

TEST(Chromatic, FamilyValues)
{
    EXPECT_EQ(chromatic_number(build_G(5)).chromatic_number, 4);
    EXPECT_EQ(chromatic_number(build_H(6)).chromatic_number, 3);
    EXPECT_EQ(chromatic_number(mycielskian(build_cycle(7))).chromatic_number, 4);
}

TEST(Chromatic, SmallGraphs)
{
    EXPECT_EQ(chromatic_number(Graph{}).chromatic_number, 0);
    EXPECT_EQ(chromatic_number(make_graph(3, {})).chromatic_number, 1);
    EXPECT_EQ(chromatic_number(make_graph(2, {{0, 1}})).chromatic_number, 2);
    EXPECT_EQ(chromatic_number(build_cycle(5)).chromatic_number, 3);
    EXPECT_EQ(chromatic_number(build_cycle(6)).chromatic_number, 2);
    EXPECT_EQ(chromatic_number(k_n(4)).chromatic_number, 4);
    EXPECT_EQ(chromatic_number(k_n(7)).chromatic_number, 7);
    // Grötzsch -> Chvátal-size Mycielskian: chromatic number 5
    EXPECT_EQ(chromatic_number(mycielskian(build_G(5))).chromatic_number, 5);
}

TEST(Chromatic, WitnessIsProperAndTight)
{
    for (const auto& g : {build_G(9), build_H(10), mycielskian(build_cycle(9))}) {
        auto result = chromatic_number(g);
        EXPECT_TRUE(verify_coloring(g, result.coloring).proper());
        EXPECT_EQ(result.coloring.color_count(), result.chromatic_number);
    }
}

TEST(Chromatic, BudgetExceededThrows)
{
    try {
        chromatic_number(build_G(11), 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

TEST(ConstructiveColoring, H6MatchesConstruction)
{
    auto c = lemma1_coloring({Family::H, 6});
    EXPECT_EQ(c.colors, (std::vector<int>{1, 1, 3, 1, 3, 1, 3, 2, 2, 2, 2, 2, 2}));
    EXPECT_TRUE(verify_coloring(build_H(6), c).proper());
    EXPECT_EQ(c.color_count(), 3);
}

TEST(ConstructiveColoring, OddFamily)
{
    auto c5 = lemma1_coloring({Family::G, 5});
    EXPECT_TRUE(verify_coloring(build_G(5), c5).proper());
    EXPECT_EQ(c5.color_count(), 4);
    auto c9 = lemma1_coloring({Family::G, 9});
    EXPECT_TRUE(verify_coloring(build_G(9), c9).proper());
    EXPECT_EQ(c9.color_count(), 4);
}

TEST(ConstructiveColoring, Errors)
{
    EXPECT_THROW(lemma1_coloring({Family::Cycle, 5}), Error);
    EXPECT_THROW(lemma1_coloring({Family::G, 6}), Error);
}

TEST(VerifyColoring, Cases)
{
    auto g = build_G(5);
    EXPECT_TRUE(verify_coloring(g, lemma1_coloring({Family::G, 5})).proper());
    auto mono = verify_coloring(g, {std::vector<int>(11, 1)});
    ASSERT_FALSE(mono.proper());
    EXPECT_TRUE(g.has_edge(mono.violation->u, mono.violation->v));
    EXPECT_TRUE(verify_coloring(make_graph(4, {}), {{1, 1, 2, 7}}).proper());
    EXPECT_THROW(verify_coloring(g, {std::vector<int>(10, 1)}), Error);
    std::vector<int> gap(11, 1);
    gap[3] = 0;
    EXPECT_THROW(verify_coloring(g, {gap}), Error);
}

TEST(Nonplanarity, Examples)
{
    auto g5 = nonplanarity_edge_bound(build_G(5));
    EXPECT_TRUE(g5.certified);
    EXPECT_EQ(g5.edges, 20u);
    EXPECT_EQ(g5.bound, 18);
    auto h6 = nonplanarity_edge_bound(build_H(6));
    EXPECT_TRUE(h6.certified);
    EXPECT_EQ(h6.edges, 30u);
    EXPECT_EQ(h6.bound, 22);
    auto c8 = nonplanarity_edge_bound(build_cycle(8));
    EXPECT_FALSE(c8.certified);
    EXPECT_EQ(c8.edges, 8u);
    EXPECT_EQ(c8.bound, 12);
    // K_5 is non-planar but has triangles: the bound cannot speak
    EXPECT_FALSE(nonplanarity_edge_bound(k_n(5)).certified);
    EXPECT_FALSE(nonplanarity_edge_bound(make_graph(2, {{0, 1}})).certified);
}

TEST(MycielskiSubgraph, Examples)
{
    auto m5 = mycielski_subgraph_check(build_G(5));
    EXPECT_TRUE(m5.holds);
    EXPECT_EQ(m5.extra_edges, 0u);
    auto m7 = mycielski_subgraph_check(build_G(7));
    EXPECT_TRUE(m7.holds);
    EXPECT_EQ(m7.extra_edges, 7u);
    auto m9 = mycielski_subgraph_check(build_G(9));
    EXPECT_TRUE(m9.holds);
    EXPECT_EQ(m9.extra_edges, 18u);
    EXPECT_THROW(mycielski_subgraph_check(build_H(6)), Error);
}

TEST(Isomorphism, GrotzschIdentities)
{
    auto g5 = build_G(5);
    auto r1 = isomorphism_check(g5, mycielskian(build_cycle(5)));
    ASSERT_EQ(r1.status, IsomorphismStatus::Isomorphic);
    EXPECT_TRUE(is_isomorphism(g5, mycielskian(build_cycle(5)), r1.mapping));
    auto fig = fixture();
    auto r2 = isomorphism_check(g5, fig);
    ASSERT_EQ(r2.status, IsomorphismStatus::Isomorphic);
    EXPECT_TRUE(is_isomorphism(g5, fig, r2.mapping));
}

TEST(Isomorphism, RelabeledCopy)
{
    // reverse the index order of G_7 and rebuild under Rim labels
    auto g = build_G(7);
    const auto n = static_cast<VertexIndex>(g.vertex_count());
    EdgeList permuted;
    for (const auto& e : g.edges())
        permuted.push_back({n - 1 - e.u, n - 1 - e.v});
    std::vector<VertexLabel> labels;
    for (VertexIndex i = 0; i < n; ++i)
        labels.push_back(VertexLabel::rim(static_cast<int>(i + 1)));
    auto copy = build_graph(labels, permuted);
    auto result = isomorphism_check(g, copy);
    ASSERT_EQ(result.status, IsomorphismStatus::Isomorphic);
    EXPECT_TRUE(is_isomorphism(g, copy, result.mapping));
}

TEST(Isomorphism, Negative)
{
    EXPECT_EQ(isomorphism_check(build_cycle(5), build_cycle(6)).status,
              IsomorphismStatus::NotIsomorphic);
    // same degree sequence, different structure: C_6 vs two triangles
    auto two_triangles = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    EXPECT_EQ(isomorphism_check(build_cycle(6), two_triangles).status,
              IsomorphismStatus::NotIsomorphic);
    // G_7 and M(C_7) differ in edge count
    EXPECT_EQ(isomorphism_check(build_G(7), mycielskian(build_cycle(7))).status,
              IsomorphismStatus::NotIsomorphic);
}

TEST(Isomorphism, BudgetExceeded)
{
    auto g = build_G(9);
    EXPECT_EQ(isomorphism_check(g, g, 2).status, IsomorphismStatus::BudgetExceeded);
}

TEST(Isomorphism, MappingChecker)
{
    auto c4 = build_cycle(4);
    EXPECT_TRUE(is_isomorphism(c4, c4, {1, 2, 3, 0}));
    EXPECT_FALSE(is_isomorphism(c4, c4, {0, 2, 1, 3}));
    EXPECT_FALSE(is_isomorphism(c4, c4, {0, 0, 1, 2}));
}
