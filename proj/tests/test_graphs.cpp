#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "gdm/graphs.hpp"

using namespace gdm;

namespace {

bool is_regular(const Graph& g, int r) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != r) return false;
    return true;
}

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    return {g.edges().begin(), g.edges().end()};
}

}  // namespace

TEST_CASE("generator specs parse") {
    GeneratorSpec s = parse_generator_spec("bipartite:1,9");
    CHECK(s.kind == "bipartite");
    CHECK(s.params == std::vector<std::int64_t>{1, 9});
    s = parse_generator_spec("circulant:10;1,2");
    CHECK(s.kind == "circulant");
    CHECK(s.params == std::vector<std::int64_t>{10, 1, 2});
    s = parse_generator_spec("petersen");
    CHECK(s.kind == "petersen");
    CHECK(s.params.empty());
}

TEST_CASE("standard generators") {
    Graph c5 = Graph::generate("cycle:5");
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edges().size() == 5);
    CHECK(is_regular(c5, 2));
    CHECK(c5.gen_spec() == "cycle:5");

    Graph k4 = Graph::generate("complete:4");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edges().size() == 6);
    CHECK(is_regular(k4, 3));

    Graph star = Graph::generate("bipartite:1,9");
    CHECK(star.vertex_count() == 10);
    CHECK(star.edges().size() == 9);
    CHECK(star.degree(0) == 9);
    for (int v = 1; v < 10; ++v) CHECK(star.degree(v) == 1);

    Graph k113 = Graph::generate("tripartite:1,1,3");
    CHECK(k113.vertex_count() == 5);
    CHECK(k113.edges().size() == 7);
    CHECK(k113.degree(0) == 4);
    CHECK(k113.degree(1) == 4);
    CHECK(k113.degree(2) == 2);

    Graph pet = Graph::generate("petersen");
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edges().size() == 15);
    CHECK(is_regular(pet, 3));
    // No triangles: the girth is 5.
    for (auto [u, v] : pet.edges())
        for (int w = 0; w < 10; ++w) {
            const auto& nu = pet.neighbors(u);
            const auto& nv = pet.neighbors(v);
            bool tri = std::find(nu.begin(), nu.end(), w) != nu.end() &&
                       std::find(nv.begin(), nv.end(), w) != nv.end();
            CHECK_FALSE(tri);
        }

    Graph circ = Graph::generate("circulant:6;1,2");
    CHECK(circ.vertex_count() == 6);
    CHECK(is_regular(circ, 4));
    CHECK(circ.edges().size() == 12);
    std::set<std::pair<int, int>> want;
    for (int i = 0; i < 6; ++i)
        for (int s : {1, 2}) want.insert(std::minmax((i + s) % 6, i));
    CHECK(edge_set(circ) == want);

    // Offset n/2 contributes each edge once.
    Graph c4circ = Graph::generate("circulant:4;1,2");
    CHECK(c4circ.edges().size() == 6);
    CHECK(is_regular(c4circ, 3));
}

TEST_CASE("generator errors") {
    for (const char* bad : {"cycle:2", "bipartite:1", "tripartite:1,1", "bipartite:0,3",
                            "circulant:6;1,1", "circulant:6;4", "circulant:6", "petersen:5",
                            "frobnicate:3", "complete:"})
        CHECK_THROWS_AS(Graph::generate(bad), std::invalid_argument);
}

TEST_CASE("explicit graphs and edge lists") {
    Graph g(4, {{0, 1}, {2, 1}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.gen_spec().empty());
    CHECK(g.degrees() == std::vector<int>{1, 2, 2, 1});

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);

    Graph parsed = Graph::parse_edge_list("4\n0 1\n2 1\n2 3\n");
    CHECK(edge_set(parsed) == edge_set(g));
    CHECK(Graph::parse_edge_list(g.edge_list_text()).edges() == g.edges());

    CHECK_THROWS_WITH_AS(Graph::parse_edge_list(""), "empty edge list", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::parse_edge_list("x\n"), "edge list must start with the vertex count",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::parse_edge_list("3 4\n"),
                         "first line must contain only the vertex count", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::parse_edge_list("3\n0 1 2\n"),
                         "edge line must contain exactly two vertex ids", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::parse_edge_list("3\n0 7\n"), "edge endpoint out of range",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::parse_edge_list("3\na b\n"), "malformed edge line",
                         std::invalid_argument);
}

TEST_CASE("degree residue classes") {
    CHECK(Graph::generate("bipartite:1,9").degree_residue_class(8) == 1);
    CHECK_FALSE(Graph::generate("bipartite:1,5").degree_residue_class(8).has_value());
    CHECK(Graph::generate("bipartite:1,5").degree_residue_class(4) == 1);
    CHECK_FALSE(Graph::generate("bipartite:2,3").degree_residue_class(2).has_value());
    CHECK(Graph::generate("cycle:7").degree_residue_class(2) == 0);
    CHECK(Graph::generate("complete:4").degree_residue_class(16) == 3);
    CHECK_THROWS_AS(Graph::generate("cycle:3").degree_residue_class(0), std::invalid_argument);
}

TEST_CASE("two_adic_valuation") {
    CHECK(two_adic_valuation(1) == 0);
    CHECK(two_adic_valuation(2) == 1);
    CHECK(two_adic_valuation(12) == 2);
    CHECK(two_adic_valuation(40) == 3);
    CHECK(two_adic_valuation(96) == 5);
    CHECK_THROWS_AS(two_adic_valuation(0), std::invalid_argument);
}

TEST_CASE("direct product with a cycle") {
    // K2 x C4: (i,j) ~ (i', j+-1) with i != i'; by hand this is two 4-cycles.
    Graph p = Graph::generate("complete:2").direct_product_with_cycle(4);
    CHECK(p.vertex_count() == 8);
    CHECK(p.edges().size() == 8);
    CHECK(is_regular(p, 2));
    std::set<std::pair<int, int>> want;
    for (int j = 0; j < 4; ++j) {
        want.insert(std::minmax(0 * 4 + j, 1 * 4 + (j + 1) % 4));
        want.insert(std::minmax(0 * 4 + j, 1 * 4 + (j + 3) % 4));
    }
    CHECK(edge_set(p) == want);
    auto comps = p.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 4);
    CHECK(comps[1].size() == 4);

    // Degrees double; C3 x C4 is connected and 4-regular.
    Graph q = Graph::generate("cycle:3").direct_product_with_cycle(4);
    CHECK(q.vertex_count() == 12);
    CHECK(q.edges().size() == 24);
    CHECK(is_regular(q, 4));
    CHECK(q.components().size() == 1);

    Graph s = Graph::generate("bipartite:1,2").direct_product_with_cycle(4);
    CHECK(s.vertex_count() == 12);
    CHECK(s.edges().size() == 16);
    for (int j = 0; j < 4; ++j) CHECK(s.degree(j) == 4);
    for (int v = 4; v < 12; ++v) CHECK(s.degree(v) == 2);
    CHECK(s.components().size() == 2);

    // K1 x C_k is edgeless.
    Graph e = Graph::generate("complete:1").direct_product_with_cycle(8);
    CHECK(e.vertex_count() == 8);
    CHECK(e.edges().empty());
    CHECK(e.components().size() == 8);

    CHECK_THROWS_AS(Graph::generate("complete:2").direct_product_with_cycle(2),
                    std::invalid_argument);
}
