#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "tww/generators.hpp"
#include "tww/trigraph.hpp"

using tww::EdgeColor;
using tww::Trigraph;

TEST_CASE("contracting the ends of a path makes a red edge to the middle") {
    const auto p3 = tww::path_graph(3);
    const auto g = tww::contract(p3, 0, 2);
    CHECK(g.num_vertices() == 2);
    CHECK(g.edge(0, 1) == EdgeColor::black);
    CHECK(g.max_red_degree() == 0);

    const auto h = tww::contract(p3, 0, 1);
    CHECK(h.edge(0, 2) == EdgeColor::red);
    CHECK(h.red_degree(0) == 1);
    CHECK_FALSE(h.has_vertex(1));
}

TEST_CASE("contracting two triangle vertices keeps the third edge black") {
    const auto g = tww::contract(tww::complete_graph(3), 1, 2);
    CHECK(g.edge(0, 1) == EdgeColor::black);
    CHECK(g.num_red_edges() == 0);
}

TEST_CASE("Paley(5) pair 1,4 gives merged red degree 2") {
    const auto g = tww::contract(tww::paley(5), 1, 4);
    CHECK(g.red_degree(1) == 2);
    CHECK(g.max_red_degree() == 2);
}

TEST_CASE("red contraction rule: red wins over black, absent pairs stay absent") {
    Trigraph g(4);
    g.add_edge(0, 2, EdgeColor::red);
    g.add_edge(1, 2, EdgeColor::black);
    g.add_edge(0, 3, EdgeColor::black);
    g.add_edge(1, 3, EdgeColor::black);
    g.contract(0, 1);
    CHECK(g.edge(0, 2) == EdgeColor::red);
    CHECK(g.edge(0, 3) == EdgeColor::black);
    CHECK(g.red_degree(2) == 1);
    CHECK(g.num_vertices() == 3);
}

TEST_CASE("boundary sizes on C5") {
    const auto c5 = tww::cycle_graph(5);
    const std::vector<tww::VertexId> one{0};
    const std::vector<tww::VertexId> two{0, 1};
    CHECK(tww::boundary_size(c5, one) == 2);
    CHECK(tww::boundary_size(c5, two) == 2);
}

TEST_CASE("symmetric differences") {
    CHECK(tww::symmetric_difference_size(tww::path_graph(4), 0, 1) == 1);
    const auto c5 = tww::cycle_graph(5);
    for (tww::VertexId u = 0; u < 5; ++u) {
        for (tww::VertexId v = u + 1; v < 5; ++v) CHECK(tww::symmetric_difference_size(c5, u, v) == 2);
    }
    CHECK_THROWS_AS((void)tww::symmetric_difference_size(c5, 2, 2), tww::TrigraphError);
    Trigraph red(2);
    red.add_edge(0, 1, EdgeColor::red);
    CHECK_THROWS_AS((void)tww::symmetric_difference_size(red, 0, 1), tww::TrigraphError);
}

TEST_CASE("bad vertices are rejected") {
    Trigraph g(3);
    CHECK_THROWS_AS(g.contract(0, 0), tww::TrigraphError);
    CHECK_THROWS_AS(g.contract(0, 7), tww::TrigraphError);
    CHECK_THROWS_AS(g.add_edge(1, 1), tww::TrigraphError);
    CHECK_THROWS_AS(g.add_vertex(2), tww::TrigraphError);
    g.remove_vertex(2);
    CHECK_THROWS_AS((void)g.neighbors(2), tww::TrigraphError);
}

TEST_CASE("in-place contraction matches the definition on random trigraphs") {
    tww::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + tww::uniform_below(rng, 12);
        auto g = oracle::random_trigraph(rng, n, tww::uniform01(rng), 0.4);
        while (g.num_vertices() > 1) {
            auto vs = g.vertices();
            tww::shuffle(vs, rng);
            const auto expected = oracle::contracted(g, vs[0], vs[1]);
            g.contract(vs[0], vs[1]);
            REQUIRE(g == expected);
            REQUIRE(g.max_red_degree() == oracle::max_red(g));
            REQUIRE(g.num_edges() == expected.edges().size());
        }
    }
}

TEST_CASE("edge recoloring and removal keep counters consistent") {
    Trigraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2, EdgeColor::red);
    g.add_edge(0, 1, EdgeColor::red);
    CHECK(g.num_red_edges() == 2);
    CHECK(g.num_black_edges() == 0);
    CHECK(g.max_red_degree() == 2);
    g.remove_edge(0, 2);
    CHECK(g.max_red_degree() == 1);
    g.remove_vertex(1);
    CHECK(g.max_red_degree() == 0);
    CHECK(g.num_edges() == 0);
}

TEST_CASE("induced subgraphs, relabeling and components") {
    const auto c6 = tww::cycle_graph(6);
    const std::vector<tww::VertexId> keep{0, 1, 2, 4};
    const auto sub = tww::induced_subgraph(c6, keep);
    CHECK(sub.num_vertices() == 4);
    CHECK(sub.num_edges() == 2);
    const auto comps = tww::connected_components(sub);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<tww::VertexId>{0, 1, 2});
    CHECK(comps[1] == std::vector<tww::VertexId>{4});

    std::map<tww::VertexId, tww::VertexId> shift;
    for (tww::VertexId v = 0; v < 6; ++v) shift[v] = (v + 1) % 6;
    CHECK(tww::relabel(c6, shift) == c6);
}

TEST_CASE("degree propagation across partial sequences") {
    tww::Rng rng(21);
    CHECK(props::degree_propagation_violations(rng, 300) == 0);
}

TEST_CASE("vertices left alone gain at most one red edge per merged vertex") {
    tww::Rng rng(22);
    CHECK(props::untouched_vertex_violations(rng, 300) == 0);
}

TEST_CASE("symmetric difference equals the merged red degree") {
    tww::Rng rng(23);
    CHECK(props::symdiff_merge_violations(rng, 300) == 0);
}
