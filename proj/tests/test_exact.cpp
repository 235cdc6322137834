#include <doctest.h>

#include "oracles.hpp"
#include "tww/constructions.hpp"
#include "tww/exact.hpp"
#include "tww/generators.hpp"

using tww::Decision;

TEST_CASE("decision examples") {
    CHECK(tww::decide_at_most(tww::path_graph(4), 0, 1000) == Decision::no);
    CHECK(tww::decide_at_most(tww::path_graph(4), 1, 1000) == Decision::yes);
    for (std::size_t n = 1; n <= 9; ++n) CHECK(tww::decide_at_most(tww::complete_graph(n), 0, 1000) == Decision::yes);
    CHECK(tww::decide_at_most(tww::cycle_graph(5), 1, 1000) == Decision::no);
    CHECK(tww::decide_at_most(tww::cycle_graph(5), 2, 1000) == Decision::yes);

    tww::ContractionSequence witness;
    REQUIRE(tww::decide_at_most(tww::star_subdivision(3), 2, 10000, &witness) == Decision::yes);
    const auto rep = tww::apply_sequence(tww::star_subdivision(3), witness);
    CHECK(rep.width <= 2);
    CHECK(rep.complete());
}

TEST_CASE("exact values of small named graphs") {
    CHECK(tww::exact_twinwidth(tww::path_graph(4)).upper == 1);
    CHECK(tww::exact_twinwidth(tww::star_subdivision(3)).upper == 2);
    CHECK(tww::exact_twinwidth(tww::cycle_graph(5)).upper == 2);
    CHECK(tww::exact_twinwidth(tww::paley(9)).upper == 4);
    const auto petersen_like = tww::paley(13);
    const auto r = tww::exact_twinwidth(petersen_like);
    CHECK(r.status == tww::ExactResult::Status::exact);
    CHECK(r.upper == 6);
    CHECK(tww::exact_twinwidth(tww::grid_graph(3, 3)).upper == oracle::twinwidth(tww::grid_graph(3, 3)));
}

TEST_CASE("exact solver agrees with exhaustive search on every graph up to 6 vertices") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& g : tww::graph_catalog(n)) {
            const auto r = tww::exact_twinwidth(g);
            REQUIRE(r.status == tww::ExactResult::Status::exact);
            REQUIRE(r.lower == r.upper);
            REQUIRE(r.upper == oracle::twinwidth(g));
            const auto rep = tww::apply_sequence(g, r.certificate);
            REQUIRE(rep.width == r.upper);
            REQUIRE(rep.complete());
        }
    }
}

TEST_CASE("exact solver handles trigraphs with red edges") {
    tww::Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + tww::uniform_below(rng, 5);
        const auto g = oracle::random_trigraph(rng, n, 0.5, 0.4);
        const auto r = tww::exact_twinwidth(g);
        REQUIRE(r.upper == oracle::twinwidth(g));
        REQUIRE(tww::apply_sequence(g, r.certificate).width == r.upper);
    }
}

TEST_CASE("budget exhaustion is reported") {
    const auto g = tww::gnp(30, 0.5, 2);
    tww::ExactOptions opts;
    opts.node_budget = 5;
    const auto r = tww::exact_twinwidth(g, opts);
    CHECK(r.status == tww::ExactResult::Status::unknown);
    CHECK(r.lower <= r.upper);
    CHECK(tww::apply_sequence(g, r.certificate).width == r.upper);
    CHECK(tww::decide_at_most(g, tww::pair_lower_bound(g) + 2, 5) == Decision::unknown);
    CHECK_THROWS_AS((void)tww::exact_twinwidth(tww::path_graph(65)), std::invalid_argument);
}

TEST_CASE("graph catalog sizes") {
    const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    const std::size_t connected[] = {1, 1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 0; n <= 7; ++n) {
        const auto graphs = tww::graph_catalog(n);
        CHECK(graphs.size() == all[n]);
        std::size_t conn = 0;
        for (const auto& g : graphs) conn += tww::connected_components(g).size() <= 1;
        CHECK(conn == connected[n]);
    }
}

TEST_CASE("canonical form is a complete isomorphism invariant") {
    tww::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + tww::uniform_below(rng, 7);
        const auto a = oracle::random_trigraph(rng, n, 0.5, 0.3);
        const auto b = oracle::permuted(a, oracle::random_permutation(rng, n));
        REQUIRE(tww::canonical_form(a) == tww::canonical_form(b));
        const auto c = oracle::random_trigraph(rng, n, 0.5, 0.3);
        REQUIRE((tww::canonical_form(a) == tww::canonical_form(c)) == oracle::isomorphic(a, c));
    }
}

TEST_CASE("pair lower bound") {
    CHECK(tww::pair_lower_bound(tww::paley(13)) == 6);
    CHECK(tww::pair_lower_bound(tww::path_graph(4)) == 1);
    tww::Trigraph red(3);
    red.add_edge(0, 1, tww::EdgeColor::red);
    red.add_edge(0, 2, tww::EdgeColor::red);
    CHECK(tww::pair_lower_bound(red) == 2);
}
