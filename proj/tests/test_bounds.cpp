#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "properties.hpp"
#include "tww/constructions.hpp"
#include "tww/exact.hpp"
#include "tww/generators.hpp"

TEST_CASE("pair lower bound equals (n-1)/2 on conference graphs") {
    for (const std::uint32_t q : {5u, 9u, 13u, 17u, 25u, 29u}) {
        CAPTURE(q);
        const auto g = tww::paley(q);
        CHECK(tww::lower_bound_min_symdiff(g) == (q - 1) / 2);
        if (q <= 13) CHECK(oracle::min_symdiff(g) == (q - 1) / 2);
    }
    CHECK(tww::lower_bound_min_symdiff(tww::cycle_graph(5)) == 2);
    CHECK_THROWS((void)tww::lower_bound_min_symdiff(tww::Trigraph(1)));
}

TEST_CASE("Paley certificates reach the lower bound") {
    for (const std::uint32_t q : {5u, 9u, 13u, 17u, 25u, 29u, 37u, 41u, 49u}) {
        CAPTURE(q);
        const auto s = tww::paley_sequence(q);
        CHECK(s.width == (q - 1) / 2);
        CHECK(s.bound_met);
        CHECK(s.sequence.size() == q - 1);
        CHECK(tww::apply_sequence(tww::paley(q), s.sequence).complete());
    }
    CHECK(oracle::twinwidth(tww::paley(5)) == 2);
}

TEST_CASE("disjoint low-difference pairs") {
    const auto p13 = tww::paley(13);
    const auto m13 = tww::find_disjoint_pairs(p13);
    CHECK(m13.pairs.size() == 6);
    CHECK(m13.threshold == doctest::Approx((13 + std::sqrt(13.0) - 1) / 2));

    const auto g = tww::gnp(50, 0.5);
    const auto m = tww::find_disjoint_pairs(g);
    CHECK(m.pairs.size() >= 22);

    tww::Rng rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + tww::uniform_below(rng, 40);
        const auto h = oracle::random_graph(rng, n, tww::uniform01(rng));
        const auto ps = tww::find_disjoint_pairs(h);
        std::vector<bool> used(n, false);
        for (const auto& [u, v] : ps.pairs) {
            REQUIRE(u < v);
            REQUIRE_FALSE(used[u]);
            REQUIRE_FALSE(used[v]);
            used[u] = used[v] = true;
            REQUIRE(static_cast<double>(oracle::symdiff(h, u, v)) <= ps.threshold);
        }
        // maximal: no two unused vertices could still be paired
        for (tww::VertexId u = 0; u < n; ++u) {
            for (tww::VertexId v = u + 1; v < n; ++v) {
                if (!used[u] && !used[v]) REQUIRE(static_cast<double>(oracle::symdiff(h, u, v)) > ps.threshold);
            }
        }
    }
}

TEST_CASE("vertex-count construction") {
    CHECK(tww::vertex_bound_sequence(tww::complete_graph(10)).width == 0);
    const auto g = tww::vertex_bound_sequence(tww::gnp(50, 0.5));
    CHECK(tww::vertex_bound(50) == doctest::Approx(39.44).epsilon(0.001));
    CHECK(g.width < 39.4);
    CHECK(g.bound_met);
    CHECK(tww::vertex_bound_sequence(tww::paley(13)).width <= 9);

    // the seed only changes the order of the pairs
    const auto h = tww::gnp(40, 0.5, 3);
    CHECK(tww::vertex_bound_sequence(h, 1).sequence.size() == 39);
    CHECK(tww::vertex_bound_sequence(h, 1).sequence == tww::vertex_bound_sequence(h, 1).sequence);
}

TEST_CASE("order bound") {
    tww::PairSet one;
    one.pairs = {{0, 1}};
    const std::vector<std::size_t> id{0};
    const auto k4 = tww::order_bound_check(tww::complete_graph(4), one, id);
    CHECK(k4.bound == 2);
    CHECK(k4.merged_red == std::vector<long>{0});

    tww::PairSet overlap;
    overlap.pairs = {{0, 1}, {1, 2}};
    const std::vector<std::size_t> two{0, 1};
    CHECK_THROWS_AS((void)tww::order_bound_check(tww::complete_graph(4), overlap, two), std::invalid_argument);
    const std::vector<std::size_t> dup{0, 0};
    tww::PairSet fine;
    fine.pairs = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS((void)tww::order_bound_check(tww::complete_graph(4), fine, dup), std::invalid_argument);

    // The bound dominates the width of the sequence it describes.
    tww::Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + tww::uniform_below(rng, 30);
        const auto g = oracle::random_graph(rng, n, tww::uniform01(rng));
        auto ps = tww::find_disjoint_pairs(g);
        std::vector<std::size_t> order(ps.pairs.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        tww::shuffle(order, rng);
        const auto ob = tww::order_bound_check(g, ps, order);
        tww::ContractionSequence seq;
        for (const auto i : order) seq.push(ps.pairs[i].first, ps.pairs[i].second);
        const auto rep = tww::apply_sequence(g, tww::complete_sequence(g, seq));
        REQUIRE(static_cast<long>(rep.width) <= ob.bound);
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto [a, b] = ps.pairs[order[i]];
            REQUIRE(ob.merged_red[i] == static_cast<long>(oracle::symdiff(g, a, b)));
            for (const auto x : ob.step[i]) REQUIRE((x >= -1 && x <= 1));
        }
    }
}

TEST_CASE("weight partition") {
    const std::vector<double> w{3, 1, 1, 1};
    const auto part = tww::partition_by_weight(w, 2.0);
    CHECK(part.budget == 3.0);
    CHECK(props::partition_ok(w, 2.0, part));
    CHECK_THROWS_AS((void)tww::partition_by_weight(w, 0.0), std::invalid_argument);
    const std::vector<double> neg{1, -1};
    CHECK_THROWS_AS((void)tww::partition_by_weight(neg, 2.0), std::invalid_argument);
    CHECK(tww::partition_by_weight(std::vector<double>{}, 3.0).blocks.empty());

    tww::Rng rng(10);
    CHECK(props::partition_violations(rng, 200) == 0);
}

TEST_CASE("edge-count construction") {
    const auto tri = tww::edge_bound_sequence(tww::complete_graph(3));
    CHECK(tri.width <= 1);
    CHECK(tri.bound_met);

    const auto star = tww::edge_bound_sequence(tww::star_graph(99));
    CHECK(static_cast<double>(star.width) <= std::ceil(tww::edge_width_target(99)));
    CHECK(star.bound_met);

    CHECK(tww::edge_bound_sequence(tww::Trigraph(4)).width == 0);
    for (const double p : {0.05, 0.1, 0.3}) {
        const auto g = tww::gnp(80, p, 4);
        const auto s = tww::edge_bound_sequence(g);
        CAPTURE(p);
        CHECK(s.claimed_bound == doctest::Approx(tww::edge_bound(g.num_edges())));
        CHECK(s.bound_met);
        CHECK(tww::apply_sequence(g, s.sequence).complete());
    }
}
