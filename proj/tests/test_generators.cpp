#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tww/constructions.hpp"
#include "tww/finite_field.hpp"
#include "tww/generators.hpp"

using tww::FiniteField;

namespace {

const std::vector<std::uint32_t> kPrimePowers = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 29, 32, 49, 64, 81, 121, 125, 128, 169};

bool is_path_after_leaf_removal(const tww::Trigraph& t) {
    tww::Trigraph spine = t;
    for (const auto v : t.vertices()) {
        if (t.degree(v) <= 1 && t.num_vertices() > 2) spine.remove_vertex(v);
    }
    for (const auto v : spine.vertices()) {
        if (spine.degree(v) > 2) return false;
    }
    return spine.num_vertices() == 0 || spine.num_edges() + 1 == spine.num_vertices();
}

}  // namespace

TEST_CASE("F_9 is F_3[x]/(x^2+1)") {
    const FiniteField f(9);
    CHECK(f.characteristic() == 3);
    CHECK(f.degree() == 2);
    CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    // x = 3, x^2 = -1 = 2
    CHECK(f.mul(3, 3) == 2);
}

TEST_CASE("field axioms hold for the built-in fields") {
    for (const auto q : kPrimePowers) {
        CAPTURE(q);
        const FiniteField f(q);
        tww::Rng rng(q);
        for (int k = 0; k < 300; ++k) {
            const auto a = static_cast<std::uint32_t>(tww::uniform_below(rng, q));
            const auto b = static_cast<std::uint32_t>(tww::uniform_below(rng, q));
            const auto c = static_cast<std::uint32_t>(tww::uniform_below(rng, q));
            REQUIRE(f.add(a, b) == f.add(b, a));
            REQUIRE(f.mul(a, b) == f.mul(b, a));
            REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.add(a, f.neg(a)) == 0);
            REQUIRE(f.sub(a, b) == f.add(a, f.neg(b)));
            REQUIRE(f.mul(a, f.one()) == a);
        }
        // no zero divisors, so every nonzero element is invertible
        for (std::uint32_t a = 1; a < q; ++a) {
            std::set<std::uint32_t> products;
            for (std::uint32_t b = 1; b < q; ++b) products.insert(f.mul(a, b));
            REQUIRE(products.size() == q - 1);
        }
        REQUIRE(f.nonzero_squares().size() == (q % 2 == 0 ? q - 1 : (q - 1) / 2));
    }
}

TEST_CASE("prime powers and irreducibility") {
    CHECK(tww::prime_power(125) == std::pair<std::uint32_t, std::uint32_t>{5, 3});
    CHECK_FALSE(tww::prime_power(12).has_value());
    CHECK_FALSE(tww::prime_power(1).has_value());
    CHECK(tww::is_irreducible({1, 0, 1}, 3));
    CHECK_FALSE(tww::is_irreducible({1, 0, 1}, 5));  // x^2 + 1 = (x - 2)(x + 2) over F_5
    CHECK_THROWS_AS(FiniteField(12), tww::FieldError);
    CHECK_THROWS_AS(FiniteField(25, std::vector<std::uint32_t>{1, 0, 1}), tww::FieldError);
    CHECK_NOTHROW(FiniteField(25, std::vector<std::uint32_t>{3, 0, 1}));
}

TEST_CASE("Paley graphs") {
    const FiniteField f13(13);
    CHECK(f13.nonzero_squares() == std::vector<std::uint32_t>{1, 3, 4, 9, 10, 12});
    const auto g13 = tww::paley(13);
    CHECK(g13.num_edges() == 13 * 6 / 2);
    CHECK(g13.adjacent(0, 1));
    CHECK_FALSE(g13.adjacent(0, 2));
    for (const std::uint32_t q : {5u, 9u, 13u, 17u, 25u, 29u, 37u, 41u, 49u}) {
        CAPTURE(q);
        CHECK(tww::is_conference_graph(tww::paley(q)));
    }
    CHECK_FALSE(tww::is_conference_graph(tww::cycle_graph(9)));
    CHECK(tww::is_conference_graph(tww::cycle_graph(5)));
    CHECK_THROWS_AS((void)tww::paley(7), tww::GeneratorError);
    CHECK_THROWS_AS((void)tww::paley(21), tww::FieldError);
}

TEST_CASE("G(n, p) is seeded and reproducible") {
    const auto g = tww::gnp(100, 0.5);
    CHECK(g.num_edges() == 2473);
    CHECK(g == tww::gnp(100, 0.5, tww::kDefaultSeed));
    CHECK_FALSE(g == tww::gnp(100, 0.5, 1));
    CHECK(tww::gnp(30, 0.0).num_edges() == 0);
    CHECK(tww::gnp(30, 1.0).num_edges() == 435);
    CHECK_THROWS_AS((void)tww::gnp(5, 1.5), tww::GeneratorError);
}

TEST_CASE("named families") {
    const auto c5 = tww::cycle_graph(5);
    const auto comp = tww::complement(c5);
    // 0-2-4-1-3-0 is a 5-cycle in the complement
    const tww::VertexId order[] = {0, 2, 4, 1, 3};
    for (int i = 0; i < 5; ++i) CHECK(comp.adjacent(order[i], order[(i + 1) % 5]));
    CHECK(comp.num_edges() == 5);
    CHECK(oracle::isomorphic(comp, c5));

    const auto s3 = tww::star_subdivision(3);
    CHECK(s3.num_vertices() == 7);
    CHECK(s3.num_edges() == 6);
    CHECK(tww::star_graph(4).degree(0) == 4);
    CHECK(tww::grid_graph(3, 4).num_edges() == 17);
    const auto cat = tww::caterpillar({2, 0, 1});
    CHECK(cat.num_vertices() == 6);
    CHECK(cat.adjacent(0, 3));
    CHECK(cat.adjacent(0, 4));
    CHECK(cat.adjacent(2, 5));
    CHECK_THROWS_AS((void)tww::cycle_graph(2), tww::GeneratorError);
    CHECK(tww::family_graph(tww::family::Star{3}) == tww::star_graph(3));
    CHECK(tww::family_graph(tww::family::Gnp{40, 0.3, 9}) == tww::gnp(40, 0.3, 9));
}

TEST_CASE("random trees, caterpillars and unicyclic graphs have their shape") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 1 + seed % 40;
        const auto t = tww::random_tree(n, seed);
        REQUIRE(t.num_vertices() == n);
        REQUIRE(tww::connected_components(t).size() == 1);
        REQUIRE(t.num_edges() == n - 1);

        const auto c = tww::random_caterpillar(n, seed);
        REQUIRE(tww::connected_components(c).size() == 1);
        REQUIRE(c.num_edges() == n - 1);
        REQUIRE(is_path_after_leaf_removal(c));

        if (n >= 3) {
            const auto u = tww::random_unicyclic(n, seed);
            REQUIRE(tww::connected_components(u).size() == 1);
            REQUIRE(u.num_edges() == n);
        }
    }
}
