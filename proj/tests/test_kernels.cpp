#include <doctest.h>

#include <cstdlib>

#include <omp.h>

#include "oracles.hpp"
#include "tww/kernels.hpp"

using namespace tww::kernels;

TEST_CASE("bit-matrix symmetric differences match set arithmetic") {
    tww::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + tww::uniform_below(rng, 150);
        const auto g = oracle::random_graph(rng, n, tww::uniform01(rng));
        const AdjacencyBits adj(g);
        for (int k = 0; k < 20; ++k) {
            const auto i = tww::uniform_below(rng, n);
            auto j = tww::uniform_below(rng, n - 1);
            if (j >= i) ++j;
            CHECK(adj.symdiff(i, j) == oracle::symdiff(g, adj.label(i), adj.label(j)));
        }
    }
}

TEST_CASE("parallel kernels agree with the serial reference") {
    tww::Rng rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + tww::uniform_below(rng, 200);
        const auto g = oracle::random_graph(rng, n, tww::uniform01(rng));
        const AdjacencyBits adj(g);
        const auto s = min_symdiff_serial(adj);
        CHECK(s == min_symdiff_parallel(adj));
        CHECK(symdiff_matrix_serial(adj) == symdiff_matrix_parallel(adj));
        if (n <= 40) CHECK(s.value == oracle::min_symdiff(g));
    }
}

TEST_CASE("minimum ties break toward the smallest pair") {
    const tww::Trigraph empty(5);
    const auto best = min_symdiff_serial(AdjacencyBits(empty));
    CHECK(best.value == 0);
    CHECK(best.i == 0);
    CHECK(best.j == 1);
}

TEST_CASE("adjacency bits reject red edges and honor labels") {
    tww::Trigraph g(3);
    g.remove_vertex(1);
    g.add_edge(0, 2);
    const AdjacencyBits adj(g);
    CHECK(adj.size() == 2);
    CHECK(adj.label(1) == 2);
    CHECK(adj.test(0, 1));
    g.add_edge(0, 2, tww::EdgeColor::red);
    CHECK_THROWS((void)AdjacencyBits(g));
    CHECK(worker_count() >= 1);
}

TEST_CASE("TWW_THREADS caps the worker count and results do not depend on it") {
    omp_set_num_threads(4);
    tww::Rng rng(6);
    const auto g = oracle::random_graph(rng, 120, 0.5);
    const AdjacencyBits adj(g);
    const auto reference = min_symdiff_serial(adj);
    CHECK(worker_count() == 4);
    CHECK(min_symdiff_parallel(adj) == reference);
    setenv("TWW_THREADS", "2", 1);
    CHECK(worker_count() == 2);
    CHECK(min_symdiff_parallel(adj) == reference);
    setenv("TWW_THREADS", "64", 1);
    CHECK(worker_count() == 4);
    setenv("TWW_THREADS", "junk", 1);
    CHECK(worker_count() == 4);
    unsetenv("TWW_THREADS");
    CHECK(symdiff_matrix_parallel(adj) == symdiff_matrix_serial(adj));
}
