// Serial reference vs OpenMP kernels: pairwise symmetric differences and the
// Monte-Carlo experiment loop. Prints wall times and checks that both agree.

#include <chrono>
#include <cstdlib>

#include <fmt/format.h>

#include "tww/experiment.hpp"
#include "tww/generators.hpp"
#include "tww/kernels.hpp"

namespace {

template <class F>
double seconds(F&& f, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    namespace k = tww::kernels;
    fmt::print("workers {}\n", k::worker_count());
    fmt::print("{:<28} {:>6} {:>12} {:>12} {:>8}\n", "kernel", "n", "serial ms", "parallel ms", "agree");

    bool agree_all = true;
    for (const std::size_t n : {200, 500, 1000, 2000}) {
        const k::AdjacencyBits adj(tww::gnp(n, 0.5, n));
        k::PairValue a{};
        k::PairValue b{};
        const double ts = seconds([&] { a = k::min_symdiff_serial(adj); }, reps);
        const double tp = seconds([&] { b = k::min_symdiff_parallel(adj); }, reps);
        agree_all = agree_all && a == b;
        fmt::print("{:<28} {:>6} {:>12.3f} {:>12.3f} {:>8}\n", "min_symdiff", n, ts * 1e3, tp * 1e3, a == b);

        std::vector<std::uint32_t> ms;
        std::vector<std::uint32_t> mp;
        const double us = seconds([&] { ms = k::symdiff_matrix_serial(adj); }, reps);
        const double up = seconds([&] { mp = k::symdiff_matrix_parallel(adj); }, reps);
        agree_all = agree_all && ms == mp;
        fmt::print("{:<28} {:>6} {:>12.3f} {:>12.3f} {:>8}\n", "symdiff_matrix", n, us * 1e3, up * 1e3, ms == mp);
    }

    tww::ExperimentConfig cfg;
    cfg.kind = tww::ExperimentKind::symdiff;
    cfg.ns = {300};
    cfg.samples = 40;
    std::vector<tww::ExperimentRecord> rs;
    std::vector<tww::ExperimentRecord> rp;
    const double es = seconds([&] { rs = tww::run_experiment_serial(cfg); }, 1);
    const double ep = seconds([&] { rp = tww::run_experiment(cfg); }, 1);
    agree_all = agree_all && rs == rp;
    fmt::print("{:<28} {:>6} {:>12.3f} {:>12.3f} {:>8}\n", "experiment (40 samples)", 300, es * 1e3, ep * 1e3, rs == rp);
    return agree_all ? 0 : 1;
}
