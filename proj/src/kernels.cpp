#include "tww/kernels.hpp"

#include <omp.h>

#include <bit>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace tww::kernels {

AdjacencyBits::AdjacencyBits(const Trigraph& g) : labels_(g.vertices()) {
    if (!g.is_plain()) throw TrigraphError("dense adjacency requires a graph without red edges");
    const std::size_t n = labels_.size();
    words_ = (n + 63) / 64;
    bits_.assign(n * words_, 0);
    std::vector<std::size_t> index(g.id_bound(), 0);
    for (std::size_t i = 0; i < n; ++i) index[labels_[i]] = i;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t* r = bits_.data() + i * words_;
        for (const auto& [x, c] : g.neighbors(labels_[i])) {
            const std::size_t j = index[x];
            r[j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
}

std::size_t AdjacencyBits::symdiff(std::size_t i, std::size_t j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    std::size_t count = 0;
    for (std::size_t w = 0; w < words_; ++w) count += std::popcount(a[w] ^ b[w]);
    // i is in N(j) iff j is in N(i); each such membership shows up once on
    // each side of the xor and must not be counted.
    if (test(i, j)) count -= 2;
    return count;
}

namespace {

void require_pairs(const AdjacencyBits& adj) {
    if (adj.size() < 2) throw std::invalid_argument("pairwise scan needs at least two vertices");
}

bool better(const PairValue& a, const PairValue& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

PairValue min_symdiff_serial(const AdjacencyBits& adj) {
    require_pairs(adj);
    PairValue best{std::numeric_limits<std::size_t>::max(), 0, 0};
    for (std::size_t i = 0; i < adj.size(); ++i) {
        for (std::size_t j = i + 1; j < adj.size(); ++j) {
            const PairValue cand{adj.symdiff(i, j), i, j};
            if (better(cand, best)) best = cand;
        }
    }
    return best;
}

PairValue min_symdiff_parallel(const AdjacencyBits& adj) {
    require_pairs(adj);
    const auto n = static_cast<std::int64_t>(adj.size());
    PairValue best{std::numeric_limits<std::size_t>::max(), 0, 0};
#pragma omp parallel num_threads(worker_count())
    {
        PairValue local{std::numeric_limits<std::size_t>::max(), 0, 0};
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t j = i + 1; j < n; ++j) {
                const PairValue cand{adj.symdiff(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                                     static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
                if (better(cand, local)) local = cand;
            }
        }
#pragma omp critical(tww_min_symdiff)
        if (better(local, best)) best = local;
    }
    return best;
}

std::vector<std::uint32_t> symdiff_matrix_serial(const AdjacencyBits& adj) {
    const std::size_t n = adj.size();
    std::vector<std::uint32_t> out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out[i * n + j] = out[j * n + i] = static_cast<std::uint32_t>(adj.symdiff(i, j));
        }
    }
    return out;
}

std::vector<std::uint32_t> symdiff_matrix_parallel(const AdjacencyBits& adj) {
    const std::size_t n = adj.size();
    std::vector<std::uint32_t> out(n * n, 0);
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count())
    for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
        const auto i = static_cast<std::size_t>(si);
        for (std::size_t j = i + 1; j < n; ++j) {
            out[i * n + j] = out[j * n + i] = static_cast<std::uint32_t>(adj.symdiff(i, j));
        }
    }
    return out;
}

int worker_count() {
    int workers = omp_get_max_threads();
    if (const char* env = std::getenv("TWW_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0 && cap < workers) workers = cap;
    }
    return workers;
}

}  // namespace tww::kernels
