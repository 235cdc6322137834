#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tww/constructions.hpp"
#include "tww/finite_field.hpp"
#include "tww/generators.hpp"
#include "tww/kernels.hpp"

namespace tww {

BoundedSequence certify(const Trigraph& g, ContractionSequence seq, double bound, bool strict) {
    BoundedSequence out;
    out.width = apply_sequence(g, seq).width;
    out.sequence = std::move(seq);
    out.claimed_bound = bound;
    const auto w = static_cast<double>(out.width);
    out.bound_met = strict ? w < bound : w <= bound;
    return out;
}

std::size_t lower_bound_min_symdiff(const Trigraph& g) {
    if (g.num_vertices() < 2) throw std::invalid_argument("lower bound needs at least two vertices");
    return kernels::min_symdiff_parallel(kernels::AdjacencyBits(g)).value;
}

BoundedSequence paley_sequence(std::uint32_t q) {
    const Trigraph g = paley(q);
    const FiniteField field(q);
    ContractionSequence seq;
    for (FiniteField::Element u = 1; u < q; ++u) {
        const auto minus_u = field.neg(u);
        if (u < minus_u) seq.push(u, minus_u);
    }
    return certify(g, complete_sequence(g, std::move(seq)), static_cast<double>(q - 1) / 2.0, false);
}

double vertex_bound(std::size_t n) {
    const auto x = static_cast<double>(n);
    const double ln = std::log(x);
    return (x + std::sqrt(x * ln) + std::sqrt(x) + 2.0 * ln) / 2.0;
}

PairSet find_disjoint_pairs(const Trigraph& g) {
    const kernels::AdjacencyBits adj(g);
    const std::size_t n = adj.size();
    PairSet out;
    out.threshold = (static_cast<double>(n) + std::sqrt(static_cast<double>(n)) - 1.0) / 2.0;
    if (n < 2) return out;

    const auto matrix = kernels::symdiff_matrix_parallel(adj);
    struct Cand {
        std::uint32_t value;
        std::uint32_t i;
        std::uint32_t j;
    };
    std::vector<Cand> cands;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const auto v = matrix[std::size_t{i} * n + j];
            if (static_cast<double>(v) <= out.threshold) cands.push_back({v, i, j});
        }
    }
    // Taking candidates in (value, i, j) order while skipping used vertices is
    // the same as repeatedly choosing the smallest pair among the leftovers.
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return std::tie(a.value, a.i, a.j) < std::tie(b.value, b.i, b.j);
    });
    std::vector<bool> used(n, false);
    for (const auto& c : cands) {
        if (used[c.i] || used[c.j]) continue;
        used[c.i] = used[c.j] = true;
        out.pairs.emplace_back(adj.label(c.i), adj.label(c.j));
    }
    return out;
}

BoundedSequence vertex_bound_sequence(const Trigraph& g, std::uint64_t seed, std::size_t max_attempts) {
    const std::size_t n = g.num_vertices();
    const double bound = vertex_bound(std::max<std::size_t>(n, 1));
    if (n <= 2) return certify(g, lowest_label_completion(g), bound, true);

    const PairSet m = find_disjoint_pairs(g);
    std::optional<BoundedSequence> best;
    std::size_t attempts = 0;
    while (attempts < std::max<std::size_t>(max_attempts, 1)) {
        Rng rng(derive_seed(seed, attempts++));
        auto order = m.pairs;
        shuffle(order, rng);
        ContractionSequence seq;
        for (const auto& [u, v] : order) seq.push(u, v);
        auto cur = certify(g, complete_sequence(g, std::move(seq)), bound, true);
        if (!best || cur.width < best->width) best = std::move(cur);
        if (best->bound_met) break;
    }
    best->attempts = attempts;
    return *best;
}

OrderBound order_bound_check(const Trigraph& g, const PairSet& pairs, std::span<const std::size_t> order) {
    const std::size_t s = pairs.pairs.size();
    if (order.size() != s) throw std::invalid_argument("order must be a permutation of the pairs");
    {
        std::vector<bool> seen(s, false);
        for (const auto idx : order) {
            if (idx >= s || seen[idx]) throw std::invalid_argument("order must be a permutation of the pairs");
            seen[idx] = true;
        }
    }
    std::vector<bool> used(g.id_bound(), false);
    for (const auto& [a, b] : pairs.pairs) {
        if (!g.has_vertex(a) || !g.has_vertex(b) || a == b) {
            throw std::invalid_argument("pair references an unknown vertex or repeats one");
        }
        if (used[a] || used[b]) throw std::invalid_argument("pairs overlap");
        used[a] = used[b] = true;
    }
    if (!g.is_plain()) throw TrigraphError("order bound expects a graph without red edges");

    // Color of the edge from the merged vertex of (a, b) to an outside x, on
    // the plain graph: 0 none, 1 black, 2 red.
    const auto merged_color = [&](VertexId a, VertexId b, VertexId x) {
        const bool ea = g.adjacent(a, x);
        const bool eb = g.adjacent(b, x);
        return ea && eb ? 1 : (!ea && !eb ? 0 : 2);
    };

    OrderBound out;
    out.merged_red.assign(s, 0);
    out.step.assign(s, std::vector<int>(s, 0));
    for (std::size_t i = 0; i < s; ++i) {
        const auto [a, b] = pairs.pairs[order[i]];
        out.merged_red[i] = static_cast<long>(symmetric_difference_size(g, a, b));
        for (std::size_t j = 0; j < s; ++j) {
            if (i == j) continue;
            const auto [c, d] = pairs.pairs[order[j]];
            const int to_c = merged_color(a, b, c);
            const int to_d = merged_color(a, b, d);
            const int red_before = (to_c == 2) + (to_d == 2);
            int after;  // the edge to the merged c-d vertex
            if (to_c == 1 && to_d == 1) {
                after = 0;
            } else if (to_c == 0 && to_d == 0) {
                after = 0;
            } else {
                after = 1;
            }
            out.step[i][j] = after - red_before;
        }
    }
    const auto n = static_cast<long>(g.num_vertices());
    out.bound = n - static_cast<long>(s) - 1;
    for (std::size_t i = 0; i + 1 < s; ++i) {
        long running = out.merged_red[i];
        for (std::size_t k = 0; k < i; ++k) running += out.step[i][k];
        for (std::size_t j = i; j + 1 < s; ++j) {
            running += out.step[i][j];
            out.bound = std::max(out.bound, running);
        }
    }
    return out;
}

double edge_bound(std::size_t m) {
    const auto x = static_cast<double>(m);
    const double q4 = std::pow(x, 0.25);
    return std::sqrt(3.0 * x) + q4 * std::sqrt(std::log(x)) / (4.0 * std::pow(3.0, 0.25)) + 1.5 * q4;
}

double edge_partition_k(std::size_t m) {
    const double q = std::sqrt(4.0 * static_cast<double>(m) / 3.0);
    const double lq = std::log(q);
    return q - (std::sqrt(q * lq) + std::sqrt(q)) / 6.0 - lq / 9.0;
}

double edge_width_target(std::size_t m) {
    const double q = std::sqrt(4.0 * static_cast<double>(m) / 3.0);
    const double lq = std::log(q);
    return 1.5 * (q + (std::sqrt(q * lq) + std::sqrt(q)) / 6.0 + 5.0 * lq / 9.0);
}

WeightPartition partition_by_weight(std::span<const double> weights, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("partition parameter k must be positive");
    for (const double w : weights) {
        if (w < 0.0 || std::isnan(w)) throw std::invalid_argument("weights must be nonnegative");
    }
    WeightPartition out;
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    out.budget = total / k;

    std::vector<std::size_t> rest(weights.size());
    std::iota(rest.begin(), rest.end(), std::size_t{0});
    const auto by_weight = [&](std::size_t a, std::size_t b) {
        return weights[a] != weights[b] ? weights[a] < weights[b] : a < b;
    };
    double kk = k;
    while (!rest.empty()) {
        if (kk <= 1.0) {
            out.blocks.push_back(rest);
            break;
        }
        if (kk > static_cast<double>(rest.size())) {
            out.removed.insert(out.removed.end(), rest.begin(), rest.end());
            break;
        }
        double sum = 0.0;
        for (const auto i : rest) sum += weights[i];
        const double budget = sum / kk;

        std::sort(rest.begin(), rest.end(), by_weight);
        // Ascending fill: once an element overflows, every later one does too.
        std::size_t taken = 0;
        double filled = 0.0;
        while (taken < rest.size() && filled + weights[rest[taken]] <= budget) {
            filled += weights[rest[taken]];
            ++taken;
        }
        std::vector<std::size_t> block(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(taken));
        std::sort(block.begin(), block.end());
        if (taken == rest.size()) {
            out.blocks.push_back(std::move(block));
            break;
        }
        out.blocks.push_back(std::move(block));
        out.removed.push_back(rest.back());  // heaviest leftover
        rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(taken));
        rest.pop_back();
        std::sort(rest.begin(), rest.end());
        kk -= 1.0;
    }
    std::erase_if(out.blocks, [](const auto& b) { return b.empty(); });
    std::sort(out.removed.begin(), out.removed.end());
    return out;
}

BoundedSequence edge_bound_sequence(const Trigraph& g, std::uint64_t seed) {
    const std::size_t m = g.num_edges();
    if (m == 0) return certify(g, lowest_label_completion(g), 0.0, false);
    if (m <= 3) {
        // Every graph with at most three edges is a cograph or a forest of
        // caterpillars.
        auto out = cograph_sequence(g);
        if (!out) out = caterpillar_forest_sequence(g);
        out->claimed_bound = edge_bound(m);
        out->bound_met = static_cast<double>(out->width) < out->claimed_bound;
        return *out;
    }

    const auto labels = g.vertices();
    std::vector<double> degrees;
    degrees.reserve(labels.size());
    for (const auto v : labels) degrees.push_back(static_cast<double>(g.degree(v)));

    auto part = partition_by_weight(degrees, edge_partition_k(m));
    if (part.removed.empty() && !part.blocks.empty()) {
        auto largest = std::max_element(part.blocks.begin(), part.blocks.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
        part.removed.push_back(largest->back());
        largest->pop_back();
        if (largest->empty()) part.blocks.erase(largest);
    }

    ContractionSequence seq;
    for (const auto& block : part.blocks) {
        for (std::size_t j = 1; j < block.size(); ++j) seq.push(labels[block[0]], labels[block[j]]);
    }
    std::vector<VertexId> leftover;
    for (const auto i : part.removed) leftover.push_back(labels[i]);
    const Trigraph sub = induced_subgraph(g, leftover);
    seq.append(vertex_bound_sequence(sub, seed).sequence);
    return certify(g, complete_sequence(g, std::move(seq)), edge_bound(m), true);
}

}  // namespace tww
