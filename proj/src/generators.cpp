#include "tww/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "tww/kernels.hpp"

namespace tww {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Trigraph shuffled_labels(const Trigraph& g, Rng& rng) {
    std::vector<VertexId> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), VertexId{0});
    shuffle(perm, rng);
    std::map<VertexId, VertexId> mapping;
    const auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) mapping[vs[i]] = perm[i];
    return relabel(g, mapping);
}

}  // namespace

Trigraph paley(std::uint32_t q) {
    if (q % 4 != 1) {
        throw GeneratorError("Paley graph needs q = 1 (mod 4), got " + std::to_string(q));
    }
    const FiniteField field(q);
    std::vector<bool> square(q, false);
    for (const auto s : field.nonzero_squares()) square[s] = true;
    Trigraph g(q);
    for (VertexId a = 0; a < q; ++a) {
        for (VertexId b = a + 1; b < q; ++b) {
            if (square[field.sub(a, b)]) g.add_edge(a, b);
        }
    }
    return g;
}

Trigraph gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw GeneratorError("edge probability must lie in [0, 1]");
    Trigraph g(n);
    Rng rng(seed);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (uniform01(rng) < p) g.add_edge(i, j);
        }
    }
    return g;
}

Trigraph path_graph(std::size_t n) {
    Trigraph g(n);
    for (VertexId i = 1; i < n; ++i) g.add_edge(i - 1, i);
    return g;
}

Trigraph cycle_graph(std::size_t n) {
    if (n < 3) throw GeneratorError("a cycle needs at least 3 vertices");
    Trigraph g = path_graph(n);
    g.add_edge(static_cast<VertexId>(n - 1), 0);
    return g;
}

Trigraph complete_graph(std::size_t n) {
    Trigraph g(n);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Trigraph star_graph(std::size_t t) {
    Trigraph g(t + 1);
    for (VertexId i = 1; i <= t; ++i) g.add_edge(0, i);
    return g;
}

Trigraph star_subdivision(std::size_t t) {
    Trigraph g(2 * t + 1);
    for (VertexId i = 1; i <= t; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, static_cast<VertexId>(t + i));
    }
    return g;
}

Trigraph caterpillar(const std::vector<std::size_t>& leaves_per_spine) {
    if (leaves_per_spine.empty()) throw GeneratorError("caterpillar needs at least one spine vertex");
    const std::size_t spine = leaves_per_spine.size();
    const std::size_t leaves = std::accumulate(leaves_per_spine.begin(), leaves_per_spine.end(), std::size_t{0});
    Trigraph g(spine + leaves);
    for (VertexId i = 1; i < spine; ++i) g.add_edge(i - 1, i);
    auto next = static_cast<VertexId>(spine);
    for (VertexId s = 0; s < spine; ++s) {
        for (std::size_t l = 0; l < leaves_per_spine[s]; ++l) g.add_edge(s, next++);
    }
    return g;
}

Trigraph random_tree(std::size_t n, std::uint64_t seed) {
    Trigraph g(n);
    if (n < 2) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    Rng rng(seed);
    std::vector<VertexId> code(n - 2);
    for (auto& c : code) c = static_cast<VertexId>(uniform_below(rng, n));
    std::vector<std::size_t> remaining(n, 1);
    for (const auto c : code) ++remaining[c];
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < n; ++v) {
        if (remaining[v] == 1) leaves.push(v);
    }
    for (const auto c : code) {
        const VertexId leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, c);
        if (--remaining[c] == 1) leaves.push(c);
    }
    const VertexId a = leaves.top();
    leaves.pop();
    g.add_edge(a, leaves.top());
    return g;
}

Trigraph grid_graph(std::size_t rows, std::size_t cols) {
    Trigraph g(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto v = static_cast<VertexId>(r * cols + c);
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, static_cast<VertexId>(v + cols));
        }
    }
    return g;
}

Trigraph random_caterpillar(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw GeneratorError("caterpillar needs at least one vertex");
    Rng rng(seed);
    const std::size_t spine = 1 + static_cast<std::size_t>(uniform_below(rng, n));
    std::vector<std::size_t> leaves(spine, 0);
    for (std::size_t i = spine; i < n; ++i) ++leaves[uniform_below(rng, spine)];
    return shuffled_labels(caterpillar(leaves), rng);
}

Trigraph random_unicyclic(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw GeneratorError("a unicyclic graph needs at least 3 vertices");
    Rng rng(seed);
    const std::size_t len = 3 + static_cast<std::size_t>(uniform_below(rng, n - 2));
    Trigraph g(n);
    for (VertexId i = 0; i < len; ++i) g.add_edge(i, static_cast<VertexId>((i + 1) % len));
    for (auto v = static_cast<VertexId>(len); v < n; ++v) {
        g.add_edge(static_cast<VertexId>(uniform_below(rng, v)), v);
    }
    return shuffled_labels(g, rng);
}

Trigraph family_graph(const GraphFamilySpec& spec) {
    return std::visit(
        overloaded{
            [](const family::Paley& f) { return paley(f.q); },
            [](const family::Gnp& f) { return gnp(f.n, f.p, f.seed); },
            [](const family::Path& f) { return path_graph(f.n); },
            [](const family::Cycle& f) { return cycle_graph(f.n); },
            [](const family::Complete& f) { return complete_graph(f.n); },
            [](const family::Empty& f) { return Trigraph(f.n); },
            [](const family::Star& f) { return star_graph(f.t); },
            [](const family::StarSubdivision& f) { return star_subdivision(f.t); },
            [](const family::Caterpillar& f) { return caterpillar(f.leaves_per_spine); },
            [](const family::RandomTree& f) { return random_tree(f.n, f.seed); },
            [](const family::Grid& f) { return grid_graph(f.rows, f.cols); },
        },
        spec);
}

Trigraph complement(const Trigraph& g) {
    if (!g.is_plain()) throw TrigraphError("complement requires a graph without red edges");
    Trigraph h;
    const auto vs = g.vertices();
    for (const auto v : vs) h.add_vertex(v);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& ni = g.neighbors(vs[i]);
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!ni.contains(vs[j])) h.add_edge(vs[i], vs[j]);
        }
    }
    return h;
}

bool is_conference_graph(const Trigraph& g) {
    if (!g.is_plain()) return false;
    const std::size_t n = g.num_vertices();
    if (n % 4 != 1) return false;
    for (const auto v : g.vertices()) {
        if (g.degree(v) != (n - 1) / 2) return false;
    }
    const kernels::AdjacencyBits adj(g);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t common = 0;
            for (std::size_t w = 0; w < adj.words(); ++w) {
                common += static_cast<std::size_t>(std::popcount(adj.row(i)[w] & adj.row(j)[w]));
            }
            const std::size_t want = adj.test(i, j) ? (n - 5) / 4 : (n - 1) / 4;
            if (common != want) return false;
        }
    }
    return true;
}

}  // namespace tww
