#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "tww/finite_field.hpp"
#include "tww/rng.hpp"
#include "tww/trigraph.hpp"

namespace tww {

class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameter records for the graph families; vertex numbering per family is
/// documented on each record.
namespace family {

/// Paley graph on F_q, vertex i = field element with encoding i.
struct Paley { std::uint32_t q; };
/// G(n, p) on [0, n): pairs visited in lexicographic order, one draw each.
struct Gnp { std::size_t n; double p; std::uint64_t seed = kDefaultSeed; };
/// 0 - 1 - ... - (n-1).
struct Path { std::size_t n; };
/// Path plus the edge (n-1, 0); n >= 3.
struct Cycle { std::size_t n; };
struct Complete { std::size_t n; };
struct Empty { std::size_t n; };
/// K_{1,t}: center 0, leaves 1..t.
struct Star { std::size_t t; };
/// 1-subdivision of K_{1,t}: center 0, middles 1..t, leaf t+i hangs off middle i.
struct StarSubdivision { std::size_t t; };
/// Spine 0..L-1 as a path, then the leaves of spine vertex 0, of 1, ... numbered from L.
struct Caterpillar { std::vector<std::size_t> leaves_per_spine; };
/// Uniform labeled tree on [0, n) decoded from a random Pruefer sequence.
struct RandomTree { std::size_t n; std::uint64_t seed = kDefaultSeed; };
/// Vertex r * cols + c.
struct Grid { std::size_t rows; std::size_t cols; };

}  // namespace family

using GraphFamilySpec = std::variant<family::Paley, family::Gnp, family::Path, family::Cycle, family::Complete,
                                     family::Empty, family::Star, family::StarSubdivision, family::Caterpillar,
                                     family::RandomTree, family::Grid>;

[[nodiscard]] Trigraph family_graph(const GraphFamilySpec& spec);

[[nodiscard]] Trigraph paley(std::uint32_t q);
[[nodiscard]] Trigraph gnp(std::size_t n, double p, std::uint64_t seed = kDefaultSeed);
[[nodiscard]] Trigraph path_graph(std::size_t n);
[[nodiscard]] Trigraph cycle_graph(std::size_t n);
[[nodiscard]] Trigraph complete_graph(std::size_t n);
[[nodiscard]] Trigraph star_graph(std::size_t t);
[[nodiscard]] Trigraph star_subdivision(std::size_t t);
[[nodiscard]] Trigraph caterpillar(const std::vector<std::size_t>& leaves_per_spine);
[[nodiscard]] Trigraph random_tree(std::size_t n, std::uint64_t seed);
[[nodiscard]] Trigraph grid_graph(std::size_t rows, std::size_t cols);

/// Caterpillar on n >= 1 vertices with a random spine length and leaf
/// placement, labels shuffled.
[[nodiscard]] Trigraph random_caterpillar(std::size_t n, std::uint64_t seed);
/// Connected graph with exactly one cycle (length >= 3) on n >= 3 vertices:
/// a random cycle with random trees grown onto it, labels shuffled.
[[nodiscard]] Trigraph random_unicyclic(std::size_t n, std::uint64_t seed);

/// Plain-graph complement. Throws TrigraphError when red edges are present.
[[nodiscard]] Trigraph complement(const Trigraph& g);

/// n = 1 mod 4, (n-1)/2-regular, adjacent pairs share (n-5)/4 neighbors and
/// nonadjacent pairs (n-1)/4.
[[nodiscard]] bool is_conference_graph(const Trigraph& g);

}  // namespace tww
