#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tww/rng.hpp"
#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

enum class Decision { yes, no, unknown };

struct ExactOptions {
    std::uint64_t node_budget = 10'000'000;
    std::uint64_t seed = kDefaultSeed;  // for the upper-bound heuristics
};

struct ExactResult {
    enum class Status { exact, unknown };
    Status status = Status::unknown;
    std::size_t lower = 0;
    std::size_t upper = 0;
    ContractionSequence certificate;  // achieves `upper`
    std::uint64_t nodes = 0;
};

/// Largest trigraph the exact search accepts.
inline constexpr std::size_t kExactMaxVertices = 64;

/// Whether some contraction sequence of `g` has width at most d. Search
/// nodes beyond `node_budget` give Decision::unknown. On yes, `witness`
/// (if given) receives a sequence of width at most d.
[[nodiscard]] Decision decide_at_most(const Trigraph& g, std::size_t d, std::uint64_t node_budget,
                                      ContractionSequence* witness = nullptr);

/// Iterative deepening from the pair lower bound up to the best heuristic
/// width. Throws std::invalid_argument above kExactMaxVertices vertices.
[[nodiscard]] ExactResult exact_twinwidth(const Trigraph& g, const ExactOptions& options = {});

/// max(max red degree, min over pairs of the red degree of the merged vertex).
[[nodiscard]] std::size_t pair_lower_bound(const Trigraph& g);

/// Isomorphism-invariant encoding of a trigraph (edge colors respected,
/// labels ignored). Exponential in the worst case; meant for small inputs.
[[nodiscard]] std::string canonical_form(const Trigraph& g);

/// One representative per isomorphism class of plain graphs on [0, n).
[[nodiscard]] std::vector<Trigraph> graph_catalog(std::size_t n);

}  // namespace tww
