#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tww/rng.hpp"
#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

/// A contraction sequence together with its replay-verified width and the
/// bound the producing construction promises.
struct BoundedSequence {
    ContractionSequence sequence;
    std::size_t width = 0;
    double claimed_bound = 0.0;
    bool bound_met = true;
    std::size_t attempts = 1;
};

/// Disjoint vertex pairs whose contraction each creates at most `threshold`
/// red edges.
struct PairSet {
    std::vector<std::pair<VertexId, VertexId>> pairs;  // first < second
    double threshold = 0.0;
};

/// Indices into a weight vector: `removed` plus `blocks` partition [0, n).
struct WeightPartition {
    std::vector<std::size_t> removed;
    std::vector<std::vector<std::size_t>> blocks;
    double budget = 0.0;  // total weight / k
};

/// Evaluation of the explicit order bound for a given pair ordering.
struct OrderBound {
    long bound = 0;
    /// merged_red[i]: red degree of the merged vertex of pairs[order[i]] when
    /// that pair alone is contracted.
    std::vector<long> merged_red;
    /// step[i][j]: change of that red degree caused by contracting
    /// pairs[order[j]] afterwards (0 on the diagonal); always in {-1, 0, 1}.
    std::vector<std::vector<int>> step;
};

/// Replays `seq` on `g` and packages the verified width. `strict` selects
/// width < bound instead of width <= bound for `bound_met`.
[[nodiscard]] BoundedSequence certify(const Trigraph& g, ContractionSequence seq, double bound, bool strict);

// ---- lower bound and Paley optimum -------------------------------------

/// min over pairs of |(N(u) xor N(v)) \ {u,v}|; a lower bound on twin-width.
/// Needs a plain graph with at least two vertices.
[[nodiscard]] std::size_t lower_bound_min_symdiff(const Trigraph& g);

/// Contracts u with -u for one representative u (the smaller encoding) of
/// every orbit {u, -u}, then finishes by lowest labels. Width (q-1)/2.
[[nodiscard]] BoundedSequence paley_sequence(std::uint32_t q);

// ---- vertex-count bound -------------------------------------------------

[[nodiscard]] double vertex_bound(std::size_t n);

/// Maximal set of disjoint pairs with symmetric difference at most
/// (n + sqrt(n) - 1) / 2, picking the globally smallest remaining pair first.
[[nodiscard]] PairSet find_disjoint_pairs(const Trigraph& g);

/// Contracts the pairs of find_disjoint_pairs in a random order and finishes
/// by lowest labels; retries with fresh orders until the verified width is
/// below vertex_bound(n) or `max_attempts` is spent, returning the best try.
[[nodiscard]] BoundedSequence vertex_bound_sequence(const Trigraph& g, std::uint64_t seed = kDefaultSeed,
                                                std::size_t max_attempts = 50);

/// Upper bound on the twin-width obtained from contracting `pairs` in the
/// given order, computed from the per-pair red-degree step functions.
/// Throws std::invalid_argument on overlapping pairs or a bad permutation.
[[nodiscard]] OrderBound order_bound_check(const Trigraph& g, const PairSet& pairs,
                                           std::span<const std::size_t> order);

// ---- edge-count bound ---------------------------------------------------

[[nodiscard]] double edge_bound(std::size_t m);
/// The block-size parameter k and the width target alpha used by the
/// three-phase construction (m >= 2).
[[nodiscard]] double edge_partition_k(std::size_t m);
[[nodiscard]] double edge_width_target(std::size_t m);

/// Removes fewer than k indices and splits the rest into at most ceil(k)
/// blocks of weight at most sum/k. Throws on negative weights or k <= 0.
[[nodiscard]] WeightPartition partition_by_weight(std::span<const double> weights, double k);

/// Phase 1 merges each degree-balanced block, phase 2 runs vertex_bound_sequence
/// on the leftover vertices, phase 3 finishes by lowest labels.
[[nodiscard]] BoundedSequence edge_bound_sequence(const Trigraph& g, std::uint64_t seed = kDefaultSeed);

// ---- structural sequences -----------------------------------------------

[[nodiscard]] bool is_forest(const Trigraph& g);
[[nodiscard]] bool is_tree(const Trigraph& g);

/// Width-0 sequence by repeated twin merging, or nullopt when the graph has
/// an induced P4.
[[nodiscard]] std::optional<BoundedSequence> cograph_sequence(const Trigraph& g);
[[nodiscard]] bool is_cograph(const Trigraph& g);

/// Throws TrigraphError when `t` is not a tree.
[[nodiscard]] bool is_caterpillar(const Trigraph& t);
/// Tree contains the 1-subdivision of K_{1,3}: some vertex has three
/// neighbors of degree at least two. Forests are accepted.
[[nodiscard]] bool contains_subdivided_claw(const Trigraph& forest);
/// Induced copy of the 1-subdivision of K_{1,3} in an arbitrary plain graph.
[[nodiscard]] bool contains_induced_subdivided_claw(const Trigraph& g);

/// Absorbs spine vertices and their leaves one at a time along the spine.
/// Throws TrigraphError unless `t` is a caterpillar.
[[nodiscard]] BoundedSequence caterpillar_sequence(const Trigraph& t);
/// Every component a caterpillar; width <= 1.
[[nodiscard]] BoundedSequence caterpillar_forest_sequence(const Trigraph& g);

/// Width <= 2; the root is only touched by the last contraction.
[[nodiscard]] BoundedSequence tree_sequence(const Trigraph& t, VertexId root);

/// Every component has at most one cycle; width <= 2. Throws TrigraphError otherwise.
[[nodiscard]] BoundedSequence unicyclic_sequence(const Trigraph& g);

/// Repeatedly contracts the pair minimizing the red degree it creates locally.
[[nodiscard]] BoundedSequence greedy_sequence(const Trigraph& g);

/// Smallest verified width among the applicable constructions.
[[nodiscard]] BoundedSequence best_upper_bound(const Trigraph& g, std::uint64_t seed = kDefaultSeed);

}  // namespace tww
