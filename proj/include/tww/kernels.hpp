#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tww/trigraph.hpp"

namespace tww::kernels {

/// Dense bit-matrix view of a plain graph. Row i belongs to labels[i].
class AdjacencyBits {
public:
    explicit AdjacencyBits(const Trigraph& g);

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] std::size_t words() const noexcept { return words_; }
    [[nodiscard]] VertexId label(std::size_t i) const { return labels_[i]; }
    [[nodiscard]] const std::vector<VertexId>& labels() const noexcept { return labels_; }
    [[nodiscard]] const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
    [[nodiscard]] bool test(std::size_t i, std::size_t j) const {
        return (row(i)[j / 64] >> (j % 64)) & 1U;
    }

    /// |(N(i) xor N(j)) \ {i,j}| by dense index.
    [[nodiscard]] std::size_t symdiff(std::size_t i, std::size_t j) const;

private:
    std::vector<VertexId> labels_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct PairValue {
    std::size_t value;
    std::size_t i;  // dense indices, i < j
    std::size_t j;

    friend bool operator==(const PairValue&, const PairValue&) = default;
};

/// Minimum symmetric difference over all pairs; ties go to the smallest (i, j).
/// Requires at least two vertices.
[[nodiscard]] PairValue min_symdiff_serial(const AdjacencyBits& adj);
[[nodiscard]] PairValue min_symdiff_parallel(const AdjacencyBits& adj);

/// Row-major symmetric n x n matrix of pairwise symmetric differences, zero diagonal.
[[nodiscard]] std::vector<std::uint32_t> symdiff_matrix_serial(const AdjacencyBits& adj);
[[nodiscard]] std::vector<std::uint32_t> symdiff_matrix_parallel(const AdjacencyBits& adj);

/// Worker count for parallel kernels: the OpenMP default, capped by TWW_THREADS.
[[nodiscard]] int worker_count();

}  // namespace tww::kernels
