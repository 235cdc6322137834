#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tww/trigraph.hpp"

namespace tww {

/// Merge `drop` into `keep`; the merged vertex carries keep's label.
struct ContractionStep {
    VertexId keep;
    VertexId drop;

    friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

struct ContractionSequence {
    std::vector<ContractionStep> steps;

    void push(VertexId keep, VertexId drop) { steps.push_back({keep, drop}); }
    void append(const ContractionSequence& other) {
        steps.insert(steps.end(), other.steps.begin(), other.steps.end());
    }
    [[nodiscard]] std::size_t size() const noexcept { return steps.size(); }
    [[nodiscard]] bool empty() const noexcept { return steps.empty(); }

    friend bool operator==(const ContractionSequence&, const ContractionSequence&) = default;
};

struct VerificationReport {
    std::vector<std::size_t> step_max_red_degrees;  // after each step
    std::size_t width = 0;                          // includes the starting trigraph
    std::map<VertexId, VertexId> sigma;             // original vertex -> surviving vertex
    std::map<VertexId, std::size_t> preimage_sizes; // surviving vertex -> |sigma^-1|

    /// Whether the replay ended at a single vertex.
    [[nodiscard]] bool complete() const noexcept { return preimage_sizes.size() <= 1; }
};

/// A certificate step referenced a vertex that is dead or never existed.
class MalformedCertificate : public std::runtime_error {
public:
    MalformedCertificate(std::size_t step_index, const std::string& what)
        : std::runtime_error("step " + std::to_string(step_index) + ": " + what), step_index_(step_index) {}

    [[nodiscard]] std::size_t step_index() const noexcept { return step_index_; }

private:
    std::size_t step_index_;
};

struct Replay {
    Trigraph final_state;
    VerificationReport report;
};

/// Replays `seq` on a copy of `g`. Throws MalformedCertificate on the first bad step.
[[nodiscard]] Replay replay_sequence(const Trigraph& g, const ContractionSequence& seq);

[[nodiscard]] VerificationReport apply_sequence(const Trigraph& g, const ContractionSequence& seq);

/// Steps that merge the surviving vertices of `g` down to one, always
/// contracting the two lowest labels (the lower label is kept).
[[nodiscard]] ContractionSequence lowest_label_completion(const Trigraph& g);

/// Same completion, continuing from the state reached after `prefix`.
[[nodiscard]] ContractionSequence complete_sequence(const Trigraph& g, ContractionSequence prefix);

}  // namespace tww
