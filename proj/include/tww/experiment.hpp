#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tww/rng.hpp"
#include "tww/trigraph.hpp"

namespace tww {

enum class ExperimentKind { symdiff, regimes, bound_scan, paley_table };

[[nodiscard]] std::string to_string(ExperimentKind kind);
[[nodiscard]] std::optional<ExperimentKind> parse_experiment_kind(const std::string& text);

/// Edge probability as a function of n: a constant, n^gamma, or c/n.
struct PRule {
    enum class Kind { fixed, power, inverse };
    Kind kind = Kind::fixed;
    double value = 0.5;

    /// Throws std::invalid_argument when the result leaves [0, 1].
    [[nodiscard]] double evaluate(std::size_t n) const;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::symdiff;
    std::vector<std::size_t> ns;  // for paley-table these are the field orders q
    PRule p;
    double epsilon = 0.1;
    std::size_t samples = 1;
    std::uint64_t seed = kDefaultSeed;
    /// bound-scan only: "vertex" (vertex-count bound) or "edge" (edge-count bound).
    std::string construction = "vertex";
};

struct ExperimentRecord {
    std::string kind;
    std::size_t n = 0;
    double p = 0.0;
    long long sample = 0;  // -1 on summary rows
    std::uint64_t seed = 0;
    long long statistic = 0;
    std::string label;
    double formula_value = 0.0;
    bool pass = false;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

enum class Regime { tww0, tww1, tww2, other };

[[nodiscard]] std::string to_string(Regime r);

/// min over pairs of the symmetric difference of neighborhoods; n >= 2.
[[nodiscard]] std::size_t min_symdiff_statistic(const Trigraph& g);
/// 2p(1-p)n - (2 sqrt 2 + eps) sqrt(p(1-p) n ln n).
[[nodiscard]] double symdiff_concentration_bound(std::size_t n, double p, double epsilon);

/// Structural twin-width class of a sparse plain graph. Components with two
/// or more cycles give `other`.
[[nodiscard]] Regime regime_classify(const Trigraph& g);

/// Labels the p-rule is expected to produce at large n; empty when the rule
/// makes no prediction.
[[nodiscard]] std::vector<Regime> expected_regimes(const PRule& rule);

/// Seed of sample `sample` at size index `n_index`.
[[nodiscard]] std::uint64_t sample_seed(std::uint64_t master, std::size_t n_index, std::size_t sample);

/// One row per (n, sample), ordered by n position then sample, followed by
/// one summary row per n. Samples run on all workers.
[[nodiscard]] std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);
/// Same rows computed on the calling thread.
[[nodiscard]] std::vector<ExperimentRecord> run_experiment_serial(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader = "kind,n,p,sample,seed,statistic,label,formula_value,pass";

[[nodiscard]] std::string csv_row(const ExperimentRecord& r);
/// Throws std::invalid_argument on a malformed row.
[[nodiscard]] ExperimentRecord parse_csv_row(const std::string& line);
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
/// Expects the header line first.
[[nodiscard]] std::vector<ExperimentRecord> read_csv(std::istream& in);

}  // namespace tww
