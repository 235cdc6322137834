#include "tww/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "tww/constructions.hpp"
#include "tww/exact.hpp"
#include "tww/generators.hpp"
#include "tww/kernels.hpp"

namespace tww {

namespace {

constexpr std::uint64_t kRegimeSearchBudget = 200'000;

double field_p(const ExperimentConfig& c, std::size_t n) {
    return c.kind == ExperimentKind::paley_table ? 0.5 : c.p.evaluate(n);
}

std::size_t samples_per_n(const ExperimentConfig& c) {
    return c.kind == ExperimentKind::paley_table ? 1 : c.samples;
}

void validate(const ExperimentConfig& c) {
    if (c.ns.empty()) throw std::invalid_argument("experiment needs at least one n");
    if (c.samples < 1) throw std::invalid_argument("experiment needs at least one sample");
    if (c.kind == ExperimentKind::bound_scan && c.construction != "vertex" && c.construction != "edge") {
        throw std::invalid_argument("unknown construction '" + c.construction + "'");
    }
    for (const auto n : c.ns) (void)field_p(c, n);
}

ExperimentRecord run_unit(const ExperimentConfig& c, std::size_t n_index, std::size_t sample) {
    ExperimentRecord r;
    r.kind = to_string(c.kind);
    r.n = c.ns[n_index];
    r.p = field_p(c, r.n);
    r.sample = static_cast<long long>(sample);
    r.seed = sample_seed(c.seed, n_index, sample);

    switch (c.kind) {
        case ExperimentKind::symdiff: {
            const Trigraph g = gnp(r.n, r.p, r.seed);
            r.statistic = static_cast<long long>(min_symdiff_statistic(g));
            r.formula_value = symdiff_concentration_bound(r.n, r.p, c.epsilon);
            r.pass = static_cast<double>(r.statistic) > r.formula_value;
            r.label = r.pass ? "above" : "below";
            break;
        }
        case ExperimentKind::regimes: {
            const Trigraph g = gnp(r.n, r.p, r.seed);
            const Regime regime = regime_classify(g);
            r.statistic = static_cast<long long>(g.num_edges());
            const auto x = static_cast<double>(r.n);
            r.formula_value = r.p * x * (x - 1.0) / 2.0;
            r.label = to_string(regime);
            const auto expected = expected_regimes(c.p);
            r.pass = expected.empty() ? regime != Regime::other
                                      : std::find(expected.begin(), expected.end(), regime) != expected.end();
            break;
        }
        case ExperimentKind::bound_scan: {
            const Trigraph g = gnp(r.n, r.p, r.seed);
            const auto seq = c.construction == "vertex" ? vertex_bound_sequence(g, r.seed) : edge_bound_sequence(g, r.seed);
            r.statistic = static_cast<long long>(seq.width);
            r.formula_value = seq.claimed_bound;
            r.pass = seq.bound_met;
            r.label = c.construction;
            break;
        }
        case ExperimentKind::paley_table: {
            const auto q = static_cast<std::uint32_t>(r.n);
            const auto seq = paley_sequence(q);
            const auto lower = lower_bound_min_symdiff(paley(q));
            r.statistic = static_cast<long long>(seq.width);
            r.formula_value = static_cast<double>(q - 1) / 2.0;
            r.pass = seq.width == (q - 1) / 2 && lower == (q - 1) / 2;
            r.label = "lower=" + std::to_string(lower);
            break;
        }
    }
    return r;
}

std::vector<ExperimentRecord> with_summaries(const ExperimentConfig& c, std::vector<ExperimentRecord> rows) {
    const std::size_t per = samples_per_n(c);
    for (std::size_t i = 0; i < c.ns.size(); ++i) {
        ExperimentRecord s;
        s.kind = to_string(c.kind);
        s.n = c.ns[i];
        s.p = field_p(c, s.n);
        s.sample = -1;
        s.seed = c.seed;
        std::size_t passes = 0;
        std::size_t counts[4] = {0, 0, 0, 0};
        for (std::size_t k = 0; k < per; ++k) {
            const auto& row = rows[i * per + k];
            passes += row.pass;
            for (const auto regime : {Regime::tww0, Regime::tww1, Regime::tww2, Regime::other}) {
                if (row.label == to_string(regime)) ++counts[static_cast<int>(regime)];
            }
        }
        s.statistic = static_cast<long long>(passes);
        s.formula_value = static_cast<double>(passes) / static_cast<double>(per);
        s.pass = passes == per;
        s.label = c.kind == ExperimentKind::regimes
                      ? fmt::format("tww0={}|tww1={}|tww2={}|other={}", counts[0], counts[1], counts[2], counts[3])
                      : fmt::format("pass={}/{}", passes, per);
        rows.push_back(std::move(s));
    }
    return rows;
}

template <class T>
T parse_number(std::string_view field, const char* name) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::invalid_argument(fmt::format("bad {} field '{}'", name, field));
    }
    return value;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::symdiff: return "symdiff";
        case ExperimentKind::regimes: return "regimes";
        case ExperimentKind::bound_scan: return "bound-scan";
        case ExperimentKind::paley_table: return "paley-table";
    }
    return "?";
}

std::optional<ExperimentKind> parse_experiment_kind(const std::string& text) {
    for (const auto k : {ExperimentKind::symdiff, ExperimentKind::regimes, ExperimentKind::bound_scan,
                         ExperimentKind::paley_table}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

double PRule::evaluate(std::size_t n) const {
    const auto x = static_cast<double>(n);
    double p = value;
    if (kind == Kind::power) p = std::pow(x, value);
    if (kind == Kind::inverse) p = value / x;
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(fmt::format("edge probability {} at n = {} is outside [0, 1]", p, n));
    return p;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::tww0: return "tww0";
        case Regime::tww1: return "tww1";
        case Regime::tww2: return "tww2";
        case Regime::other: return "other";
    }
    return "?";
}

std::size_t min_symdiff_statistic(const Trigraph& g) { return lower_bound_min_symdiff(g); }

double symdiff_concentration_bound(std::size_t n, double p, double epsilon) {
    const auto x = static_cast<double>(n);
    const double var = p * (1.0 - p) * x;
    return 2.0 * var - (2.0 * std::sqrt(2.0) + epsilon) * std::sqrt(var * std::log(x));
}

Regime regime_classify(const Trigraph& g) {
    if (!g.is_plain()) throw TrigraphError("regime classification expects a graph without red edges");
    if (is_cograph(g)) return Regime::tww0;

    std::vector<Trigraph> cyclic;
    bool wide = false;
    for (const auto& comp : connected_components(g)) {
        std::size_t twice = 0;
        for (const auto v : comp) twice += g.degree(v);
        const std::size_t m = twice / 2;
        if (m > comp.size()) return Regime::other;
        Trigraph sub = induced_subgraph(g, comp);
        if (m + 1 == comp.size()) {
            wide = wide || !is_caterpillar(sub);
        } else {
            cyclic.push_back(std::move(sub));
        }
    }
    if (wide) return Regime::tww2;
    if (cyclic.empty()) return Regime::tww1;

    // The graph is not a cograph, so its width is 1 or 2; a long cycle or an
    // induced subdivided claw forces 2, small leftovers are decided exactly.
    for (const auto& sub : cyclic) {
        Trigraph core = sub;
        bool pruned = true;
        while (pruned) {
            pruned = false;
            for (const auto v : core.vertices()) {
                if (core.degree(v) <= 1) {
                    core.remove_vertex(v);
                    pruned = true;
                }
            }
        }
        if (core.num_vertices() >= 5) return Regime::tww2;
        if (contains_induced_subdivided_claw(sub)) return Regime::tww2;
    }
    for (const auto& sub : cyclic) {
        if (sub.num_vertices() > kExactMaxVertices) return Regime::tww2;
        if (decide_at_most(sub, 1, kRegimeSearchBudget) != Decision::yes) return Regime::tww2;
    }
    return Regime::tww1;
}

std::vector<Regime> expected_regimes(const PRule& rule) {
    if (rule.kind == PRule::Kind::power) {
        if (rule.value < -4.0 / 3.0) return {Regime::tww0};
        if (rule.value > -4.0 / 3.0 && rule.value < -7.0 / 6.0) return {Regime::tww1};
        if (rule.value > -7.0 / 6.0 && rule.value < -1.0) return {Regime::tww2};
    }
    if (rule.kind == PRule::Kind::inverse && rule.value > 0.0 && rule.value < 1.0) {
        return {Regime::tww0, Regime::tww1, Regime::tww2};
    }
    return {};
}

std::uint64_t sample_seed(std::uint64_t master, std::size_t n_index, std::size_t sample) {
    return derive_seed(derive_seed(master, n_index), sample);
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
    validate(config);
    const std::size_t per = samples_per_n(config);
    const auto total = static_cast<long long>(config.ns.size() * per);
    std::vector<ExperimentRecord> rows(static_cast<std::size_t>(total));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(kernels::worker_count())
    for (long long u = 0; u < total; ++u) {
        try {
            const auto idx = static_cast<std::size_t>(u);
            rows[idx] = run_unit(config, idx / per, idx % per);
        } catch (...) {
#pragma omp critical(tww_experiment_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return with_summaries(config, std::move(rows));
}

std::vector<ExperimentRecord> run_experiment_serial(const ExperimentConfig& config) {
    validate(config);
    const std::size_t per = samples_per_n(config);
    std::vector<ExperimentRecord> rows;
    for (std::size_t i = 0; i < config.ns.size(); ++i) {
        for (std::size_t k = 0; k < per; ++k) rows.push_back(run_unit(config, i, k));
    }
    return with_summaries(config, std::move(rows));
}

std::string csv_row(const ExperimentRecord& r) {
    return fmt::format("{},{},{},{},{},{},{},{},{}", r.kind, r.n, r.p, r.sample, r.seed, r.statistic, r.label,
                       r.formula_value, r.pass ? 1 : 0);
}

ExperimentRecord parse_csv_row(const std::string& line) {
    std::vector<std::string_view> f;
    std::string_view rest = line;
    while (true) {
        const auto comma = rest.find(',');
        f.push_back(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (f.size() != 9) throw std::invalid_argument(fmt::format("expected 9 CSV fields, got {}", f.size()));
    ExperimentRecord r;
    r.kind = std::string(f[0]);
    r.n = parse_number<std::size_t>(f[1], "n");
    r.p = parse_number<double>(f[2], "p");
    r.sample = parse_number<long long>(f[3], "sample");
    r.seed = parse_number<std::uint64_t>(f[4], "seed");
    r.statistic = parse_number<long long>(f[5], "statistic");
    r.label = std::string(f[6]);
    r.formula_value = parse_number<double>(f[7], "formula_value");
    const int pass = parse_number<int>(f[8], "pass");
    if (pass != 0 && pass != 1) throw std::invalid_argument("pass field must be 0 or 1");
    r.pass = pass == 1;
    return r;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) out << csv_row(r) << '\n';
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("missing CSV header");
    std::vector<ExperimentRecord> out;
    while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(parse_csv_row(line));
    }
    return out;
}

}  // namespace tww
