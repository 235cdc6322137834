#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tww/constructions.hpp"
#include "tww/exact.hpp"
#include "tww/experiment.hpp"
#include "tww/generators.hpp"
#include "tww/io.hpp"
#include "tww/lattice.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct Options {
    std::uint64_t seed = tww::kDefaultSeed;
    std::size_t samples = 1;
    std::uint64_t budget = 10'000'000;
    std::string out;

    std::string family;
    std::size_t n = 0;
    double p = 0.5;
    std::uint32_t q = 0;
    std::size_t t = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> leaves;

    std::string graph;
    std::string seq;
    std::optional<double> claimed;

    std::int64_t la = 0;
    std::int64_t lb = 0;
    std::int64_t lt = 0;

    std::string kind = "symdiff";
    std::vector<std::size_t> ns;
    std::optional<double> gamma;
    std::optional<double> c;
    double epsilon = 0.1;
    std::string construction = "vertex";
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--samples", o.samples, "samples per point")->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "search node budget");
    sub->add_option("--out", o.out, "output file");
}

/// Writes to --out, or stdout when it is empty.
template <class F>
void emit(const std::string& path, F&& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw tww::IoError("cannot open '" + path + "' for writing");
    write(out);
    if (!out) throw tww::IoError("failed writing '" + path + "'");
}

tww::Trigraph generate(const Options& o) {
    const std::string& f = o.family;
    if (f == "paley") return tww::paley(o.q);
    if (f == "gnp") return tww::gnp(o.n, o.p, o.seed);
    if (f == "path") return tww::path_graph(o.n);
    if (f == "cycle") return tww::cycle_graph(o.n);
    if (f == "complete") return tww::complete_graph(o.n);
    if (f == "empty") return tww::Trigraph(o.n);
    if (f == "star") return tww::star_graph(o.t);
    if (f == "star-subdivision") return tww::star_subdivision(o.t);
    if (f == "caterpillar") return tww::caterpillar(o.leaves);
    if (f == "random-tree") return tww::random_tree(o.n, o.seed);
    if (f == "random-caterpillar") return tww::random_caterpillar(o.n, o.seed);
    if (f == "random-unicyclic") return tww::random_unicyclic(o.n, o.seed);
    if (f == "grid") return tww::grid_graph(o.rows, o.cols);
    throw tww::GeneratorError("unknown family '" + f + "'");
}

int cmd_gen(const Options& o) {
    const auto g = generate(o);
    emit(o.out, [&](std::ostream& out) { tww::write_graph(out, g); });
    return kOk;
}

void report(const char* name, const tww::BoundedSequence& s, bool strict) {
    fmt::print("{:<12} width {:>4}   bound {:>10.4f}   {}{}\n", name, s.width, s.claimed_bound,
               s.bound_met ? "ok" : "EXCEEDED", strict ? " (strict)" : "");
}

int cmd_bound(const Options& o) {
    const auto g = tww::read_graph_file(o.graph);
    fmt::print("vertices {} edges {}\n", g.num_vertices(), g.num_edges());
    if (g.num_vertices() >= 2) fmt::print("lower bound  {}\n", tww::lower_bound_min_symdiff(g));

    bool failed = false;
    const auto vertex = tww::vertex_bound_sequence(g, o.seed);
    report("vertex", vertex, true);
    failed |= !vertex.bound_met;
    if (g.num_edges() > 0) {
        const auto edge = tww::edge_bound_sequence(g, o.seed);
        report("edge", edge, true);
        failed |= !edge.bound_met;
    }
    if (const auto co = tww::cograph_sequence(g)) report("cograph", *co, false);
    const auto best = tww::best_upper_bound(g, o.seed);
    fmt::print("best         width {:>4}\n", best.width);
    if (!o.out.empty()) tww::write_certificate_file(o.out, best.sequence);
    return failed ? kVerifyFailed : kOk;
}

int cmd_exact(const Options& o) {
    const auto g = tww::read_graph_file(o.graph);
    tww::ExactOptions opts;
    opts.node_budget = o.budget;
    opts.seed = o.seed;
    const auto r = tww::exact_twinwidth(g, opts);
    const bool exact = r.status == tww::ExactResult::Status::exact;
    if (exact) {
        fmt::print("twin-width {} (nodes {})\n", r.upper, r.nodes);
    } else {
        fmt::print("budget exhausted: {} <= twin-width <= {} (nodes {})\n", r.lower, r.upper, r.nodes);
    }
    if (!o.out.empty()) tww::write_certificate_file(o.out, r.certificate);
    return exact ? kOk : kBudget;
}

int cmd_verify(const Options& o) {
    const auto g = tww::read_graph_file(o.graph);
    const auto seq = tww::read_certificate_file(o.seq);
    tww::VerificationReport rep;
    try {
        rep = tww::apply_sequence(g, seq);
    } catch (const tww::MalformedCertificate& e) {
        fmt::print(stderr, "invalid certificate: {}\n", e.what());
        return kVerifyFailed;
    }
    fmt::print("width {}\n", rep.width);
    if (!rep.complete()) {
        fmt::print(stderr, "certificate leaves {} vertices\n", rep.preimage_sizes.size());
        return kVerifyFailed;
    }
    if (o.claimed && static_cast<double>(rep.width) > *o.claimed) {
        fmt::print(stderr, "width {} exceeds claimed bound {}\n", rep.width, *o.claimed);
        return kVerifyFailed;
    }
    return kOk;
}

int cmd_paley(const Options& o) {
    const auto seq = tww::paley_sequence(o.q);
    const auto lower = tww::lower_bound_min_symdiff(tww::paley(o.q));
    const std::size_t target = (o.q - 1) / 2;
    fmt::print("paley({}): width {} = lower bound {} = (q-1)/2 {}\n", o.q, seq.width, lower, target);
    const std::string path = o.out.empty() ? fmt::format("paley_{}.cs", o.q) : o.out;
    tww::write_certificate_file(path, seq.sequence);
    fmt::print("certificate written to {}\n", path);
    return seq.width == target && lower == target ? kOk : kVerifyFailed;
}

int cmd_lattice(const Options& o) {
    const tww::LatticeQuery q{o.la, o.lb, o.lt};
    const auto count = tww::count_crossing_paths(q);
    fmt::print("paths        {}\n", tww::binomial(o.la + o.lb, o.la).str());
    fmt::print("crossing     {}{}\n", count.str(), tww::crossing_formula_applies(q) ? " (closed form)" : "");
    if (q.t >= 1) {
        const auto prob = tww::crossing_probability(q);
        const double bound = tww::crossing_probability_bound(q);
        fmt::print("probability  {} = {:.6f}\n", prob.str(), static_cast<double>(prob));
        fmt::print("bound        {:.6f}\n", bound);
    }
    return kOk;
}

int cmd_experiment(const Options& o) {
    tww::ExperimentConfig cfg;
    const auto kind = tww::parse_experiment_kind(o.kind);
    if (!kind) throw std::invalid_argument("unknown experiment kind '" + o.kind + "'");
    cfg.kind = *kind;
    cfg.ns = o.ns;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.epsilon = o.epsilon;
    cfg.construction = o.construction;
    if (o.gamma && o.c) throw std::invalid_argument("--gamma and --c are exclusive");
    if (o.gamma) {
        cfg.p = {tww::PRule::Kind::power, *o.gamma};
    } else if (o.c) {
        cfg.p = {tww::PRule::Kind::inverse, *o.c};
    } else {
        cfg.p = {tww::PRule::Kind::fixed, o.p};
    }
    const auto rows = tww::run_experiment(cfg);
    emit(o.out, [&](std::ostream& out) { tww::write_csv(out, rows); });
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twin-width toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "write a graph file for a named family");
    add_common(gen, o);
    gen->add_option("--family", o.family,
                    "paley|gnp|path|cycle|complete|empty|star|star-subdivision|caterpillar|random-tree|"
                    "random-caterpillar|random-unicyclic|grid")
        ->required();
    gen->add_option("--n", o.n, "vertex count");
    gen->add_option("--p", o.p, "edge probability");
    gen->add_option("--q", o.q, "field order");
    gen->add_option("--t", o.t, "star arms");
    gen->add_option("--rows", o.rows);
    gen->add_option("--cols", o.cols);
    gen->add_option("--leaves", o.leaves, "leaves per spine vertex")->delimiter(',');

    auto* bound = app.add_subcommand("bound", "lower bound and verified widths of every construction");
    add_common(bound, o);
    bound->add_option("--graph", o.graph)->required();

    auto* exact = app.add_subcommand("exact", "exact twin-width by search");
    add_common(exact, o);
    exact->add_option("--graph", o.graph)->required();

    auto* verify = app.add_subcommand("verify", "replay a certificate and print its width");
    add_common(verify, o);
    verify->add_option("--graph", o.graph)->required();
    verify->add_option("--seq", o.seq)->required();
    verify->add_option("--bound", o.claimed, "fail when the width exceeds this");

    auto* pal = app.add_subcommand("paley", "optimal certificate for a Paley graph");
    add_common(pal, o);
    pal->add_option("--q", o.q, "prime power = 1 mod 4")->required();

    auto* lat = app.add_subcommand("lattice", "lattice paths crossing y = x + t");
    add_common(lat, o);
    lat->add_option("--a", o.la, "east steps")->required();
    lat->add_option("--b", o.lb, "north steps")->required();
    lat->add_option("--t", o.lt, "line offset")->required();

    auto* exp = app.add_subcommand("experiment", "Monte-Carlo sweep writing CSV");
    add_common(exp, o);
    exp->add_option("--kind", o.kind, "symdiff|regimes|bound-scan|paley-table");
    exp->add_option("--n", o.ns, "sizes (field orders for paley-table)")->delimiter(',')->required();
    exp->add_option("--p", o.p, "fixed edge probability");
    exp->add_option("--gamma", o.gamma, "p = n^gamma");
    exp->add_option("--c", o.c, "p = c/n");
    exp->add_option("--epsilon", o.epsilon);
    exp->add_option("--construction", o.construction, "vertex|edge (bound-scan)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o);
        if (bound->parsed()) return cmd_bound(o);
        if (exact->parsed()) return cmd_exact(o);
        if (verify->parsed()) return cmd_verify(o);
        if (pal->parsed()) return cmd_paley(o);
        if (lat->parsed()) return cmd_lattice(o);
        if (exp->parsed()) return cmd_experiment(o);
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kUsage;
    }
    return kUsage;
}
