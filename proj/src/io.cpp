#include "tww/io.hpp"

#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <limits>
#include <string_view>
#include <vector>

namespace tww {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

/// Splits non-empty, comment-stripped lines into whitespace fields. The
/// returned views point into `storage`.
std::vector<Line> tokenize(std::istream& in, std::deque<std::string>& storage) {
    std::string text;
    std::vector<Line> out;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        storage.push_back(std::move(text));
        std::string_view rest = storage.back();
        Line line{number, {}};
        while (true) {
            const auto start = rest.find_first_not_of(" \t\r");
            if (start == std::string_view::npos) break;
            rest.remove_prefix(start);
            const auto end = rest.find_first_of(" \t\r");
            line.fields.push_back(rest.substr(0, end));
            if (end == std::string_view::npos) break;
            rest.remove_prefix(end);
        }
        if (!line.fields.empty()) out.push_back(std::move(line));
    }
    return out;
}

std::uint64_t parse_uint(std::string_view field, const std::string& source, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(source, line, "expected a nonnegative integer, got '" + std::string(field) + "'");
    }
    return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void check_written(const std::ofstream& out, const std::filesystem::path& path) {
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

Trigraph read_graph(std::istream& in, const std::string& source) {
    std::deque<std::string> storage;
    const auto lines = tokenize(in, storage);
    if (lines.empty()) throw ParseError(source, 0, "missing header line 'n m'");
    const auto& header = lines.front();
    if (header.fields.size() != 2) throw ParseError(source, header.number, "header must be 'n m'");
    const auto n = parse_uint(header.fields[0], source, header.number);
    const auto m = parse_uint(header.fields[1], source, header.number);
    if (n > std::numeric_limits<VertexId>::max()) throw ParseError(source, header.number, "too many vertices");
    if (lines.size() - 1 != m) {
        throw ParseError(source, lines.back().number,
                         "header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
    }
    Trigraph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.fields.size() != 2) throw ParseError(source, line.number, "edge line must be 'u v'");
        const auto u = parse_uint(line.fields[0], source, line.number);
        const auto v = parse_uint(line.fields[1], source, line.number);
        if (u >= n || v >= n) throw ParseError(source, line.number, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(source, line.number, "self-loop on vertex " + std::to_string(u));
        if (g.adjacent(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
            throw ParseError(source, line.number, "repeated edge " + std::to_string(u) + " " + std::to_string(v));
        }
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return g;
}

Trigraph read_graph_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_graph(in, path.string());
}

void write_graph(std::ostream& out, const Trigraph& g) {
    if (!g.is_plain()) throw TrigraphError("graph files cannot hold red edges");
    const auto vs = g.vertices();
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
    const auto edges = g.edges();
    out << vs.size() << ' ' << edges.size() << '\n';
    for (const auto& e : edges) out << index[e.u] << ' ' << index[e.v] << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Trigraph& g) {
    auto out = open_out(path);
    write_graph(out, g);
    check_written(out, path);
}

ContractionSequence read_certificate(std::istream& in, const std::string& source) {
    std::deque<std::string> storage;
    ContractionSequence seq;
    for (const auto& line : tokenize(in, storage)) {
        if (line.fields.size() != 2) throw ParseError(source, line.number, "certificate line must be 'keep drop'");
        const auto keep = parse_uint(line.fields[0], source, line.number);
        const auto drop = parse_uint(line.fields[1], source, line.number);
        if (keep > std::numeric_limits<VertexId>::max() || drop > std::numeric_limits<VertexId>::max()) {
            throw ParseError(source, line.number, "vertex id too large");
        }
        seq.push(static_cast<VertexId>(keep), static_cast<VertexId>(drop));
    }
    return seq;
}

ContractionSequence read_certificate_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_certificate(in, path.string());
}

void write_certificate(std::ostream& out, const ContractionSequence& seq) {
    for (const auto& s : seq.steps) out << s.keep << ' ' << s.drop << '\n';
}

void write_certificate_file(const std::filesystem::path& path, const ContractionSequence& seq) {
    auto out = open_out(path);
    write_certificate(out, seq);
    check_written(out, path);
}

}  // namespace tww
