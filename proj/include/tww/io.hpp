#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

/// Malformed graph or certificate text; the message names source and line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A file could not be opened or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge list: `n m`, then m lines `u v` with ids in [0, n). `#` starts a
/// comment; blank lines are skipped. Self-loops and repeated edges are errors.
[[nodiscard]] Trigraph read_graph(std::istream& in, const std::string& source = "<input>");
[[nodiscard]] Trigraph read_graph_file(const std::filesystem::path& path);
/// Vertices are renumbered 0.. in label order. Throws TrigraphError on red edges.
void write_graph(std::ostream& out, const Trigraph& g);
void write_graph_file(const std::filesystem::path& path, const Trigraph& g);

/// One `keep drop` pair per line, same comment and blank-line rules.
[[nodiscard]] ContractionSequence read_certificate(std::istream& in, const std::string& source = "<input>");
[[nodiscard]] ContractionSequence read_certificate_file(const std::filesystem::path& path);
void write_certificate(std::ostream& out, const ContractionSequence& seq);
void write_certificate_file(const std::filesystem::path& path, const ContractionSequence& seq);

}  // namespace tww
