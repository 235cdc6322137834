#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "tww/generators.hpp"
#include "tww/io.hpp"

TEST_CASE("graph text round trip") {
    const auto g = tww::gnp(40, 0.3, 5);
    std::stringstream s;
    tww::write_graph(s, g);
    CHECK(tww::read_graph(s) == g);
}

TEST_CASE("graph parsing tolerates comments and blank lines") {
    std::istringstream in("# a path\n\n3 2\n0 1   # first\n\n1 2\n");
    const auto g = tww::read_graph(in);
    CHECK(g == tww::path_graph(3));
}

TEST_CASE("graph parse errors carry the line number") {
    const auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            (void)tww::read_graph(in, "g.el");
        } catch (const tww::ParseError& e) {
            CHECK(std::string(e.what()).starts_with("g.el:"));
            return e.line();
        }
        return std::size_t{999};
    };
    CHECK(line_of("") == 0);
    CHECK(line_of("3\n") == 1);
    CHECK(line_of("3 1\n0 3\n") == 2);
    CHECK(line_of("3 1\n1 1\n") == 2);
    CHECK(line_of("3 2\n0 1\n1 0\n") == 3);
    CHECK(line_of("3 2\n0 1\n") == 2);
    CHECK(line_of("3 1\n0 x\n") == 2);
    CHECK(line_of("3 1\n0 1 2\n") == 2);
}

TEST_CASE("certificates round trip") {
    tww::ContractionSequence seq;
    seq.push(0, 4);
    seq.push(2, 1);
    std::stringstream s;
    tww::write_certificate(s, seq);
    CHECK(s.str() == "0 4\n2 1\n");
    CHECK(tww::read_certificate(s) == seq);
    std::istringstream bad("0 1\n2\n");
    CHECK_THROWS_AS((void)tww::read_certificate(bad), tww::ParseError);
}

TEST_CASE("file helpers") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "tww_io_test.el";
    tww::write_graph_file(path, tww::cycle_graph(6));
    CHECK(tww::read_graph_file(path) == tww::cycle_graph(6));
    std::filesystem::remove(path);
    CHECK_THROWS_AS((void)tww::read_graph_file(dir / "tww_missing_file.el"), tww::IoError);
    tww::Trigraph red(2);
    red.add_edge(0, 1, tww::EdgeColor::red);
    std::ostringstream out;
    CHECK_THROWS_AS(tww::write_graph(out, red), tww::TrigraphError);
}
