#include <stdexcept>
#include <string>

#include "doctest.h"
#include "tnet/core.hpp"
#include "tnet/io.hpp"

using namespace tnet;

TEST_CASE("T-net text round trip") {
    const core::TNet n = core::debruijn_graph(3);
    CHECK(io::parse_tnet(io::format_tnet(n)) == n);
}

TEST_CASE("parser skips comments, blanks and trailing whitespace") {
    const std::string text =
        "# a T-net with two nodes\n"
        "\n"
        "2   \n"
        "0 1\t\n"
        "  0 1\n"
        "# interleaved comment\n"
        "1 0\n"
        "1 0  \n";
    const core::TNet n = io::parse_tnet(text);
    CHECK(n.m == 2);
    CHECK(n.tail == std::vector<int>{0, 0, 1, 1});
    CHECK(n.head == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("parser diagnostics") {
    CHECK_THROWS_WITH_AS(io::parse_tnet(std::string("")),
                         "empty input: missing the node count m", std::invalid_argument);
    CHECK_THROWS_AS(io::parse_tnet(std::string("2\n0 1\n")), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_tnet(std::string("x\n")), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_tnet(std::string("1\n0 0\n0 zero\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_tnet(std::string("1\n0 0 0\n0 0\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_tnet(std::string("1\n0 0\n0 0\n0 0\n")),
                    std::invalid_argument);
    // degree violation surfaces the offending node
    CHECK_THROWS_WITH_AS(io::parse_tnet(std::string("2\n0 0\n0 0\n1 0\n1 1\n")),
                         "node 0 indegree 3, want 2", std::invalid_argument);
}

TEST_CASE("cycle text round trip") {
    const euler::EulerCycle c{{0, 1, 3, 2}};
    CHECK(io::format_cycle(c) == "0 1 3 2");
    CHECK(io::parse_cycle("0 1 3 2") == c);
    CHECK(io::parse_cycle(" 12  5 ") == euler::EulerCycle{{12, 5}});
    CHECK_THROWS_AS(io::parse_cycle(""), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_cycle("1 two 3"), std::invalid_argument);
}
