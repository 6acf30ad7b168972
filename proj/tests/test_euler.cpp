#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "tnet/core.hpp"
#include "tnet/euler.hpp"
#include "tnet/harness.hpp"

using namespace tnet;

namespace {

std::vector<int> brute_least_rotation(const std::vector<int>& v) {
    std::vector<int> best = v;
    for (std::size_t r = 1; r < v.size(); ++r) {
        std::vector<int> rot;
        rot.insert(rot.end(), v.begin() + r, v.end());
        rot.insert(rot.end(), v.begin(), v.begin() + r);
        best = std::min(best, rot);
    }
    return best;
}

std::vector<int> booth_rotation(const std::vector<int>& v) {
    const std::size_t k = euler::least_rotation(v);
    std::vector<int> rot;
    rot.insert(rot.end(), v.begin() + k, v.end());
    rot.insert(rot.end(), v.begin(), v.begin() + k);
    return rot;
}

}  // namespace

TEST_CASE("least_rotation matches brute force on random words") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t len = 1 + rng() % 12;
        std::vector<int> v(len);
        for (auto& x : v) x = static_cast<int>(rng() % 4);
        CHECK(booth_rotation(v) == brute_least_rotation(v));
    }
}

TEST_CASE("canonical validates walks and rotates") {
    const core::Multigraph g = core::as_multigraph(core::debruijn_graph(2));
    const euler::EulerCycle c = euler::canonical(g, {1, 3, 2, 0});
    CHECK(c.ids == std::vector<int>{0, 1, 3, 2});

    CHECK_THROWS_AS(euler::canonical(g, {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(euler::canonical(g, {0, 0, 1, 3, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(euler::canonical(g, {}), std::invalid_argument);
}

TEST_CASE("enumeration finds the classic small cycle sets") {
    const auto h2 = euler::enumerate_cycles(core::as_multigraph(core::debruijn_graph(2)));
    REQUIRE(h2.size() == 1);
    CHECK(h2[0].ids == std::vector<int>{0, 1, 3, 2});

    const auto h3 = euler::enumerate_cycles(core::as_multigraph(core::debruijn_graph(3)));
    CHECK(h3.size() == 2);
    const auto h3r =
        euler::enumerate_cycles(core::as_multigraph(core::debruijn_graph(3)), true);
    CHECK(h3 == h3r);
}

TEST_CASE("graphs without Eulerian cycles enumerate to nothing") {
    // two isolated nodes wearing double self-loops: balanced but disconnected
    const core::TNet n = core::validate_tnet(2, {{0, 0}, {0, 0}, {1, 1}, {1, 1}});
    CHECK(euler::enumerate_cycles(core::as_multigraph(n)).empty());
    CHECK(euler::count_cycles_best(n) == 0);
}

TEST_CASE("arborescence counts on small oracles") {
    CHECK(euler::arborescence_count(core::debruijn_graph(2), 0) == 1);
    CHECK(euler::arborescence_count(core::debruijn_graph(3), 0) == 2);
    // parallel pair: two arborescences toward each root
    const core::TNet pp = core::validate_tnet(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}});
    CHECK(euler::arborescence_count(pp, 0) == 2);
    CHECK(euler::arborescence_count(pp, 1) == 2);
    CHECK_THROWS_AS(euler::arborescence_count(pp, 5), std::invalid_argument);
}

TEST_CASE("determinant count equals enumeration on small nets") {
    for (int k = 2; k <= 4; ++k) {
        const core::TNet n = core::debruijn_graph(k);
        const auto cycles = euler::enumerate_cycles(core::as_multigraph(n));
        CHECK(euler::count_cycles_best(n) == static_cast<long>(cycles.size()));
    }
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const core::TNet n = harness::random_tnet(1 + seed % 5, 900 + seed);
        const auto cycles = euler::enumerate_cycles(core::as_multigraph(n));
        CHECK(euler::count_cycles_best(n) == static_cast<long>(cycles.size()));
    }
}

TEST_CASE("counting with doubled edges") {
    // one doubled edge each way: the unique cycle pqpq cannot be counted
    // without a single-multiplicity anchor
    core::Multigraph g;
    g.nodes = 2;
    g.tail = {0, 1};
    g.head = {1, 0};
    g.mult = {2, 2};
    CHECK(euler::enumerate_cycles(g).size() == 1);
    CHECK_THROWS_AS(euler::count_cycles_best_multi(g), std::logic_error);

    // adding a parallel single edge anchors the count
    core::Multigraph h;
    h.nodes = 2;
    h.tail = {0, 0, 1};
    h.head = {1, 1, 0};
    h.mult = {1, 1, 2};
    CHECK(euler::count_cycles_best_multi(h) == 1);
    CHECK(euler::enumerate_cycles(h).size() == 1);

    core::Multigraph bad = h;
    bad.mult = {1, 1, 3};
    CHECK_THROWS_AS(euler::count_cycles_best_multi(bad), std::invalid_argument);

    // unbalanced multiplicities count zero
    core::Multigraph ub;
    ub.nodes = 2;
    ub.tail = {0, 0, 1};
    ub.head = {1, 1, 0};
    ub.mult = {1, 1, 1};
    CHECK(euler::count_cycles_best_multi(ub) == 0);

    // the quadruple of the order-2 de Bruijn graph carries exactly two cycles
    const core::Multigraph q = core::as_multigraph(core::quadruple(core::debruijn_graph(2)));
    CHECK(euler::count_cycles_best_multi(q) == 2);
    CHECK(euler::enumerate_cycles(q).size() == 2);
}
