#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "tnet/bijection.hpp"
#include "tnet/core.hpp"
#include "tnet/euler.hpp"
#include "tnet/harness.hpp"

using namespace tnet;
using splitting::Branch;

namespace {

std::vector<int> all_bits(int len, unsigned mask) {
    std::vector<int> bits(len);
    for (int j = 0; j < len; ++j) bits[j] = (mask >> j) & 1;
    return bits;
}

void check_expand_reduce_bijection(const core::TNet& n) {
    const int m = n.m;
    const auto base = euler::enumerate_cycles(core::as_multigraph(n));
    const auto doubled =
        euler::enumerate_cycles(core::as_multigraph(core::double_net(n)));
    std::set<euler::EulerCycle> images;
    for (const euler::EulerCycle& p : base) {
        for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
            const std::vector<int> bits = all_bits(m - 1, mask);
            const euler::EulerCycle img = bijection::expand_cycle(n, p, bits);
            CHECK(images.insert(img).second);  // no collisions
            const auto [p2, bits2] = bijection::reduce_cycle(n, img);
            CHECK(p2 == p);
            CHECK(bits2 == bits);
        }
    }
    std::set<euler::EulerCycle> want(doubled.begin(), doubled.end());
    CHECK(images == want);
}

}  // namespace

TEST_CASE("lift interleaves connectors and project inverts it") {
    const core::TNet h2 = core::debruijn_graph(2);
    const euler::EulerCycle p{{0, 1, 3, 2}};
    const auto [leaf, lc] = bijection::lift(h2, p);
    CHECK(leaf.level == 2);
    CHECK(leaf.lineage == std::vector<std::uint8_t>{0, 0});  // both gadgets crossed
    CHECK(lc ==
          euler::canonical(core::as_multigraph(leaf.graph), {0, 7, 1, 11, 3, 9, 2, 5}));
    CHECK(bijection::project(h2, lc) == p);
}

TEST_CASE("project after lift is the identity on all cycles") {
    for (int order = 2; order <= 3; ++order) {
        const core::TNet n = core::debruijn_graph(order);
        for (const euler::EulerCycle& p :
             euler::enumerate_cycles(core::as_multigraph(n))) {
            const auto [leaf, lc] = bijection::lift(n, p);
            CHECK(splitting::leaf_connected(leaf.graph));
            CHECK(bijection::project(n, lc) == p);
        }
    }
}

TEST_CASE("expansion and reduction are mutually inverse bijections") {
    check_expand_reduce_bijection(core::debruijn_graph(2));
    check_expand_reduce_bijection(core::debruijn_graph(3));
    // the one-node net exercises the bitless-only path
    check_expand_reduce_bijection(core::validate_tnet(1, {{0, 0}, {0, 0}}));
    // a couple of random connected nets
    int hit = 0;
    for (std::uint64_t seed = 0; seed < 40 && hit < 2; ++seed) {
        const core::TNet n = harness::random_tnet(3, 500 + seed);
        if (euler::count_cycles_best(n) == 0) continue;
        check_expand_reduce_bijection(n);
        ++hit;
    }
    CHECK(hit == 2);
}

TEST_CASE("a single expansion of an order-4 base cycle survives the round trip") {
    const core::TNet n = core::debruijn_graph(4);
    const auto base = euler::enumerate_cycles(core::as_multigraph(n));
    REQUIRE(base.size() == 16);
    const std::vector<int> bits = {1, 0, 1, 1, 0, 0, 1};
    const euler::EulerCycle img = bijection::expand_cycle(n, base[3], bits);
    const auto [p2, bits2] = bijection::reduce_cycle(n, img);
    CHECK(p2 == base[3]);
    CHECK(bits2 == bits);
}

TEST_CASE("expansion validates its inputs") {
    const core::TNet h2 = core::debruijn_graph(2);
    const euler::EulerCycle p{{0, 1, 3, 2}};
    CHECK_THROWS_AS(bijection::expand_cycle(h2, p, {}), std::invalid_argument);
    CHECK_THROWS_AS(bijection::expand_cycle(h2, p, {2}), std::invalid_argument);
    CHECK_THROWS_AS(bijection::expand_cycle(h2, euler::EulerCycle{{0, 1, 2, 3}}, {0}),
                    std::invalid_argument);
    // reduce rejects a cycle that is not of double(N)
    CHECK_THROWS_AS(bijection::reduce_cycle(h2, p), std::invalid_argument);
}
