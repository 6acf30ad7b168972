// Acceptance gate: eight named criteria, one PASS/FAIL line each, nonzero
// exit if any fails.  Every comparison is exact integer equality.
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tnet/bijection.hpp"
#include "tnet/core.hpp"
#include "tnet/debruijn.hpp"
#include "tnet/euler.hpp"
#include "tnet/harness.hpp"
#include "tnet/splitting.hpp"

using namespace tnet;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok) {
    std::printf("[%d] %-20s %s\n", idx, name, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    if (!ok) ++failures;
}

long enum_count(const core::TNet& n) {
    return static_cast<long>(euler::enumerate_cycles(core::as_multigraph(n)).size());
}

// Shared corpus: named small nets plus the seeded random families used by
// the doubling and cascade criteria.
core::TNet parallel_pair() {
    return core::validate_tnet(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}});
}

core::TNet one_node() { return core::validate_tnet(1, {{0, 0}, {0, 0}}); }

std::vector<core::TNet> doubling_corpus() {
    std::vector<core::TNet> nets;
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        nets.push_back(harness::random_tnet(1 + static_cast<int>(seed % 5), seed));
    return nets;
}

std::vector<core::TNet> cascade_corpus() {
    std::vector<core::TNet> nets;
    for (std::uint64_t seed = 100; seed < 120; ++seed)
        nets.push_back(harness::random_tnet(1 + static_cast<int>(seed % 5), seed));
    return nets;
}

void criterion_counting() {
    const long want[] = {1, 2, 16, 2048};
    bool ok = true;
    for (int n = 2; n <= 5; ++n)
        ok = ok && enum_count(core::debruijn_graph(n)) == want[n - 2];
    ok = ok && euler::count_cycles_best(core::debruijn_graph(6)) == 67108864;
    report(1, "counting-formula", ok);
}

void criterion_doubling() {
    bool ok = true;
    for (int n = 2; n <= 4; ++n)
        ok = ok && harness::verify_doubling(core::debruijn_graph(n)).all_pass();
    int zero_cycle = 0;
    for (const core::TNet& n : doubling_corpus()) {
        if (euler::count_cycles_best(n) == 0) ++zero_cycle;
        ok = ok && harness::verify_doubling(n).all_pass();
    }
    ok = ok && zero_cycle >= 1;
    report(2, "doubling-identity", ok);
}

void criterion_cascade() {
    bool ok = harness::verify_cascade(core::debruijn_graph(3)).all_pass();
    for (const core::TNet& n : cascade_corpus())
        ok = ok && harness::verify_cascade(n).all_pass();
    report(3, "cascade-identities", ok);
}

void criterion_bound() {
    bool ok = true;
    for (int n = 2; n <= 5; ++n)
        ok = ok && harness::verify_bound(core::debruijn_graph(n)).all_pass();
    ok = ok && harness::verify_bound(parallel_pair()).all_pass();
    ok = ok && harness::verify_bound(one_node()).all_pass();
    for (const core::TNet& n : doubling_corpus())
        ok = ok && harness::verify_bound(n).all_pass();
    for (const core::TNet& n : cascade_corpus())
        ok = ok && harness::verify_bound(n).all_pass();
    // tight witness: the parallel pair meets the bound with equality
    ok = ok && euler::count_cycles_best(parallel_pair()) == 2;
    report(4, "cycle-bound", ok);
}

void criterion_expand() {
    bool ok = true;
    for (int order = 2; order <= 4; ++order) {
        const core::TNet n = core::debruijn_graph(order);
        const int m = n.m;
        const auto base = euler::enumerate_cycles(core::as_multigraph(n));
        const auto doubled =
            euler::enumerate_cycles(core::as_multigraph(core::double_net(n)));
        std::set<euler::EulerCycle> images;
        for (const euler::EulerCycle& p : base) {
            for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                std::vector<int> bits(m - 1);
                for (int j = 0; j < m - 1; ++j) bits[j] = (mask >> j) & 1;
                const euler::EulerCycle img = bijection::expand_cycle(n, p, bits);
                ok = ok && images.insert(img).second;
                const auto [p2, bits2] = bijection::reduce_cycle(n, img);
                ok = ok && p2 == p && bits2 == bits;
            }
        }
        ok = ok && images == std::set<euler::EulerCycle>(doubled.begin(), doubled.end());
        const std::size_t sizes[] = {2, 16, 2048};
        ok = ok && images.size() == sizes[order - 2];
    }
    report(5, "expand-bijectivity", ok);
}

void criterion_unrank() {
    bool ok = true;
    for (int n = 3; n <= 5; ++n) {
        const int len = (1 << (n - 1)) - n;
        std::set<std::string> images;
        for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
            std::string s(len, '0');
            for (int j = 0; j < len; ++j) s[j] = '0' + ((mask >> j) & 1);
            const std::string b = debruijn::unrank(n, s);
            ok = ok && debruijn::is_base_form(b, n);  // independent window check
            ok = ok && images.insert(b).second;
            ok = ok && debruijn::rank(n, b) == s;
        }
        std::set<std::string> want;
        for (const auto& c :
             euler::enumerate_cycles(core::as_multigraph(core::debruijn_graph(n))))
            want.insert(debruijn::cycle_to_seq(n, c));
        ok = ok && images == want;
    }
    report(6, "unrank-bijectivity", ok);
}

void criterion_stanley() {
    bool ok = true;
    // order 3, both directions, exhaustively
    std::vector<std::string> all;
    for (const std::string& base : {std::string("00010111"), std::string("00011101")})
        for (int r = 0; r < 8; ++r) all.push_back(debruijn::rotate_from_base(3, r, base));
    ok = ok && all.size() == 16;
    for (const std::string& b1 : all)
        for (const std::string& b2 : all) {
            const auto [r1, r2] = debruijn::stanley_decode(3, debruijn::stanley_encode(3, b1, b2));
            ok = ok && r1 == b1 && r2 == b2;
        }
    for (unsigned mask = 0; mask < 256; ++mask) {
        std::string bits(8, '0');
        for (int j = 0; j < 8; ++j) bits[j] = '0' + ((mask >> j) & 1);
        const auto [b1, b2] = debruijn::stanley_decode(3, bits);
        ok = ok && debruijn::stanley_encode(3, b1, b2) == bits;
    }
    // sampled round trips at orders 4 and 5
    std::mt19937_64 rng(424242);
    for (int n = 4; n <= 5; ++n) {
        for (int trial = 0; trial < 500; ++trial) {
            std::string bits(1 << n, '0');
            for (char& ch : bits) ch = '0' + static_cast<char>(rng() & 1);
            const auto [b1, b2] = debruijn::stanley_decode(n, bits);
            ok = ok && debruijn::is_debruijn(b1, n) && debruijn::is_debruijn(b2, n);
            ok = ok && debruijn::stanley_encode(n, b1, b2) == bits;
        }
    }
    report(7, "stanley-codec", ok);
}

void criterion_oracles() {
    bool ok = true;
    std::vector<core::TNet> corpus = {core::debruijn_graph(2), core::debruijn_graph(3),
                                      parallel_pair(), one_node()};
    for (const core::TNet& n : doubling_corpus()) corpus.push_back(n);
    for (const core::TNet& n : cascade_corpus()) corpus.push_back(n);
    for (const core::TNet& n : corpus) {
        if (n.m > 5) continue;
        ok = ok && euler::count_cycles_best(n) == enum_count(n);
    }
    report(8, "oracle-agreement", ok);
}

}  // namespace

int main() {
    criterion_counting();
    criterion_doubling();
    criterion_cascade();
    criterion_bound();
    criterion_expand();
    criterion_unrank();
    criterion_stanley();
    criterion_oracles();
    return failures == 0 ? 0 : 1;
}
