#ifndef TNET_HARNESS_HPP
#define TNET_HARNESS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "tnet/core.hpp"

namespace tnet::harness {

using core::TNet;

// Configuration-model T-net: node j owns out-edges 2j and 2j+1; the in-stub
// list (each node twice) is shuffled by a seeded generator and matched to
// the out-stubs in order.  Deterministic per (m, seed); always balanced,
// not necessarily connected.
TNet random_tnet(int m, std::uint64_t seed);

// One verification check: pass is exact big-integer comparison, never a
// tolerance.  `relation` is "eq" except for bound checks, where it is "le"
// (actual <= expected).
struct CheckResult {
    std::string name;
    mpz_class expected;
    mpz_class actual;
    std::string relation = "eq";
    bool pass = false;
    double elapsed_sec = 0.0;
};

struct VerifyReport {
    std::string summary;  // "m=<m> edges=<multiset hash>"
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// |Theta(double(N))| = 2^(m-1) |Theta(N)|, checked by determinant counting
// always and by exhaustive enumeration at desk scale (m <= 6 and counts
// <= 10^5).
VerifyReport verify_doubling(const TNet& n);

// |Theta(N)| <= 2^(m-1).
VerifyReport verify_bound(const TNet& n);

// The full cascade: per-graph child identities at every level, the halving
// of level sums down to the final equal pair, the connected-leaf count
// against |Theta(N)|, and the quadruple/double counts against
// 2^(m-1) |Theta(N)|.
VerifyReport verify_cascade(const TNet& n);

// Plain-text table rendering.
std::string render_table(const VerifyReport& r);
// One "CHECK <name> <expected> <actual> <PASS|FAIL>" line per check.
std::string render_machine(const VerifyReport& r);

}  // namespace tnet::harness

#endif
