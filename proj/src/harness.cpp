#include "tnet/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "tnet/euler.hpp"
#include "tnet/splitting.hpp"

namespace tnet::harness {

namespace {

mpz_class pow2(int k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return r;
}

std::string net_summary(const TNet& n) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < n.edge_count(); ++e) edges.emplace_back(n.tail[e], n.head[e]);
    std::sort(edges.begin(), edges.end());
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (auto& [t, hd] : edges) {
        mix(static_cast<std::uint64_t>(t));
        mix(static_cast<std::uint64_t>(hd));
    }
    std::ostringstream os;
    os << "m=" << n.m << " edges=" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

// Desk-scale caps for enumeration-based cross-checks; larger inputs rely on
// determinant counting alone.
constexpr int kEnumMaxM = 6;
const long kEnumCap = 100000;

bool enum_ok(const TNet& n, const mpz_class& predicted) {
    return n.m <= kEnumMaxM && predicted <= kEnumCap;
}

template <class F>
void run_check(VerifyReport& rep, const std::string& name, const std::string& relation,
               F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::pair<mpz_class, mpz_class> v = f();
    const auto t1 = std::chrono::steady_clock::now();
    CheckResult c;
    c.name = name;
    c.expected = v.first;
    c.actual = v.second;
    c.relation = relation;
    c.pass = relation == "le" ? v.second <= v.first : v.first == v.second;
    c.elapsed_sec = std::chrono::duration<double>(t1 - t0).count();
    rep.checks.push_back(std::move(c));
}

mpz_class enum_count(const core::Multigraph& g) {
    return mpz_class(static_cast<long>(euler::enumerate_cycles(g).size()));
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

TNet random_tnet(int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    std::vector<int> in;
    in.reserve(2 * m);
    for (int a = 0; a < m; ++a) {
        in.push_back(a);
        in.push_back(a);
    }
    // Hand-rolled Fisher-Yates over raw mt19937_64 draws: std::shuffle and
    // the distribution classes leave their algorithms unspecified, and the
    // whole point here is byte-identical nets for a given (m, seed)
    // everywhere.  Modulo bias is irrelevant for test-corpus generation.
    std::mt19937_64 rng(seed);
    for (std::size_t k = in.size() - 1; k > 0; --k) {
        const std::size_t j = static_cast<std::size_t>(rng() % (k + 1));
        std::swap(in[k], in[j]);
    }
    std::vector<std::pair<int, int>> edges(2 * m);
    for (int e = 0; e < 2 * m; ++e) edges[e] = {e / 2, in[e]};
    return core::validate_tnet(m, edges);
}

VerifyReport verify_doubling(const TNet& n) {
    VerifyReport rep{net_summary(n), {}};
    const TNet d = core::double_net(n);
    const mpz_class scale = pow2(n.m - 1);
    const mpz_class best_n = euler::count_cycles_best(n);
    const mpz_class best_d = euler::count_cycles_best(d);
    run_check(rep, "doubling-best", "eq",
              [&] { return std::pair<mpz_class, mpz_class>(scale * best_n, best_d); });
    if (enum_ok(n, best_n) && enum_ok(n, best_d)) {
        const mpz_class en = enum_count(core::as_multigraph(n));
        const mpz_class ed = enum_count(core::as_multigraph(d));
        run_check(rep, "doubling-enum", "eq", [&] { return std::pair<mpz_class, mpz_class>(scale * en, ed); });
        run_check(rep, "enum-vs-best-base", "eq", [&] { return std::pair<mpz_class, mpz_class>(best_n, en); });
        run_check(rep, "enum-vs-best-double", "eq", [&] { return std::pair<mpz_class, mpz_class>(best_d, ed); });
    }
    return rep;
}

VerifyReport verify_bound(const TNet& n) {
    VerifyReport rep{net_summary(n), {}};
    const mpz_class bound = pow2(n.m - 1);
    const mpz_class best_n = euler::count_cycles_best(n);
    run_check(rep, "bound-best", "le", [&] { return std::pair<mpz_class, mpz_class>(bound, best_n); });
    if (enum_ok(n, best_n)) {
        run_check(rep, "bound-enum", "le", [&] {
            return std::pair<mpz_class, mpz_class>(bound, enum_count(core::as_multigraph(n)));
        });
    }
    return rep;
}

VerifyReport verify_cascade(const TNet& n) {
    VerifyReport rep{net_summary(n), {}};
    const int m = n.m;
    const auto levels = splitting::build_levels(n);

    std::vector<std::vector<mpz_class>> cnt(m + 1);
    for (int i = 0; i <= m; ++i) {
        cnt[i].reserve(levels[i].size());
        for (std::size_t j = 0; j < levels[i].size(); ++j) {
            const core::Multigraph g = core::as_multigraph(levels[i][j].graph);
            cnt[i].push_back(euler::count_cycles_best_multi(g));
            if (enum_ok(n, cnt[i].back())) {
                run_check(rep,
                          "count-i" + std::to_string(i) + "-j" + std::to_string(j), "eq",
                          [&] { return std::pair<mpz_class, mpz_class>(cnt[i].back(), enum_count(g)); });
            }
        }
    }

    for (int i = 0; i + 2 <= m; ++i) {
        for (std::size_t j = 0; j < levels[i].size(); ++j) {
            run_check(rep, "child-sum-i" + std::to_string(i) + "-j" + std::to_string(j),
                      "eq", [&] {
                          return std::pair<mpz_class, mpz_class>(cnt[i][j],
                                           2 * (cnt[i + 1][2 * j] + cnt[i + 1][2 * j + 1]));
                      });
        }
    }
    for (std::size_t j = 0; j < levels[m - 1].size(); ++j) {
        run_check(rep, "final-sum-j" + std::to_string(j), "eq", [&] {
            return std::pair<mpz_class, mpz_class>(cnt[m - 1][j], cnt[m][2 * j] + cnt[m][2 * j + 1]);
        });
    }

    std::vector<mpz_class> sums(m + 1, 0);
    for (int i = 0; i <= m; ++i)
        for (const mpz_class& v : cnt[i]) sums[i] += v;
    for (int i = 1; i + 1 <= m; ++i) {
        run_check(rep, "level-sum-i" + std::to_string(i), "eq",
                  [&] { return std::pair<mpz_class, mpz_class>(sums[i - 1], 2 * sums[i]); });
    }
    run_check(rep, "level-sum-final", "eq",
              [&] { return std::pair<mpz_class, mpz_class>(sums[m - 1], sums[m]); });

    const mpz_class best_n = euler::count_cycles_best(n);
    run_check(rep, "delta-vs-base", "eq", [&] {
        long connected = 0;
        for (const splitting::LevelGraph& leaf : levels[m])
            if (splitting::leaf_connected(leaf.graph)) ++connected;
        return std::pair<mpz_class, mpz_class>(best_n, mpz_class(connected));
    });
    run_check(rep, "quadruple-vs-base", "eq",
              [&] { return std::pair<mpz_class, mpz_class>(pow2(m - 1) * best_n, cnt[0][0]); });
    run_check(rep, "double-vs-quadruple", "eq", [&] {
        return std::pair<mpz_class, mpz_class>(cnt[0][0], euler::count_cycles_best(core::double_net(n)));
    });
    return rep;
}

std::string render_table(const VerifyReport& r) {
    std::ostringstream os;
    os << r.summary << "\n";
    for (const CheckResult& c : r.checks) {
        os << "  " << (c.pass ? "ok  " : "FAIL") << "  " << std::left << std::setw(24)
           << c.name << std::right << "  " << c.expected.get_str()
           << (c.relation == "le" ? " >= " : " == ") << c.actual.get_str() << "  ("
           << std::fixed << std::setprecision(3) << c.elapsed_sec << "s)\n";
    }
    return os.str();
}

std::string render_machine(const VerifyReport& r) {
    std::ostringstream os;
    for (const CheckResult& c : r.checks)
        os << "CHECK " << c.name << " " << c.expected.get_str() << " " << c.actual.get_str()
           << " " << (c.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace tnet::harness
