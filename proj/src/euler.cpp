#include "tnet/euler.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tnet::euler {

std::size_t least_rotation(const std::vector<int>& seq) {
    std::size_t n = seq.size();
    if (n == 0) return 0;
    std::vector<int> d(seq);
    d.insert(d.end(), seq.begin(), seq.end());
    std::vector<long> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        long i = fail[j - k - 1];
        while (i != -1 && d[j] != d[k + i + 1]) {
            if (d[j] < d[k + i + 1]) k = j - i - 1;
            i = fail[i];
        }
        if (i == -1 && d[j] != d[k]) {
            if (d[j] < d[k]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k;
}

static std::vector<int> rotate_to(const std::vector<int>& seq, std::size_t k) {
    std::vector<int> out;
    out.reserve(seq.size());
    out.insert(out.end(), seq.begin() + k, seq.end());
    out.insert(out.end(), seq.begin(), seq.begin() + k);
    return out;
}

EulerCycle canonical(const Multigraph& g, const std::vector<int>& walk) {
    if (walk.empty()) throw std::invalid_argument("empty walk");
    std::vector<int> used(g.mult.size(), 0);
    for (std::size_t j = 0; j < walk.size(); ++j) {
        int e = walk[j];
        if (e < 0 || e >= (int)g.mult.size() || g.mult[e] == 0)
            throw std::invalid_argument("walk uses edge " + std::to_string(e) +
                                        " which is not in the graph");
        int f = walk[(j + 1) % walk.size()];
        if (g.head[e] != g.tail[f])
            throw std::invalid_argument("walk breaks at position " + std::to_string(j) +
                                        ": edge " + std::to_string(e) + " does not lead to edge " +
                                        std::to_string(f));
        ++used[e];
    }
    for (std::size_t e = 0; e < g.mult.size(); ++e)
        if (used[e] != g.mult[e])
            throw std::invalid_argument("edge " + std::to_string(e) + " traversed " +
                                        std::to_string(used[e]) + " times, want " +
                                        std::to_string(g.mult[e]));
    return EulerCycle{rotate_to(walk, least_rotation(walk))};
}

namespace {

struct Enumerator {
    const Multigraph& g;
    bool reverse;
    std::vector<std::vector<int>> out;      // node -> outgoing edge ids (ascending)
    std::vector<int> remaining;             // edge -> multiplicity left
    std::vector<int> walk;
    std::size_t target = 0;
    int start_node = -1;
    std::set<std::vector<int>> found;

    explicit Enumerator(const Multigraph& graph, bool rev) : g(graph), reverse(rev) {
        out.resize(g.nodes);
        remaining = g.mult;
        for (std::size_t e = 0; e < g.mult.size(); ++e)
            if (g.mult[e] > 0) {
                out[g.tail[e]].push_back((int)e);
                target += g.mult[e];
            }
    }

    void extend(int node) {
        if (walk.size() == target) {
            if (node == start_node) found.insert(rotate_to(walk, least_rotation(walk)));
            return;
        }
        const auto& cand = out[node];
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int e = reverse ? cand[cand.size() - 1 - i] : cand[i];
            if (remaining[e] == 0) continue;
            --remaining[e];
            walk.push_back(e);
            extend(g.head[e]);
            walk.pop_back();
            ++remaining[e];
        }
    }
};

}  // namespace

std::vector<EulerCycle> enumerate_cycles(const Multigraph& g, bool reverse_order) {
    // Balanced multiplicities are a precondition for any Eulerian cycle.
    std::vector<int> bal(g.nodes, 0);
    int first = -1;
    for (std::size_t e = 0; e < g.mult.size(); ++e)
        if (g.mult[e] > 0) {
            bal[g.tail[e]] += g.mult[e];
            bal[g.head[e]] -= g.mult[e];
            if (first < 0) first = (int)e;
        }
    if (first < 0) return {};
    for (int b : bal)
        if (b != 0) return {};

    Enumerator en(g, reverse_order);
    en.start_node = g.tail[first];
    --en.remaining[first];
    en.walk.push_back(first);
    en.extend(g.head[first]);
    std::vector<EulerCycle> res;
    for (auto& w : en.found) res.push_back(EulerCycle{w});
    return res;
}

namespace {

// Determinant by fraction-free Bareiss elimination; every division is exact.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> a) {
    int n = (int)a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n && p < 0; ++r)
                if (a[r][k] != 0) p = r;
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = num;
            }
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1];
    return sign < 0 ? mpz_class(-det) : det;
}

}  // namespace

mpz_class arborescence_count(const Multigraph& g, int root) {
    if (root < 0 || root >= g.nodes) throw std::invalid_argument("root out of range");
    // Out-degree Laplacian (self-loops cancel), root row/column removed.
    std::vector<std::vector<mpz_class>> lap(g.nodes, std::vector<mpz_class>(g.nodes, 0));
    for (std::size_t e = 0; e < g.mult.size(); ++e)
        if (g.mult[e] > 0 && g.tail[e] != g.head[e]) {
            lap[g.tail[e]][g.tail[e]] += g.mult[e];
            lap[g.tail[e]][g.head[e]] -= g.mult[e];
        }
    std::vector<std::vector<mpz_class>> minor;
    minor.reserve(g.nodes - 1);
    for (int i = 0; i < g.nodes; ++i) {
        if (i == root) continue;
        std::vector<mpz_class> row;
        row.reserve(g.nodes - 1);
        for (int j = 0; j < g.nodes; ++j)
            if (j != root) row.push_back(lap[i][j]);
        minor.push_back(std::move(row));
    }
    return det_bareiss(std::move(minor));
}

mpz_class arborescence_count(const core::TNet& n, int root) {
    return arborescence_count(core::as_multigraph(n), root);
}

static mpz_class factorial(int k) {
    mpz_class r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

mpz_class count_cycles_best(const core::TNet& n) {
    mpz_class count = arborescence_count(n, 0);
    std::vector<int> outdeg(n.m, 0);
    for (int e = 0; e < n.edge_count(); ++e) ++outdeg[n.tail[e]];
    for (int a = 0; a < n.m; ++a) count *= factorial(outdeg[a] - 1);
    return count;
}

mpz_class count_cycles_best_multi(const Multigraph& g) {
    std::vector<long> outdeg(g.nodes, 0), bal(g.nodes, 0);
    int doubled = 0;
    bool has_single = false;
    for (std::size_t e = 0; e < g.mult.size(); ++e) {
        if (g.mult[e] == 0) continue;
        if (g.mult[e] > 2) throw std::invalid_argument("multiplicity above 2 unsupported");
        outdeg[g.tail[e]] += g.mult[e];
        bal[g.tail[e]] += g.mult[e];
        bal[g.head[e]] -= g.mult[e];
        if (g.mult[e] == 2) ++doubled;
        else has_single = true;
    }
    if (!has_single)
        throw std::logic_error("counting needs at least one multiplicity-1 edge");
    for (long b : bal)
        if (b != 0) return 0;
    mpz_class count = arborescence_count(g, 0);
    for (int a = 0; a < g.nodes; ++a)
        if (outdeg[a] > 0) count *= factorial((int)outdeg[a] - 1);
    mpz_class div = mpz_class(1) << doubled;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), count.get_mpz_t(), div.get_mpz_t());
    if (r != 0) throw std::logic_error("doubled-edge factor did not divide the raw count");
    return q;
}

}  // namespace tnet::euler
