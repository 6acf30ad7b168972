#include "tnet/splitting.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "step_table.hpp"
#include "tnet/bijection.hpp"

namespace tnet::detail {

std::vector<int> assemble_pattern(std::string_view pattern, const Binding& bind, int base) {
    std::vector<int> out;
    for (char ch : pattern) {
        if (ch >= 'A' && ch <= 'D') {
            const auto& path = bind[ch - 'A'];
            out.insert(out.end(), path.begin(), path.end());
        } else {
            out.push_back(base + (ch - '0'));
        }
    }
    return out;
}

std::vector<Binding> match_pattern(const std::vector<int>& word, std::string_view pattern,
                                   int base) {
    // Patterns strictly alternate letter, role: pair j is (letters[j], roles[j]).
    std::vector<int> letters, roles;
    for (std::size_t j = 0; j + 1 < pattern.size(); j += 2) {
        letters.push_back(pattern[j] - 'A');
        roles.push_back(pattern[j + 1] - '0');
    }
    const int k = static_cast<int>(roles.size());
    const int len = static_cast<int>(word.size());

    std::vector<int> anchor_pos, anchor_role;
    for (int t = 0; t < len; ++t) {
        if (word[t] >= base && word[t] < base + 4) {
            anchor_pos.push_back(t);
            anchor_role.push_back(word[t] - base);
        }
    }
    std::vector<Binding> out;
    if (static_cast<int>(anchor_pos.size()) != k) return out;

    // pre[j]: ids strictly between anchor j-1 and anchor j (the path that
    // ends at anchor j).
    std::vector<std::vector<int>> pre(k);
    for (int j = 0; j < k; ++j) {
        int from = anchor_pos[(j + k - 1) % k];
        int to = anchor_pos[j];
        for (int t = (from + 1) % len; t != to; t = (t + 1) % len) pre[j].push_back(word[t]);
    }

    for (int r = 0; r < k; ++r) {
        bool aligned = true;
        for (int j = 0; j < k && aligned; ++j) aligned = anchor_role[(r + j) % k] == roles[j];
        if (!aligned) continue;
        Binding bind;
        std::array<bool, 4> bound{};
        bool consistent = true;
        for (int j = 0; j < k && consistent; ++j) {
            int letter = letters[j];
            const auto& path = pre[(r + j) % k];
            if (!bound[letter]) {
                bind[letter] = path;
                bound[letter] = true;
            } else if (bind[letter] != path) {
                consistent = false;
            }
        }
        if (consistent) out.push_back(std::move(bind));
    }
    return out;
}

int step_row_index(const splitting::Segments& seg) {
    using splitting::Branch;
    using splitting::SegCase;
    if (seg.seg_case == SegCase::nested) return 0;
    if (seg.seg_case == SegCase::sequential) return 1;
    int off = (seg.branch == Branch::straight) ? 2 : 6;
    if (seg.a_equals_b) return off + 2;
    if (seg.c_equals_d) return off + 3;
    return off + (seg.c_follows_a ? 0 : 1);
}

}  // namespace tnet::detail

namespace tnet::splitting {

GadgetQuad gadget_quad(const WGraph& w, int i) {
    if (i < 1 || i > w.m)
        throw std::invalid_argument("split index out of range: " + std::to_string(i));
    const int a = i - 1;
    GadgetQuad q{i, w.connector_id(a, 0), w.connector_id(a, 1), w.connector_id(a, 2),
                 w.connector_id(a, 3)};
    for (int role = 0; role < 4; ++role) {
        const core::WEdge& ed = w.edges[w.connector_id(a, role)];
        if (!ed.present || ed.color != core::Color::blue)
            throw std::invalid_argument("gadget " + std::to_string(i) + " is already split");
    }
    return q;
}

std::pair<LevelGraph, LevelGraph> split(const LevelGraph& w) {
    if (w.level >= w.graph.m) throw std::invalid_argument("all gadgets are already split");
    const GadgetQuad q = gadget_quad(w.graph, w.level + 1);
    auto make = [&](Branch b) {
        LevelGraph child{w.graph, w.level + 1, w.lineage};
        child.lineage.push_back(static_cast<std::uint8_t>(b));
        const bool crossed = b == Branch::crossed;
        const int keep1 = crossed ? q.in2_out1 : q.in1_out1;
        const int keep2 = crossed ? q.in1_out2 : q.in2_out2;
        const int drop1 = crossed ? q.in1_out1 : q.in2_out1;
        const int drop2 = crossed ? q.in2_out2 : q.in1_out2;
        child.graph.edges[keep1].color = core::Color::black;
        child.graph.edges[keep2].color = core::Color::black;
        child.graph.edges[drop1].present = false;
        child.graph.edges[drop2].present = false;
        return child;
    };
    return {make(Branch::crossed), make(Branch::straight)};
}

std::vector<std::vector<LevelGraph>> build_levels(const TNet& n) {
    if (n.m > 20)
        throw std::invalid_argument("net too large for the full cascade (m > 20)");
    std::vector<std::vector<LevelGraph>> levels(n.m + 1);
    levels[0].push_back(LevelGraph{core::quadruple(n), 0, {}});
    for (int i = 1; i <= n.m; ++i) {
        levels[i].reserve(levels[i - 1].size() * 2);
        for (const LevelGraph& w : levels[i - 1]) {
            auto [crossed, straight] = split(w);
            levels[i].push_back(std::move(crossed));
            levels[i].push_back(std::move(straight));
        }
    }
    return levels;
}

std::vector<LevelGraph> build_delta(const TNet& n) {
    auto levels = build_levels(n);
    std::vector<LevelGraph> delta;
    for (LevelGraph& leaf : levels.back())
        if (leaf_connected(leaf.graph)) delta.push_back(std::move(leaf));
    return delta;
}

bool leaf_connected(const WGraph& w) {
    const int nodes = w.node_count();
    std::vector<int> out_edge(nodes, -1);
    int present = 0;
    for (int e = 0; e < static_cast<int>(w.edges.size()); ++e) {
        if (!w.edges[e].present) continue;
        ++present;
        if (out_edge[w.edges[e].tail] != -1) return false;
        out_edge[w.edges[e].tail] = e;
    }
    if (present != nodes) return false;
    int node = 0, steps = 0;
    do {
        if (out_edge[node] == -1) return false;
        node = w.edges[out_edge[node]].head;
        ++steps;
    } while (node != 0 && steps <= present);
    return steps == present;
}

namespace {

// Lockstep comparison used to name the two paths of an alternating pair:
// -1 / +1 says which is lexicographically first at the first divergence,
// 0 means identical.  One path being a strict prefix of the other cannot
// happen on cycles of a split graph (after an in-port the continuation is
// forced until the next retained connector), so it signals a broken input.
int delta_compare(const std::vector<int>& x, const std::vector<int>& y) {
    std::size_t k = 0;
    while (k < x.size() && k < y.size()) {
        if (x[k] != y[k]) return x[k] < y[k] ? -1 : 1;
        ++k;
    }
    if (x.size() != y.size())
        throw std::logic_error("path tie-break hit a strict prefix");
    return 0;
}

}  // namespace

Segments recognize_word(const std::vector<int>& p, int m, int i, Branch branch) {
    const int base = 2 * m + 4 * (i - 1);
    const bool crossed = branch == Branch::crossed;
    const int lo = base + (crossed ? 1 : 0);
    const int hi = base + (crossed ? 3 : 2);
    const int len = static_cast<int>(p.size());

    std::vector<int> pos;
    int nlo = 0, nhi = 0;
    for (int t = 0; t < len; ++t) {
        if (p[t] == lo || p[t] == hi) {
            pos.push_back(t);
            (p[t] == lo ? nlo : nhi)++;
        }
    }
    if (nlo != 2 || nhi != 2)
        throw std::invalid_argument("retained connectors of gadget " + std::to_string(i) +
                                    " must be traversed twice each");

    // Path k runs strictly between anchors k and k+1; its signature is the
    // bounding anchor id pair.
    std::array<std::vector<int>, 4> path;
    std::array<int, 4> prev{}, next{};
    for (int k = 0; k < 4; ++k) {
        const int from = pos[k], to = pos[(k + 1) % 4];
        prev[k] = p[from];
        next[k] = p[to];
        for (int t = (from + 1) % len; t != to; t = (t + 1) % len) path[k].push_back(p[t]);
    }

    Segments seg;
    seg.branch = branch;
    bool has_lolo = false;
    for (int k = 0; k < 4; ++k) has_lolo |= prev[k] == lo && next[k] == lo;

    if (has_lolo) {
        seg.seg_case = crossed ? SegCase::nested : SegCase::sequential;
        for (int k = 0; k < 4; ++k) {
            std::vector<int>* slot;
            const bool plo = prev[k] == lo, nlo2 = next[k] == lo;
            if (crossed) {
                // nested: z..z -> a, z..u -> d, u..u -> c, u..z -> b
                slot = plo ? (nlo2 ? &seg.c : &seg.b) : (nlo2 ? &seg.d : &seg.a);
            } else {
                // sequential: v..t -> a, t..t -> b, t..v -> c, v..v -> d
                slot = plo ? (nlo2 ? &seg.b : &seg.c) : (nlo2 ? &seg.a : &seg.d);
            }
            *slot = std::move(path[k]);
        }
        return seg;
    }

    seg.seg_case = SegCase::alternating;
    // Both branches alternate hi..lo (the a/b pair) with lo..hi (the c/d
    // pair) around the cycle.
    std::array<int, 2> ab{}, cd{};
    int nab = 0, ncd = 0;
    for (int k = 0; k < 4; ++k) {
        if (prev[k] == hi && next[k] == lo) {
            if (nab == 2) throw std::invalid_argument("malformed anchor pattern");
            ab[nab++] = k;
        } else if (prev[k] == lo && next[k] == hi) {
            if (ncd == 2) throw std::invalid_argument("malformed anchor pattern");
            cd[ncd++] = k;
        }
    }
    if (nab != 2 || ncd != 2) throw std::invalid_argument("malformed anchor pattern");

    const int cmp_ab = delta_compare(path[ab[0]], path[ab[1]]);
    const int a_idx = cmp_ab > 0 ? ab[1] : ab[0];
    const int b_idx = cmp_ab > 0 ? ab[0] : ab[1];
    seg.a_equals_b = cmp_ab == 0;
    const int cmp_cd = delta_compare(path[cd[0]], path[cd[1]]);
    const int c_idx = cmp_cd > 0 ? cd[1] : cd[0];
    const int d_idx = cmp_cd > 0 ? cd[0] : cd[1];
    seg.c_equals_d = cmp_cd == 0;
    if (seg.a_equals_b && seg.c_equals_d)
        throw std::logic_error("both path pairs collapsed before the final step");

    seg.a = std::move(path[a_idx]);
    seg.b = std::move(path[b_idx]);
    seg.c = std::move(path[c_idx]);
    seg.d = std::move(path[d_idx]);
    if (seg.a_equals_b || seg.c_equals_d)
        seg.c_follows_a = true;
    else
        seg.c_follows_a = (a_idx + 1) % 4 == c_idx;
    return seg;
}

std::vector<int> Segments::reassemble(const WGraph& w, int i) const {
    const int base = w.connector_id(i - 1, 0);
    const detail::Binding bind{a, b, c, d};
    return detail::assemble_pattern(detail::kStepRows[detail::step_row_index(*this)].child,
                                    bind, base);
}

Segments recognize(const EulerCycle& p, const LevelGraph& w, int i) {
    if (i < 1 || i > w.level)
        throw std::invalid_argument("gadget " + std::to_string(i) + " is not split at level " +
                                    std::to_string(w.level));
    euler::canonical(core::as_multigraph(w.graph), p.ids);
    return recognize_word(p.ids, w.graph.m, i, static_cast<Branch>(w.lineage[i - 1]));
}

namespace {

std::vector<int> rotate_min(const std::vector<int>& v) {
    const std::size_t r = euler::least_rotation(v);
    std::vector<int> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[(r + j) % v.size()];
    return out;
}

bool same_cycle(const std::vector<int>& x, const std::vector<int>& y) {
    return x.size() == y.size() && rotate_min(x) == rotate_min(y);
}

}  // namespace

SplitStepWord split_step_word(const std::vector<int>& g, int m, int i) {
    const int base = 2 * m + 4 * (i - 1);
    // Row trial: cut g along each candidate parent pattern and accept the
    // first child whose un-split reproduces g.  A wrong row either fails to
    // match or yields a child the un-split step rejects, so correctness
    // never depends on trial order.
    if (i == m) {
        for (const auto& row : detail::kFinalRows) {
            for (const auto& bind : detail::match_pattern(g, row.parent, base)) {
                std::vector<int> child = detail::assemble_pattern(row.child, bind, base);
                try {
                    if (same_cycle(bijection::unsplit_final_word(child, m, row.branch), g))
                        return {row.branch, std::move(child), 0};
                } catch (const std::exception&) {
                }
            }
        }
    } else {
        for (const auto& row : detail::kStepRows) {
            for (int bit = 0; bit < 2; ++bit) {
                for (const auto& bind : detail::match_pattern(g, row.parent[bit], base)) {
                    std::vector<int> child = detail::assemble_pattern(row.child, bind, base);
                    try {
                        if (same_cycle(
                                bijection::unsplit_step_word(child, m, i, row.branch, bit), g))
                            return {row.branch, std::move(child), bit};
                    } catch (const std::exception&) {
                    }
                }
            }
        }
    }
    throw std::invalid_argument("cycle does not reduce at split index " + std::to_string(i));
}

SplitStep split_step(const EulerCycle& g, const LevelGraph& w, int i) {
    if (i != w.level + 1)
        throw std::invalid_argument("next split index is " + std::to_string(w.level + 1));
    euler::canonical(core::as_multigraph(w.graph), g.ids);
    SplitStepWord r = split_step_word(g.ids, w.graph.m, i);
    auto [crossed, straight] = split(w);
    const LevelGraph& child = r.branch == Branch::crossed ? crossed : straight;
    return {r.branch, euler::canonical(core::as_multigraph(child.graph), r.child), r.bit};
}

}  // namespace tnet::splitting
