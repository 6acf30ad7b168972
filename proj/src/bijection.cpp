#include "tnet/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "step_table.hpp"

namespace tnet::bijection {

std::vector<int> unsplit_step_word(const std::vector<int>& p, int m, int i, Branch branch,
                                   int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
    const splitting::Segments seg = splitting::recognize_word(p, m, i, branch);
    const detail::StepRow& row = detail::kStepRows[detail::step_row_index(seg)];
    const detail::Binding bind{seg.a, seg.b, seg.c, seg.d};
    return detail::assemble_pattern(row.parent[bit], bind, 2 * m + 4 * (i - 1));
}

std::vector<int> unsplit_final_word(const std::vector<int>& p, int m, Branch branch) {
    const int base = 2 * m + 4 * (m - 1);
    const bool crossed = branch == Branch::crossed;
    const int lo = base + (crossed ? 1 : 0);
    const int hi = base + (crossed ? 3 : 2);
    const int len = static_cast<int>(p.size());
    int pos_lo = -1, pos_hi = -1;
    for (int t = 0; t < len; ++t) {
        if (p[t] == lo || p[t] == hi) {
            int& pos = p[t] == lo ? pos_lo : pos_hi;
            if (pos != -1)
                throw std::invalid_argument(
                    "leaf cycle must traverse each retained connector once");
            pos = t;
        }
    }
    if (pos_lo == -1 || pos_hi == -1)
        throw std::invalid_argument("leaf cycle must traverse each retained connector once");
    auto between = [&](int from, int to) {
        std::vector<int> out;
        for (int t = (from + 1) % len; t != to; t = (t + 1) % len) out.push_back(p[t]);
        return out;
    };
    detail::Binding bind;
    bind[0] = between(pos_hi, pos_lo);  // the path ending at the lower retained id
    bind[2] = between(pos_lo, pos_hi);
    return detail::assemble_pattern(detail::kFinalRows[crossed ? 1 : 0].parent, bind, base);
}

namespace {

// Which child of w a cycle lives in: the straight child keeps connector
// role 0 of the freshly split gadget, the crossed child drops it.
Branch detect_branch(const LevelGraph& w, int i, const std::vector<int>& ids) {
    const int role0 = w.graph.connector_id(i - 1, 0);
    const bool straight = std::find(ids.begin(), ids.end(), role0) != ids.end();
    return straight ? Branch::straight : Branch::crossed;
}

}  // namespace

EulerCycle unsplit_step(const LevelGraph& w, int i, const EulerCycle& p, int bit) {
    if (i != w.level + 1)
        throw std::invalid_argument("un-split index must be " + std::to_string(w.level + 1));
    const Branch b = detect_branch(w, i, p.ids);
    auto [crossed_child, straight_child] = splitting::split(w);
    const LevelGraph& child = b == Branch::crossed ? crossed_child : straight_child;
    euler::canonical(core::as_multigraph(child.graph), p.ids);
    return euler::canonical(core::as_multigraph(w.graph),
                            unsplit_step_word(p.ids, w.graph.m, i, b, bit));
}

EulerCycle unsplit_final(const EulerCycle& p, const LevelGraph& w) {
    const int m = w.graph.m;
    if (w.level != m - 1)
        throw std::invalid_argument("the final un-split needs a level m-1 parent");
    const Branch b = detect_branch(w, m, p.ids);
    auto [crossed_child, straight_child] = splitting::split(w);
    const LevelGraph& leaf = b == Branch::crossed ? crossed_child : straight_child;
    euler::canonical(core::as_multigraph(leaf.graph), p.ids);
    return euler::canonical(core::as_multigraph(w.graph), unsplit_final_word(p.ids, m, b));
}

std::pair<LevelGraph, EulerCycle> lift(const TNet& n, const EulerCycle& p) {
    euler::canonical(core::as_multigraph(n), p.ids);
    const auto ports = core::node_ports(n);
    const int m = n.m;
    // Role taken between consecutive edges (e, f) at node head(e); the role
    // of the transition out of e1 decides the node's branch.
    std::vector<Branch> branch(m, Branch::straight);
    std::vector<int> word;
    word.reserve(4 * m);
    for (int j = 0; j < 2 * m; ++j) {
        const int e = p.ids[j];
        const int f = p.ids[(j + 1) % (2 * m)];
        const int a = n.head[e];
        const core::NodePorts& pt = ports[a];
        int role;
        if (e == pt.e1)
            role = f == pt.f1 ? 0 : 3;
        else
            role = f == pt.f1 ? 1 : 2;
        if (e == pt.e1) branch[a] = role == 0 ? Branch::straight : Branch::crossed;
        word.push_back(e);
        word.push_back(2 * m + 4 * a + role);
    }
    LevelGraph cur{core::quadruple(n), 0, {}};
    for (int a = 0; a < m; ++a) {
        auto [crossed_child, straight_child] = splitting::split(cur);
        cur = branch[a] == Branch::crossed ? std::move(crossed_child)
                                           : std::move(straight_child);
    }
    EulerCycle lc = euler::canonical(core::as_multigraph(cur.graph), word);
    return {std::move(cur), std::move(lc)};
}

EulerCycle project(const TNet& n, const EulerCycle& leaf_cycle) {
    std::vector<int> orig;
    for (int id : leaf_cycle.ids)
        if (id < 2 * n.m) orig.push_back(id);
    return euler::canonical(core::as_multigraph(n), orig);
}

EulerCycle expand_cycle(const TNet& n, const EulerCycle& p, const std::vector<int>& bits) {
    const int m = n.m;
    if (static_cast<int>(bits.size()) != m - 1)
        throw std::invalid_argument("expected " + std::to_string(m - 1) + " bits, got " +
                                    std::to_string(bits.size()));
    for (int b : bits)
        if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
    auto [leaf, lc] = lift(n, p);
    std::vector<int> cur =
        unsplit_final_word(lc.ids, m, static_cast<Branch>(leaf.lineage[m - 1]));
    for (int i = m - 1; i >= 1; --i)
        cur = unsplit_step_word(cur, m, i, static_cast<Branch>(leaf.lineage[i - 1]),
                                bits[i - 1]);
    const core::FuseResult fr = core::fuse(core::quadruple(n));
    std::vector<int> star;
    star.reserve(4 * m);
    for (int id : cur)
        if (id >= 2 * m) star.push_back(fr.edge_map[id]);
    return euler::canonical(core::as_multigraph(fr.net), star);
}

std::pair<EulerCycle, std::vector<int>> reduce_cycle(const TNet& n, const EulerCycle& c) {
    const int m = n.m;
    const TNet dn = core::double_net(n);
    euler::canonical(core::as_multigraph(dn), c.ids);
    const auto pairs = core::double_edge_pairs(n);
    const core::FuseResult fr = core::fuse(core::quadruple(n));
    std::vector<int> conn_of(4 * m, -1);
    for (int id = 0; id < static_cast<int>(fr.edge_map.size()); ++id)
        if (fr.edge_map[id] >= 0) conn_of[fr.edge_map[id]] = id;
    // Read c as the cycle of the quadruple it fuses from: each double-net
    // edge is a connector, followed by the original edge it runs into.
    std::vector<int> cur;
    cur.reserve(8 * m);
    for (int id : c.ids) {
        cur.push_back(conn_of[id]);
        cur.push_back(pairs[id].second);
    }
    std::vector<int> bits(m - 1, 0);
    for (int i = 1; i < m; ++i) {
        splitting::SplitStepWord r = splitting::split_step_word(cur, m, i);
        bits[i - 1] = r.bit;
        cur = std::move(r.child);
    }
    const splitting::SplitStepWord fin = splitting::split_step_word(cur, m, m);
    std::vector<int> orig;
    for (int id : fin.child)
        if (id < 2 * m) orig.push_back(id);
    return {euler::canonical(core::as_multigraph(n), orig), std::move(bits)};
}

}  // namespace tnet::bijection
