#include "tnet/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace tnet::core {

TNet validate_tnet(int m, const std::vector<std::pair<int, int>>& edges) {
    if (m < 1) throw std::invalid_argument("node count must be at least 1");
    if ((int)edges.size() != 2 * m)
        throw std::invalid_argument("expected " + std::to_string(2 * m) +
                                    " edges, got " + std::to_string(edges.size()));
    std::vector<int> outdeg(m, 0), indeg(m, 0);
    TNet n;
    n.m = m;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [t, h] = edges[k];
        if (t < 0 || t >= m || h < 0 || h >= m)
            throw std::invalid_argument("edge " + std::to_string(k) +
                                        " references a node outside 0.." + std::to_string(m - 1));
        ++outdeg[t];
        ++indeg[h];
        n.tail.push_back(t);
        n.head.push_back(h);
    }
    for (int a = 0; a < m; ++a) {
        if (outdeg[a] != 2)
            throw std::invalid_argument("node " + std::to_string(a) + " outdegree " +
                                        std::to_string(outdeg[a]) + ", want 2");
        if (indeg[a] != 2)
            throw std::invalid_argument("node " + std::to_string(a) + " indegree " +
                                        std::to_string(indeg[a]) + ", want 2");
    }
    return n;
}

TNet debruijn_graph(int n) {
    if (n < 2) throw std::invalid_argument("de Bruijn order must be at least 2");
    if (n > 24) throw std::invalid_argument("de Bruijn order too large to materialize");
    int m = 1 << (n - 1);
    TNet g;
    g.m = m;
    for (int w = 0; w < 2 * m; ++w) {
        g.tail.push_back(w >> 1);       // first n-1 bits of the edge word
        g.head.push_back(w & (m - 1));  // last n-1 bits
    }
    return g;
}

std::vector<std::pair<int, int>> double_edge_pairs(const TNet& n) {
    // Outgoing edges per node in increasing id order.
    std::vector<std::vector<int>> out(n.m);
    for (int e = 0; e < n.edge_count(); ++e) out[n.tail[e]].push_back(e);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(4 * n.m);
    for (int e = 0; e < n.edge_count(); ++e)
        for (int f : out[n.head[e]]) pairs.emplace_back(e, f);
    return pairs;
}

TNet double_net(const TNet& n) {
    TNet d;
    d.m = 2 * n.m;
    for (auto [e, f] : double_edge_pairs(n)) {
        d.tail.push_back(e);
        d.head.push_back(f);
    }
    return d;
}

std::vector<NodePorts> node_ports(const TNet& n) {
    std::vector<std::vector<int>> in(n.m), out(n.m);
    for (int e = 0; e < n.edge_count(); ++e) {
        out[n.tail[e]].push_back(e);
        in[n.head[e]].push_back(e);
    }
    std::vector<NodePorts> ports(n.m);
    for (int a = 0; a < n.m; ++a)
        ports[a] = NodePorts{in[a][0], in[a][1], out[a][0], out[a][1]};
    return ports;
}

bool WGraph::monochrome() const {
    for (const WEdge& e : edges)
        if (e.present && e.color == Color::blue) return false;
    return true;
}

int WGraph::multiplicity(int e) const {
    const WEdge& w = edges.at(e);
    if (!w.present) return 0;
    if (w.color == Color::blue) return 1;
    return monochrome() ? 1 : 2;
}

WGraph quadruple(const TNet& n) {
    auto ports = node_ports(n);
    WGraph w;
    w.m = n.m;
    w.edges.resize(6 * n.m);
    // Black edges: original edge e runs from the out-port of e at its tail
    // gadget to the in-port of e at its head gadget.  A self-loop stays
    // inside one gadget, out-port -> in-port.
    for (int e = 0; e < n.edge_count(); ++e) {
        int a = n.tail[e], b = n.head[e];
        WEdge& rec = w.edges[e];
        rec.tail = 4 * a + (e == ports[a].f1 ? 2 : 3);
        rec.head = 4 * b + (e == ports[b].e1 ? 0 : 1);
        rec.color = Color::black;
        rec.orig = e;
    }
    // Blue connectors, four per gadget; see WEdge for the role layout.
    constexpr int role_tail[4] = {0, 1, 1, 0};
    constexpr int role_head[4] = {2, 2, 3, 3};
    for (int a = 0; a < n.m; ++a)
        for (int r = 0; r < 4; ++r) {
            WEdge& rec = w.edges[w.connector_id(a, r)];
            rec.tail = 4 * a + role_tail[r];
            rec.head = 4 * a + role_head[r];
            rec.color = Color::blue;
            rec.gadget = a;
            rec.role = r;
        }
    return w;
}

FuseResult fuse(const WGraph& nh) {
    int m = nh.m;
    // Accept only an untouched quadruple: all edges present, originals
    // black, connectors blue.
    for (int e = 0; e < (int)nh.edges.size(); ++e) {
        const WEdge& rec = nh.edges[e];
        bool ok = rec.present &&
                  (e < 2 * m ? rec.color == Color::black && rec.orig == e
                             : rec.color == Color::blue && rec.gadget >= 0);
        if (!ok) throw std::invalid_argument("input is not an unsplit quadruple");
    }
    // Recover N from the black edges' provenance, then lay the connectors
    // onto the incidence pairs of the double.
    TNet n;
    n.m = m;
    n.tail.resize(2 * m);
    n.head.resize(2 * m);
    auto port_owner = [](int node) { return node / 4; };
    for (int e = 0; e < 2 * m; ++e) {
        n.tail[e] = port_owner(nh.edges[e].tail);
        n.head[e] = port_owner(nh.edges[e].head);
    }
    auto ports = node_ports(n);
    auto pairs = double_edge_pairs(n);
    FuseResult res;
    res.net = double_net(n);
    res.edge_map.assign(6 * m, -1);
    // The (e, f) incidence pairs of the double are distinct, so each
    // connector maps to exactly one fused edge id.
    std::vector<std::vector<std::pair<int, int>>> by_tail(2 * m);
    for (int id = 0; id < (int)pairs.size(); ++id)
        by_tail[pairs[id].first].emplace_back(pairs[id].second, id);
    for (int a = 0; a < m; ++a) {
        const NodePorts& p = ports[a];
        const int in_anchor[4] = {p.e1, p.e2, p.e2, p.e1};
        const int out_anchor[4] = {p.f1, p.f1, p.f2, p.f2};
        for (int r = 0; r < 4; ++r) {
            for (auto [f, fid] : by_tail[in_anchor[r]])
                if (f == out_anchor[r]) res.edge_map[nh.connector_id(a, r)] = fid;
        }
    }
    return res;
}

Multigraph as_multigraph(const TNet& n) {
    Multigraph g;
    g.nodes = n.m;
    g.tail = n.tail;
    g.head = n.head;
    g.mult.assign(n.edge_count(), 1);
    return g;
}

Multigraph as_multigraph(const WGraph& w) {
    Multigraph g;
    g.nodes = w.node_count();
    int ne = (int)w.edges.size();
    g.tail.resize(ne);
    g.head.resize(ne);
    g.mult.resize(ne);
    for (int e = 0; e < ne; ++e) {
        g.tail[e] = w.edges[e].tail;
        g.head[e] = w.edges[e].head;
        g.mult[e] = w.multiplicity(e);
    }
    return g;
}

}  // namespace tnet::core
