#ifndef TNET_CORE_HPP
#define TNET_CORE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tnet::core {

// A T-net: directed multigraph on nodes 0..m-1 where every node has
// indegree 2 and outdegree 2.  Edges carry ids 0..2m-1; self-loops and
// parallel edges are allowed.
struct TNet {
    int m = 0;
    std::vector<int> tail;  // edge id -> tail node
    std::vector<int> head;  // edge id -> head node

    int edge_count() const { return 2 * m; }
    bool operator==(const TNet&) const = default;
};

// Validates node count, edge count, id range and the 2-in/2-out degree
// profile.  Throws std::invalid_argument naming the offending node/edge.
TNet validate_tnet(int m, const std::vector<std::pair<int, int>>& edges);

// Binary de Bruijn graph of order n (n >= 2): nodes are the (n-1)-bit words
// (node id = integer value), one edge per n-bit word w running from the
// word's first n-1 bits to its last n-1 bits, edge id = integer value of w.
TNet debruijn_graph(int n);

// The doubled net: line graph of N.  Nodes are the edges of N (node id =
// edge id); one edge per incidence head(e) = tail(f), with result edge ids
// assigned in lexicographic (e, f) order.  2m nodes, 4m edges.
TNet double_net(const TNet& n);

// Edge ids of the incidence pairs of double_net, in id order: entry k is the
// (e, f) pair that became edge k of the double.
std::vector<std::pair<int, int>> double_edge_pairs(const TNet& n);

// Per-node incident edge ids: incoming e1 < e2, outgoing f1 < f2.
struct NodePorts {
    int e1, e2, f1, f2;
};
std::vector<NodePorts> node_ports(const TNet& n);

enum class Color : std::uint8_t { blue, black };

// One edge of a quadruple-style graph.  Provenance: orig >= 0 marks the
// original N edge with that id; otherwise the edge is the gadget connector
// `role` at node `gadget`.  Roles at a node with incoming e1 < e2 and
// outgoing f1 < f2:
//   0: in-port(e1) -> out-port(f1)
//   1: in-port(e2) -> out-port(f1)
//   2: in-port(e2) -> out-port(f2)
//   3: in-port(e1) -> out-port(f2)
// Removed edges stay in the table with present = false so that edge ids are
// stable across the whole splitting cascade.
struct WEdge {
    int tail = -1, head = -1;
    Color color = Color::black;
    bool present = true;
    int orig = -1;
    int gadget = -1;
    int role = -1;
};

// The quadruple of a T-net and all graphs derived from it by splitting.
// Gadget nodes are numbered 4a+0 (in-port e1), 4a+1 (in-port e2),
// 4a+2 (out-port f1), 4a+3 (out-port f2) for source node a.  Edge ids:
// 0..2m-1 are the original edges of N (black), 2m+4a+role are connectors.
struct WGraph {
    int m = 0;
    std::vector<WEdge> edges;  // size 6m

    int node_count() const { return 4 * m; }
    int connector_id(int a, int role) const { return 2 * m + 4 * a + role; }
    bool monochrome() const;
    // Traversal multiplicity of an edge: 0 if removed, 1 for blue, 2 for
    // black — except in a monochrome graph, where every present edge is 1.
    int multiplicity(int e) const;
    bool operator==(const WGraph&) const = default;
};

// Replaces every node of N by the four-port gadget and recolors the original
// edges black; connectors are blue.  4m nodes, 2m black + 4m blue edges.
WGraph quadruple(const TNet& n);

// Contracts the black edges of a quadruple: the contracted edge e becomes
// node e, blue connectors become the 4m edges.  The result equals
// double_net(N) exactly (same ids); edge_map[w-edge id] gives the fused edge
// id for connectors and -1 for black edges.
struct FuseResult {
    TNet net;
    std::vector<int> edge_map;
};
FuseResult fuse(const WGraph& nh);

// Flattened multigraph view used by enumeration and counting: per edge id a
// tail, head and traversal multiplicity (0 = absent).
struct Multigraph {
    int nodes = 0;
    std::vector<int> tail, head, mult;
};
Multigraph as_multigraph(const TNet& n);
Multigraph as_multigraph(const WGraph& w);

}  // namespace tnet::core

#endif
