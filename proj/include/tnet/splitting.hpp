#ifndef TNET_SPLITTING_HPP
#define TNET_SPLITTING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tnet/core.hpp"
#include "tnet/euler.hpp"

namespace tnet::splitting {

using core::TNet;
using core::WGraph;
using euler::EulerCycle;

// Each split keeps one non-incident connector pair of the gadget and drops
// the other.  `crossed` keeps roles {1, 3} (the in1->out2 / in2->out1
// diagonal), `straight` keeps roles {0, 2}.  The kept pair is recolored
// black.
enum class Branch : std::uint8_t { crossed = 0, straight = 1 };

// The four connector edge ids of gadget i (1-based split index, node i-1),
// in role order; ids are strictly increasing.
struct GadgetQuad {
    int i;
    int in1_out1, in2_out1, in2_out2, in1_out2;
};
// Throws std::invalid_argument if the gadget is already split in w.
GadgetQuad gadget_quad(const WGraph& w, int i);

// A graph of the splitting cascade: the shared edge table plus how far down
// the cascade it sits and which branch was taken at each step.
struct LevelGraph {
    WGraph graph;
    int level = 0;                      // gadgets 0..level-1 are split
    std::vector<std::uint8_t> lineage;  // size == level; Branch values
};

// Both children of w (level i-1 -> level i), splitting gadget node i-1:
// first the crossed child, then the straight child.
std::pair<LevelGraph, LevelGraph> split(const LevelGraph& w);

// All 2^i graphs of every level 0..m.  Rejects m > 20 (the leaf population
// alone would exceed a million graphs).
std::vector<std::vector<LevelGraph>> build_levels(const TNet& n);

// The connected members of the leaf level; each carries exactly one
// Eulerian cycle and |delta| = |Theta(N)|.
std::vector<LevelGraph> build_delta(const TNet& n);

// For a leaf (monochrome) graph: every node has one present in- and
// out-edge, so the present edges decompose into disjoint cycles; true iff
// they form a single cycle.
bool leaf_connected(const WGraph& w);

// Classification of a cycle around a split gadget.  The two retained
// connectors are traversed twice each; cutting the cycle at those four
// anchor positions yields four paths.  `nested`/`sequential` are the
// non-alternating anchor patterns of the crossed/straight branch;
// `alternating` covers both branches' x,y,x,y pattern, where the a/b and
// c/d labels are fixed by the divergence tie-break: walk the two candidate
// paths in lockstep and at the first differing position the smaller edge id
// wins the earlier letter (identical paths set the equality flag).
enum class SegCase : std::uint8_t { nested, sequential, alternating };

struct Segments {
    SegCase seg_case;
    Branch branch;
    std::vector<int> a, b, c, d;
    bool a_equals_b = false;
    bool c_equals_d = false;
    // Alternating case: whether path c is the path cyclically following a
    // (true) or following b (false).  Meaningless when a_equals_b or
    // c_equals_d; fixed to true there.
    bool c_follows_a = true;

    // The cyclic traversal word the segments came from (anchors included).
    std::vector<int> reassemble(const WGraph& w, int i) const;
};

// Splits cycle p of child-level graph w at the four anchor traversals of
// gadget i's retained pair.  Throws if p is not a cycle of w or the anchors
// are missing.
Segments recognize(const EulerCycle& p, const LevelGraph& w, int i);

// The forward reduction at step i: rewrites the four blue gadget-i
// traversals of g (a cycle of parent w at level i-1) into the child
// connection pattern.  Returns which child the result lives in, the child
// cycle, and the bit that the un-split step needs to reproduce g.  At i = m
// the step is bitless and the bit is fixed to 0.
struct SplitStep {
    Branch branch;
    EulerCycle child;
    int bit;
};
SplitStep split_step(const EulerCycle& g, const LevelGraph& w, int i);

// Word-level workhorses shared with the bijection module; they only need
// the source order m, the split index and the branch, not a materialized
// graph.  All cycles are cyclic edge-id words; rotation is irrelevant.
struct SplitStepWord {
    Branch branch;
    std::vector<int> child;
    int bit;
};
Segments recognize_word(const std::vector<int>& p, int m, int i, Branch branch);
SplitStepWord split_step_word(const std::vector<int>& g, int m, int i);

}  // namespace tnet::splitting

#endif
