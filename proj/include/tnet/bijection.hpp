#ifndef TNET_BIJECTION_HPP
#define TNET_BIJECTION_HPP

#include <utility>
#include <vector>

#include "tnet/core.hpp"
#include "tnet/euler.hpp"
#include "tnet/splitting.hpp"

namespace tnet::bijection {

using core::TNet;
using core::WGraph;
using euler::EulerCycle;
using splitting::Branch;
using splitting::LevelGraph;

// The un-split step: given a cycle p of one child of w (level i-1, gadget i
// unsplit in w) and one bit, produce a cycle of w.  Which child p belongs
// to is read off p itself (the straight child traverses connector role 0,
// the crossed child does not).  Inverse of splitting::split_step.
EulerCycle unsplit_step(const LevelGraph& w, int i, const EulerCycle& p, int bit);

// The bitless final un-split (step m): p is the unique cycle of a connected
// leaf; the result is the unique cycle of the level-(m-1) parent w.  The
// two reinstated connectors double the two inter-anchor paths.
EulerCycle unsplit_final(const EulerCycle& p, const LevelGraph& w);

// Interleaves the gadget connector between every consecutive edge pair of a
// cycle of N, producing the connected leaf the cycle selects together with
// its unique Eulerian cycle (length 4m, alternating original/connector).
std::pair<LevelGraph, EulerCycle> lift(const TNet& n, const EulerCycle& p);

// Keeps exactly the original-edge traversals of a leaf cycle: the inverse
// of lift's interleaving.
EulerCycle project(const TNet& n, const EulerCycle& leaf_cycle);

// The doubling bijection Theta(N) x {0,1}^(m-1) -> Theta(double(N)):
// lift p to its leaf, un-split the final step, then consume bits[m-2]..
// bits[0] going back up, and read the resulting quadruple cycle as a cycle
// of the double (drop black traversals, rename connectors through fuse).
EulerCycle expand_cycle(const TNet& n, const EulerCycle& p, const std::vector<int>& bits);

// Inverse of expand_cycle: returns (p, bits) with expand_cycle(n, p, bits)
// equal to the input cycle of double(N).
std::pair<EulerCycle, std::vector<int>> reduce_cycle(const TNet& n, const EulerCycle& c);

// Word-level forms used by the pipelines and the splitting verification.
std::vector<int> unsplit_step_word(const std::vector<int>& p, int m, int i, Branch branch,
                                   int bit);
std::vector<int> unsplit_final_word(const std::vector<int>& p, int m, Branch branch);

}  // namespace tnet::bijection

#endif
