#ifndef TNET_EULER_HPP
#define TNET_EULER_HPP

#include <gmpxx.h>

#include <vector>

#include "tnet/core.hpp"

namespace tnet::euler {

using core::Multigraph;

// An Eulerian cycle stored as its canonical rotation: the lexicographically
// smallest rotation of the cyclic edge-id sequence.
struct EulerCycle {
    std::vector<int> ids;
    auto operator<=>(const EulerCycle&) const = default;
};

// Index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation(const std::vector<int>& seq);

// Validates that `walk` is a closed walk of g traversing every edge
// according to its multiplicity, then returns the canonical rotation.
// Throws std::invalid_argument on broken linkage or wrong multiplicity.
EulerCycle canonical(const Multigraph& g, const std::vector<int>& walk);

// Exhaustive backtracking enumeration of the Eulerian cycles of g, one per
// rotation class.  The walk starts at the smallest edge id with nonzero
// multiplicity; results are canonicalized and deduplicated, so the start
// choice and the branch order (flip with reverse_order) are unobservable.
// Returns a sorted vector.  Graphs without an Eulerian cycle yield {}.
std::vector<EulerCycle> enumerate_cycles(const Multigraph& g, bool reverse_order = false);

// Number of spanning arborescences oriented toward `root`: determinant of
// the out-degree Laplacian with the root row and column removed, by exact
// fraction-free (Bareiss) elimination over big integers.
mpz_class arborescence_count(const Multigraph& g, int root);
mpz_class arborescence_count(const core::TNet& n, int root);

// Eulerian-cycle count of a T-net up to rotation:
// arborescence_count(N, 0) * prod_v (outdeg(v) - 1)!.
mpz_class count_cycles_best(const core::TNet& n);

// Eulerian-cycle count for a multigraph with multiplicities 1 and 2 under
// the same rotation convention as enumerate_cycles.  Requires at least one
// multiplicity-1 edge (anchoring the count at such an edge makes the
// rotation bookkeeping exact); parallel traversals of a doubled edge are
// indistinguishable, which contributes the 1/2^(#doubled) factor.
mpz_class count_cycles_best_multi(const Multigraph& g);

}  // namespace tnet::euler

#endif
