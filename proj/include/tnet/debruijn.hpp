#ifndef TNET_DEBRUIJN_HPP
#define TNET_DEBRUIJN_HPP

#include <string>
#include <utility>

#include "tnet/euler.hpp"

namespace tnet::debruijn {

using euler::EulerCycle;

// Sequences are ASCII strings over '0'/'1', most significant (first) symbol
// leftmost.  A de Bruijn sequence of order n has length 2^n and contains
// every n-bit word exactly once among its cyclic windows; the base form
// additionally starts with n zeros (each sequence has exactly one rotation
// in base form, since the all-zero window is unique).

bool is_debruijn(const std::string& b, int n);
bool is_base_form(const std::string& b, int n);

// The first symbol of each edge word of c (a cycle of debruijn_graph(n)) in
// canonical cycle order.  Canonical cycles start at edge 0 = the all-zero
// word, so the output is in base form.
std::string cycle_to_seq(int n, const EulerCycle& c);

// Inverse: edge ids are the consecutive cyclic n-windows of b (base form).
EulerCycle seq_to_cycle(int n, const std::string& b);

// The recursive unranking of base-form sequences by bit strings of length
// 2^(n-1) - n: order 2 is fixed as the empty string -> 0011; order n splits
// s into the prefix driving the order n-1 recursion and the 2^(n-2) - 1
// suffix bits driving expand_cycle on debruijn_graph(n-1), whose double is
// debruijn_graph(n) edge-for-edge.
std::string unrank(int n, const std::string& s);

// Inverse of unrank: unrank(n, rank(n, b)) == b for base-form b.
std::string rank(int n, const std::string& b);

// Rotation handling for free-form de Bruijn sequences: returns the unique r
// in 0..2^n-1 such that rotating b left by r gives base form, plus that
// base form.  rotate_from_base inverts (rotate right by r).
std::pair<int, std::string> rotate_to_base(int n, const std::string& b);
std::string rotate_from_base(int n, int r, const std::string& b0);

// Pair codec: each free-form sequence becomes n big-endian rotation bits
// followed by its rank bits (2^(n-1) bits total per sequence); the
// concatenation has length 2^n.  stanley_decode inverts exactly.
std::string stanley_encode(int n, const std::string& b1, const std::string& b2);
std::pair<std::string, std::string> stanley_decode(int n, const std::string& bits);

}  // namespace tnet::debruijn

#endif
