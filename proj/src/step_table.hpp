#ifndef TNET_STEP_TABLE_HPP
#define TNET_STEP_TABLE_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tnet/splitting.hpp"

// The normative connection table driving the split/un-split steps.  Pattern
// strings alternate path letters 'A'..'D' with connector roles '0'..'3'
// (see core::WEdge for the role layout).  A child pattern mentions only the
// two retained roles (each twice, once each in the final rows); a parent
// pattern mentions all four roles once.  Repeated letters denote the same
// path traversed twice.
namespace tnet::detail {

struct StepRow {
    splitting::Branch branch;      // which child the row's `child` lives in
    std::string_view child;
    std::string_view parent[2];    // parent pattern, indexed by bit
};

// Rows 0..1: the non-alternating anchor patterns (crossed, straight).
// Rows 2..5: the straight branch's alternating patterns — the two path
// arrangements, then the collapsed a = b and c = d forms.
// Rows 6..9: the same four for the crossed branch (role swap 0<->1, 2<->3).
inline constexpr StepRow kStepRows[10] = {
    {splitting::Branch::crossed, "A3D1C1B3", {"A0B3D1C2", "A0C1B3D2"}},
    {splitting::Branch::straight, "A0B0C2D2", {"A0C2D1B3", "A3D1B0C2"}},
    {splitting::Branch::straight, "A0C2B0D2", {"A0C1D2B3", "A3B0C1D2"}},
    {splitting::Branch::straight, "A0D2B0C2", {"A0D1C2B3", "A3B0D1C2"}},
    {splitting::Branch::straight, "A0C2A0D2", {"A0C1D2A3", "A0D1C2A3"}},
    {splitting::Branch::straight, "A0C2B0C2", {"A0C1C2B3", "A3B0C1C2"}},
    {splitting::Branch::crossed, "A1C3B1D3", {"A1C0D3B2", "A2B1C0D3"}},
    {splitting::Branch::crossed, "A1D3B1C3", {"A1D0C3B2", "A2B1D0C3"}},
    {splitting::Branch::crossed, "A1C3A1D3", {"A1C0D3A2", "A1D0C3A2"}},
    {splitting::Branch::crossed, "A1C3B1C3", {"A1C0C3B2", "A2B1C0C3"}},
};

// The bitless final step: the child is a leaf whose retained connectors are
// traversed once each, and both inter-anchor paths double in the parent.
struct FinalRow {
    splitting::Branch branch;
    std::string_view child;
    std::string_view parent;
};

inline constexpr FinalRow kFinalRows[2] = {
    {splitting::Branch::straight, "A0C2", "A0C1C2A3"},
    {splitting::Branch::crossed, "A1C3", "A1C0C3A2"},
};

// Paths bound to the letters A..D; unused letters stay empty.
using Binding = std::array<std::vector<int>, 4>;

// Expands a pattern: letters substitute their bound path, digits the
// connector id base + role.
std::vector<int> assemble_pattern(std::string_view pattern, const Binding& bind, int base);

// Tries to read `word` as `pattern` around the connectors base..base+3: cuts
// the word at the pattern's connector roles and binds the inter-anchor
// paths to the letters (repeated letters must bind equal paths).  Returns
// every consistent binding (anchor-rotation choices may allow several).
std::vector<Binding> match_pattern(const std::vector<int>& word, std::string_view pattern,
                                   int base);

// The kStepRows row a recognized Segments value selects.
int step_row_index(const splitting::Segments& seg);

}  // namespace tnet::detail

#endif
