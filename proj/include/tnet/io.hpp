#ifndef TNET_IO_HPP
#define TNET_IO_HPP

#include <iosfwd>
#include <string>

#include "tnet/core.hpp"
#include "tnet/euler.hpp"

namespace tnet::io {

using core::TNet;
using euler::EulerCycle;

// T-net text: first data line holds m, the next 2m data lines "tail head"
// (edge ids follow file order).  Lines whose first non-blank character is
// '#' and blank lines are skipped; trailing whitespace is ignored.
// Throws std::invalid_argument with a one-line diagnostic.
TNet parse_tnet(std::istream& in);
TNet parse_tnet(const std::string& text);
TNet load_tnet(const std::string& path);
std::string format_tnet(const TNet& n);

// Cycle text: space-separated decimal edge ids on one line (canonical
// rotation when produced here).
EulerCycle parse_cycle(const std::string& line);
std::string format_cycle(const EulerCycle& c);

}  // namespace tnet::io

#endif
