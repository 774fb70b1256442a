#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "powerful/subset.hpp"

namespace powerful {

// Set-system text format:
//   n=<k>
//   # comment
//   0101        one member per line, character j = membership of element j
//   0110 x2     optional multiplicity suffix for multisets
// The all-zeros line is ∅. For k = 0 a member line is just "x<m>".

/// Parses a (multi)set; repeated lines accumulate multiplicity.
/// Throws ParseError carrying the offending line number.
Indicator read_system(std::istream& in);
Indicator read_system_string(const std::string& text);

/// Writes in the same format, members in increasing mask order.
/// `labels`, when given, records the external labels of the surviving ground
/// elements as a comment (used after minors).
void write_system(std::ostream& out, const Indicator& f,
                  const std::vector<int>* labels = nullptr);
std::string write_system_string(const Indicator& f,
                                const std::vector<int>* labels = nullptr);

}  // namespace powerful
