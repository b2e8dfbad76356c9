#pragma once

#include "aklab/family.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace aklab {

// Family file format:
//   line 1:  "n <int>"  (ground set size)
//   then one set per line: strictly ascending space-separated integers,
//   "." for the empty set. Lines starting with "#" and blank lines are
//   skipped everywhere. Duplicate sets across lines are merged.
// Errors carry the 1-based physical line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& message, int line_)
        : std::runtime_error(message), line(line_) {}
};

SetFamily parse_family(std::istream& in);
SetFamily parse_family_text(const std::string& text);

// Canonical text: header line, then one line per set in lex_less order,
// the empty set as ".". format(parse(x)) is a fixpoint.
std::string format_family(const SetFamily& family);

// Single set from "2 4 6" style text (same element rules as family lines).
Subset parse_subset_text(const std::string& text, int n);
std::string format_subset(const Subset& s);

}
