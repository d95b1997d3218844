#pragma once

#include <string>
#include <string_view>

#include "sccd/design.hpp"

namespace sccd {

/// Reads the text format
///
///   sccd <linear|circular> v=<int> k=<int> b=<int>
///   # optional comment lines
///   <b lines of k labels separated by single spaces>
///
/// Throws Error{syntax_error} for malformed text and
/// Error{invariant_violation} when the blocks break a design invariant; both
/// carry the 1-based line number.
Design parse_design(std::string_view text);

/// Canonical text: single spaces, label order within a block as stored,
/// trailing newline. An optional comment goes on its own `#` line.
std::string serialize_design(const Design& d, std::string_view comment = {});

}  // namespace sccd
