#pragma once

#include "wpl/numeric.hpp"
#include "wpl/picard.hpp"

#include <string>
#include <vector>

namespace wpl {

/// Parse a degree expression into a normal-form class.
///
/// Grammar (whitespace ignored):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := integer ['*'] symbol | symbol | integer
///   symbol := 'c' | 'x' digits        (1 <= index <= n)
/// A bare integer term means that multiple of c. Throws ParseError with the
/// byte offset of the offending character, or DegreeIndexError for an x-index
/// outside 1..n.
PicElt parse_degree(const std::string& text, const WplData& w);

/// Comma-separated positive integers, e.g. "2,3,4".
std::vector<Int> parse_weight_list(const std::string& text);

/// Comma-separated exact rationals, e.g. "2,-1/3".
std::vector<Rat> parse_rational_list(const std::string& text);

}  // namespace wpl
