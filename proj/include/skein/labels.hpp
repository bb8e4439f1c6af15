#pragma once

#include <string_view>

#include "skein/element.hpp"

// Textual labels for the CLI.
//   torus:  "(r,s)", optionally tagged "(r,s)_T", or "1"
//   t11:    factors joined by '*': "T(n,1)", "(r,s)", "U", "U^k", or "1"
//   s04:    factors joined by '*': "S(n,1)", "(r,s)", "g1".."g4" with "^k", or "1"
// A flavor letter in front of a slope must match the basis (see flavor_tag).
// Malformed input raises ParseError with the offending column.
namespace skein {

Label<0> parse_torus_label(std::string_view text, const PolySeq& flavor);
Label<1> parse_ptorus_label(std::string_view text, const PolySeq& flavor);
Label<4> parse_s04_label(std::string_view text, const PolySeq& flavor);

}  // namespace skein
