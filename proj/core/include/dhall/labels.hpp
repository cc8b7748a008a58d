#pragma once

#include "dhall/derived_category.hpp"
#include "dhall/heart.hpp"

#include <string>
#include <string_view>

namespace dhall {

// Heart classes print as "+"-joined "name^mult" (mult 1 omitted), the zero
// object as "0". Graded objects print as "+"-joined "name^mult[n]" with
// degrees descending, e.g. "S1^2[1]+X12[0]".
std::string format_iso(const Heart& heart, const IsoClass& x);
std::string format_graded(const Heart& heart, const GradedObject& x);

// Inverse of the formatters. A graded term without "[n]" sits in degree 0.
// Throws ParseError naming the offending term.
IsoClass parse_iso(const Heart& heart, std::string_view text);
GradedObject parse_graded(const Heart& heart, std::string_view text);

}  // namespace dhall
