#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skewfree/rational.hpp"

namespace skewfree::parse {

/// c * x^i * y^j * t^k
struct RawTerm {
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;
  Rat c;
};

/// Expands a polynomial expression in x, y (and t when allow_t) into a list
/// of raw terms; duplicates are not combined. Grammar:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := number ['/' number] | var ['^' ['-'] number] | '(' expr ')' ['^' number]
///
/// t may only appear as the trailing factor(s) of a term and never inside
/// parentheses, so "x*t^2" means x t^2 in a skew ring.
std::vector<RawTerm> expand(std::string_view text, bool allow_t);

/// Splits on commas that are not nested in parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep);

std::string trim(std::string_view s);

}  // namespace skewfree::parse
