#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewfree/skew.hpp"

namespace skewfree {

/// Linear combination of words in the generators, read as the claim that it
/// expands to zero in R[t; sigma].
struct Relation {
  AutomPtr sigma;
  std::vector<std::pair<Word, Rat>> terms;

  /// "(xt)^2(yt) - (yt)^2(xt)"
  std::string str() const;
};

/// Scales coefficients to coprime integers with a positive first coefficient
/// and drops zero terms. Term order is kept.
Relation normalize(Relation r);

/// Accepts "w1 - w2", "2(xt)(yt) + ...", or "lhs = rhs" (read as lhs - rhs).
Relation parse_relation(const AutomPtr& sigma, std::string_view text,
                        std::span<const Letter> alphabet);

/// True iff the relation has at least two non-zero terms of one t-degree and
/// sum coeff * expand_word(word) is exactly zero.
bool verify_relation(const Relation& r);

/// The word w_0 w_1 ... w_(n-1) with w_k = a when bit (n-1-k) of index is 0.
/// Index order is the lexicographic order of words with a < b.
Word word_from_index(std::size_t index, int n, const Letter& a, const Letter& b);

}  // namespace skewfree
