#pragma once

// Data-parallel inner loops. Every kernel in `parallel` has a plain serial
// counterpart in `serial` that the tests and bench/ compare it against.

#include <cstddef>
#include <span>
#include <vector>

#include "skewfree/poly.hpp"

namespace skewfree::kernels {

namespace serial {

/// Schoolbook product over Q, accumulating every term pair in a hash map.
Poly mul(const Poly& f, const Poly& g);

/// For each prefix p (in order) emits p*fa then p*fb.
std::vector<Poly> expand_level(std::span<const Poly> prefixes, const Poly& fa, const Poly& fb);

/// |{ c_0 + ... + c_{n-1} : c_k in choices[k] }| by enumerating all 2^n
/// choice sequences into an ordered set.
std::size_t sumset_bruteforce(std::span<const std::pair<ExpVec, ExpVec>> choices);

}  // namespace serial

namespace parallel {

/// Product computed on integer-scaled coefficients, one output x-row per
/// task, rows accumulated in mpz buffers.
Poly mul(const Poly& f, const Poly& g);

std::vector<Poly> expand_level(std::span<const Poly> prefixes, const Poly& fa, const Poly& fb);

/// (S + va) union (S + vb) for a lexicographically sorted, duplicate-free S.
/// Throws ResourceCapExceeded on 64-bit exponent overflow.
std::vector<ExpVec> sumset_step(std::span<const ExpVec> sorted, ExpVec va, ExpVec vb);

}  // namespace parallel

/// Lexicographic (i, then j) order used by the sumset kernels.
inline bool lex_less(const ExpVec& a, const ExpVec& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

}  // namespace skewfree::kernels
