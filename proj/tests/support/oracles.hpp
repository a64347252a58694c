#pragma once

// Closed-form and brute-force counts used as independent references.

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>

#include "skewfree/autom.hpp"

namespace oracle {

/// Monomials X^a Y^b T^c with a + c + ceil(b/2) <= n.
inline std::size_t elementary_lattice(int n) {
  std::size_t count = 0;
  for (int b = 0; (b + 1) / 2 <= n; ++b) {
    const int rest = n - (b + 1) / 2;
    count += static_cast<std::size_t>((rest + 1) * (rest + 2) / 2);
  }
  return count;
}

/// Degree-n words in t, xt, yt under x -> x, y -> xy. The letter at position k
/// contributes (0,0), (1,0) or (k,1); with j letters yt the x-exponent fills
/// the interval [j(j-1)/2, (n-j) + j(2n-j-1)/2], giving (j+1)(n-j)+1 values.
inline std::size_t heisenberg_graded(int n) {
  std::size_t s = 0;
  for (int j = 0; j <= n; ++j) s += static_cast<std::size_t>((j + 1) * (n - j) + 1);
  return s;
}

inline std::size_t heisenberg_bruteforce(int n) {
  std::set<std::pair<int, int>> seen;
  int total = 1;
  for (int k = 0; k < n; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    int i = 0, j = 0, c = code;
    for (int k = 0; k < n; ++k, c /= 3) {
      if (c % 3 == 1) i += 1;
      if (c % 3 == 2) i += k, j += 1;
    }
    seen.insert({i, j});
  }
  return seen.size();
}

/// Exponents of x_0 sigma(x_1) ... sigma^(n-1)(x_(n-1)), x_k in {x, y}, for
/// sigma(x^i y^j) = x^(ai+cj) y^(bi+dj), by direct enumeration of all words.
inline std::set<std::pair<std::int64_t, std::int64_t>> word_exponents(const skewfree::IntMat2& m,
                                                                      int n) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t si = 0, sj = 0;
    for (int k = 0; k < n; ++k) {
      std::int64_t i = (mask >> (n - 1 - k)) & 1 ? 0 : 1, j = 1 - i;
      for (int r = 0; r < k; ++r) {
        const std::int64_t ni = m.a * i + m.c * j, nj = m.b * i + m.d * j;
        i = ni;
        j = nj;
      }
      si += i;
      sj += j;
    }
    out.insert({si, sj});
  }
  return out;
}

inline std::size_t binom3(int n) { return static_cast<std::size_t>((n + 3) * (n + 2) * (n + 1) / 6); }

}  // namespace oracle
