#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skewfree/poly.hpp"

namespace skewfree::linalg {

struct SparseRow {
  std::vector<std::size_t> cols;  // strictly increasing
  std::vector<BigInt> vals;       // non-zero
};

/// Integer matrix whose rows are polynomials expanded over the union of
/// their supports (columns in canonical monomial order). Each row is scaled
/// by the lcm of its denominators, which does not change the row space rank.
struct IntMatrix {
  std::size_t ncols = 0;
  std::vector<SparseRow> rows;

  std::size_t nonzeros() const;
};

IntMatrix assemble(std::span<const Poly> polys);

/// Fraction-free (Bareiss) elimination; exact.
std::size_t rank_bareiss(IntMatrix m);

/// Rank modulo a prime. Never exceeds the rank over Q, so a full row rank
/// mod p certifies full row rank over Q.
std::size_t rank_modp(const IntMatrix& m, std::uint64_t prime = (std::uint64_t{1} << 61) - 1);

enum class RankMethod {
  Auto,     // rank_modp as a certificate for full row rank, else Bareiss
  Bareiss,
};

std::size_t rank(const IntMatrix& m, RankMethod method = RankMethod::Auto);

/// Gaussian elimination over Q directly on the polynomials; test reference.
std::size_t rank_rational(std::span<const Poly> polys);

/// First k such that polys[k] is in the span of polys[0..k-1], with the
/// unique coefficients c_0..c_k (c_k = 1) of sum c_i polys[i] = 0.
struct Dependency {
  std::size_t index = 0;
  std::vector<Rat> coeffs;
};

std::optional<Dependency> first_dependency(std::span<const Poly> polys);

}  // namespace skewfree::linalg
