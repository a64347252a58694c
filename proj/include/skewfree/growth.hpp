#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skewfree/skew.hpp"

namespace skewfree {

struct GrowthSeries {
  std::vector<std::size_t> dims;  // n = 0..N
  std::string basis_spec;         // the generating space, verbatim
  bool graded = false;            // dims of V_n rather than of W^n
};

struct GrowthOptions {
  std::size_t max_basis = std::size_t{1} << 20;
};

/// dim W^n for W = span(1, gens), n = 0..N.
GrowthSeries filtration_dims(std::span<const SkewPoly> gens, int N, const GrowthOptions& opts = {});

/// dim V_n where V_n t^(n d) is spanned by the products of n generators; all
/// generators must be homogeneous of one t-degree d >= 1.
GrowthSeries graded_dims(std::span<const SkewPoly> gens, int N, const GrowthOptions& opts = {});

enum class GrowthKind { Polynomial, Exponential };

std::string growth_kind_name(GrowthKind k);

/// Desk-scale window fit; a heuristic, not a theorem.
struct GkEstimate {
  GrowthKind kind = GrowthKind::Polynomial;
  long degree = 0;      // rounded slope (POLYNOMIAL only)
  double slope = 0;     // least-squares slope of log f(n) against log n
  double ratio = 0;     // (f(N) / f(N - q))^(1/q) over the top quartile
  std::size_t window_lo = 0, window_hi = 0;
  double rss_polynomial = 0;   // residual of log f against log n
  double rss_exponential = 0;  // residual of log f against n
  bool cumulative = false;     // fitted on partial sums of a graded series
};

/// f(n) is the series itself for filtrations and its partial sums for graded
/// series. EXPONENTIAL needs f(n) >= 1.2^n on the top quartile, a window
/// growth ratio of at least 1.2, and a geometric fit over n in [N/2, N] that
/// beats the power-law fit; otherwise the power-law slope over that window is
/// rounded to the degree. Needs at least 8 entries.
GkEstimate gk_estimate(const GrowthSeries& s);

}  // namespace skewfree
