#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewfree/linalg.hpp"
#include "skewfree/relation.hpp"

namespace skewfree {

enum class DimRoute {
  Auto,              // monomial sumset when sigma and both generators are monomial
  RankOracle,        // expand all words and take the exact rank
  MonomialFastPath,  // exponent sumsets; throws DomainError on non-monomial data
};

/// 2^20, or SKEWFREE_MAX_ENTRIES when set.
std::size_t default_max_entries();

struct FreenessOptions {
  int max_depth_generic = 12;
  int max_depth_monomial = 20;
  /// Refuse a degree whose expanded words hold more terms than this.
  std::size_t max_entries = default_max_entries();
  DimRoute route = DimRoute::Auto;
  linalg::RankMethod rank_method = linalg::RankMethod::Auto;
  /// Horizon for the degree-doubling check inside check_free; 0 means the depth reached.
  int doubling_horizon = 0;
};

struct Generator {
  std::string name;
  Poly poly;

  static Generator of(Poly p) { return {letter_name_for(p), std::move(p)}; }
};

/// dim of V sigma^p(V) ... sigma^((n-1)p)(V), V = ka + kb, for n = 1..depth.
/// Throws ResourceCapExceeded past the caps, DomainError for dependent a, b.
std::vector<std::size_t> component_dimensions(const Automorphism& sigma, const Poly& a,
                                              const Poly& b, int depth, int t_power = 1,
                                              const FreenessOptions& opts = {});
std::size_t component_dimension(const Automorphism& sigma, const Poly& a, const Poly& b, int n,
                                const FreenessOptions& opts = {});

/// A relation among the 2^n words of degree n, or none when they are independent.
/// The witness is the dependency of the first word (lexicographically, a < b)
/// lying in the span of its predecessors, scaled to coprime integers with a
/// positive leading coefficient.
std::optional<Relation> find_relation(const Automorphism& sigma, const Generator& a,
                                      const Generator& b, int n, int t_power = 1,
                                      const FreenessOptions& opts = {});
std::optional<Relation> find_relation(const Automorphism& sigma, const Poly& a, const Poly& b,
                                      int n, const FreenessOptions& opts = {});

struct DoublingResult {
  bool certified = false;
  int horizon = 0;
  std::optional<int> failed_at;       // first m violating the inequality
  std::vector<std::int64_t> degrees;  // deg_w sigma^m(g), m = 0.. as far as computed
  WeightedDegree weights;
  int n_min = 1;  // smallest n with 2^n >= 2
};

/// Checks deg_w sigma^(m+1)(g) >= 2 deg_w sigma^m(g) > 0 for m < horizon.
DoublingResult degree_doubling_certificate(const Automorphism& sigma, const Poly& g,
                                           WeightedDegree w, int horizon);

enum class Verdict { FreeUpToDepth, NotFree, Inconclusive };
enum class CertificateKind { None, Valuation, DegreeDoubling, RankOnly };

std::string verdict_name(Verdict v);
std::string certificate_name(CertificateKind c);

struct FreenessReport {
  std::string sigma;
  Generator a, b;
  int t_power = 1;
  int depth = 1;
  std::vector<std::size_t> dims;      // n = 1..(depth reached)
  std::vector<std::size_t> expected;  // 2^n, n = 1..depth
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Relation> witness;
  std::optional<int> deficient_degree;
  CertificateKind certificate = CertificateKind::None;
  bool unbounded = false;  // certificate covers every degree
  std::string certificate_detail;
  std::string route;  // "monomial-sumset" or "rank"
  std::vector<std::string> notes;
};

FreenessReport check_free(const Automorphism& sigma, const Generator& a, const Generator& b,
                          int t_power, int depth, const FreenessOptions& opts = {});

}  // namespace skewfree
