#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewfree/autom.hpp"
#include "skewfree/quad.hpp"
#include "skewfree/relation.hpp"

namespace skewfree {

/// rho = 1 splits into matrices of finite order and the parabolic ones
/// (trace +-2, det 1, M != +-I), which have rho = 1 but infinite order.
enum class Branch { FiniteOrder, Parabolic, Golden, Large };

std::string branch_name(Branch b);

struct CatalogEntry {
  std::string clause;  // e.g. "trace 1, det -1"
  Relation relation;
};

struct ClassificationReport {
  IntMat2 matrix;
  std::int64_t trace = 0;
  std::int64_t det = 0;
  QuadExt rho;
  Branch branch = Branch::FiniteOrder;
  std::optional<int> order;  // minimal k <= 12 with M^k = I
  std::vector<CatalogEntry> catalog;
  std::optional<int> free_generators_hint;  // minimal p with rho(M^p) >= 2
  std::optional<int> even_power_hint;       // minimal even p with rho(M^p) >= 2
};

/// Spectral radius from the characteristic polynomial z^2 - Tr z + det.
QuadExt spectral_radius(const IntMat2& m);

/// Throws DomainError unless det = +-1.
ClassificationReport classify(const IntMat2& m);

/// Minimal k in 1..12 with M^k = I.
std::optional<int> finite_order(const IntMat2& m);

/// nu(x^i y^j) = i*w_x + j*w_y with (w_x, w_y) = (1, alpha) an exact
/// beta-eigenvector of M: a + b*alpha = beta, c + d*alpha = alpha*beta.
struct Valuation {
  QuadExt w_x;
  QuadExt w_y;
  QuadExt beta;

  QuadExt value(ExpVec e) const;
  /// Minimum over the support; throws DomainError on zero.
  QuadExt value(const Poly& f) const;
};

/// Needs real eigenvalues of distinct absolute value and b != 0.
Valuation eigen_data(const IntMat2& m);

/// The sumset {sum_k c_k : c_k in {A^(k p) u, A^(k p) v}, k < n} with A = M^T,
/// the exponent action of sigma. Lexicographically sorted.
std::vector<ExpVec> exponent_sumset(const IntMat2& m, int n, ExpVec u = {1, 0},
                                    ExpVec v = {0, 1}, int t_power = 1);
/// Sizes of the sumsets for n = 1..depth.
std::vector<std::size_t> exponent_sumset_sizes(const IntMat2& m, int depth, ExpVec u = {1, 0},
                                               ExpVec v = {0, 1}, int t_power = 1);
std::size_t exp_set_dimension(const IntMat2& m, int n);

struct ValuationCertificate {
  bool certified = false;
  std::string reason;                  // why not, when not certified
  std::optional<Valuation> valuation;  // of M^p
  IntMat2 power_matrix;                // M^p
};

/// Certifies freeness of k{x t^p, y t^p} in every degree.
ValuationCertificate valuation_certificate(const IntMat2& m, int t_power);
/// Same for monomial generators x^u t^p, x^v t^p: needs |beta(M^p)| >= 2 and nu(u) != nu(v).
ValuationCertificate valuation_certificate(const IntMat2& m, int t_power, ExpVec u, ExpVec v);

/// a + b = c + d (mod 2): every monomial of the degree-n component has total
/// degree of one parity, so no component contains a unit.
bool parity_obstruction(const IntMat2& m);

}  // namespace skewfree
