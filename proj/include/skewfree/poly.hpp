#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewfree/rational.hpp"

namespace skewfree {

/// Polynomial ring k[x,y] (Poly) or Laurent ring k[x^-1, x, y^-1, y] (Laurent).
enum class Mode { Poly, Laurent };

std::string_view to_string(Mode m);

/// Exponent vector of x^i y^j.
struct ExpVec {
  std::int64_t i = 0;
  std::int64_t j = 0;

  std::int64_t total() const { return i + j; }
  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend ExpVec operator+(ExpVec a, ExpVec b) { return {a.i + b.i, a.j + b.j}; }
  friend ExpVec operator-(ExpVec a, ExpVec b) { return {a.i - b.i, a.j - b.j}; }
};

/// Canonical monomial order: degree-lexicographic with x > y. Returns true
/// when a comes *before* b in canonical iteration (higher degree first, then
/// larger x-exponent first).
inline bool canonical_before(const ExpVec& a, const ExpVec& b) {
  if (a.total() != b.total()) return a.total() > b.total();
  return a.i > b.i;
}

struct ExpVecHash {
  std::size_t operator()(const ExpVec& e) const noexcept {
    auto h = static_cast<std::uint64_t>(e.i) * 0x9e3779b97f4a7c15ULL;
    return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(e.j) + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2)));
  }
};

struct Term {
  ExpVec e;
  Rat c;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Positive integer weights for a weighted degree deg(x) = wx, deg(y) = wy.
struct WeightedDegree {
  std::int64_t wx = 1;
  std::int64_t wy = 1;
};

/// Sparse exact polynomial in x, y over Q.
///
/// Terms are kept in canonical order with no zero coefficients, so equality
/// is structural. The zero polynomial has no terms.
class Poly {
 public:
  explicit Poly(Mode mode = Mode::Poly) : mode_(mode) {}

  static Poly constant(const Rat& c, Mode mode = Mode::Poly);
  static Poly monomial(const Rat& c, ExpVec e, Mode mode = Mode::Poly);
  static Poly x(Mode mode = Mode::Poly) { return monomial(Rat(1), {1, 0}, mode); }
  static Poly y(Mode mode = Mode::Poly) { return monomial(Rat(1), {0, 1}, mode); }
  /// Combines duplicate exponents, drops zeros, validates the mode.
  static Poly from_terms(std::vector<Term> terms, Mode mode);
  /// Trusted constructor: terms already canonical, non-zero, distinct.
  static Poly from_canonical(std::vector<Term> terms, Mode mode);

  /// Parses "1 + y - 2x^2", "x^-1*y^3", "3/2*x*y", "(1+y)^2".
  static Poly parse(std::string_view text, Mode mode = Mode::Poly);

  Mode mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  bool is_constant() const;
  /// Single term c*x^i*y^j.
  bool is_monomial() const { return terms_.size() == 1; }
  /// Only the variable y occurs.
  bool is_univariate_y() const;
  bool is_univariate_x() const;
  Rat coeff(ExpVec e) const;
  /// Total degree (max i + j over the support). Throws on zero.
  std::int64_t degree() const;
  std::int64_t degree_in_x() const;
  std::int64_t degree_in_y() const;

  /// Inverse when this is a unit of the ring: a non-zero constant, or in
  /// Laurent mode a non-zero scalar times a monomial.
  std::optional<Poly> unit_inverse() const;

  /// Re-tags the polynomial; Laurent -> Poly requires no negative exponents.
  Poly with_mode(Mode m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly pow(std::int64_t e) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  Mode mode_;
  std::vector<Term> terms_;
};

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);

/// f(img_x, img_y). Negative exponents of f need unit images.
Poly substitute(const Poly& f, const Poly& img_x, const Poly& img_y);

/// max over the support of wx*i + wy*j. Poly mode, f != 0.
std::int64_t weighted_degree(const Poly& f, WeightedDegree w);

void require_same_mode(const Poly& f, const Poly& g, std::string_view op);

}  // namespace skewfree
