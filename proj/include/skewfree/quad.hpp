#pragma once

#include <compare>
#include <string>

#include "skewfree/rational.hpp"

namespace skewfree {

/// Exact element p + q*sqrt(d) of Q(sqrt d), d a squarefree integer >= 2.
///
/// d == 0 encodes a pure rational (q is then 0). Elements whose radical part
/// vanishes are normalised to d == 0, so a rational can be combined with an
/// element of any field; combining two irrational elements of different
/// fields throws ModeMismatch.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rat rational) : p_(std::move(rational)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  QuadExt(T v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  /// d must be >= 0 and squarefree (d == 1 is folded into the rational part).
  QuadExt(Rat rational, Rat radical, long d);

  /// sqrt(n) for a non-negative integer n, written as s*sqrt(d), d squarefree.
  static QuadExt sqrt_of(long n);

  const Rat& rational_part() const { return p_; }
  const Rat& radical_part() const { return q_; }
  long discriminant() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  /// p - q*sqrt(d).
  QuadExt conjugate() const;
  /// p^2 - q^2 d.
  Rat norm() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  QuadExt operator-() const;
  QuadExt pow(long e) const;

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b);

  /// Rendering "p + q*sqrt(d)" (just "p" when rational).
  std::string str() const;
  double to_double() const;

 private:
  void normalise();
  static long common_field(const QuadExt& a, const QuadExt& b);

  Rat p_;
  Rat q_;
  long d_ = 0;
};

/// Exact sign of q, decided by comparing squares; never uses floating point.
int quad_sign(const QuadExt& q);
QuadExt quad_abs(const QuadExt& q);
/// |q| >= bound, decided exactly.
bool quad_abs_geq(const QuadExt& q, const Rat& bound);

bool is_squarefree(long d);

}  // namespace skewfree
