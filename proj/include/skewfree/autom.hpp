#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "skewfree/poly.hpp"

namespace skewfree {

/// Integer 2x2 matrix (a b; c d).
struct IntMat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static IntMat2 identity() { return {1, 0, 0, 1}; }
  std::int64_t det() const { return a * d - b * c; }
  std::int64_t trace() const { return a + d; }
  IntMat2 transpose() const { return {a, c, b, d}; }
  bool is_identity() const { return *this == identity(); }
  /// Inverse of a matrix with det +-1.
  IntMat2 inverse() const;
  /// M^n, negative n allowed when det is +-1.
  IntMat2 pow(std::int64_t n) const;
  ExpVec apply(ExpVec v) const { return {a * v.i + b * v.j, c * v.i + d * v.j}; }

  /// Throws ResourceCapExceeded on 64-bit overflow.
  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y);
  friend bool operator==(const IntMat2&, const IntMat2&) = default;

  /// "a,b;c,d"
  std::string str() const;
  /// "a,b;c,d" or the flat row-major "a,b,c,d".
  static IntMat2 parse(std::string_view text);
};

struct MonomialKind {
  IntMat2 matrix;
};
/// x -> a x + p(y), y -> b y + c
struct ElementaryKind {
  Rat a, b, c;
  Poly p;
};
/// x -> p(x) - a y, y -> b x. b == 1 is the plain Henon form; other b arise
/// from the scaled family x -> 1 + y - a x^2, y -> b x.
struct HenonKind {
  Poly p;
  Rat a;
  Rat b;
};
struct CustomKind {};

using AutomKind = std::variant<MonomialKind, ElementaryKind, HenonKind, CustomKind>;

std::string kind_name(const AutomKind& k);

/// k-algebra automorphism of k[x,y] or k[x^+-1, y^+-1], stored as the images
/// of x and y together with the images of the inverse map. Both round trips
/// are checked whenever an automorphism is built from user-supplied images.
class Automorphism {
 public:
  static Automorphism identity(Mode mode);
  /// Throws DomainError unless inv really inverts img.
  static Automorphism custom(Poly img_x, Poly img_y, Poly inv_x, Poly inv_y);

  Mode mode() const { return mode_; }
  const Poly& img_x() const { return img_x_; }
  const Poly& img_y() const { return img_y_; }
  const Poly& inv_x() const { return inv_x_; }
  const Poly& inv_y() const { return inv_y_; }
  const AutomKind& kind() const { return kind_; }

  Poly apply(const Poly& f) const { return substitute(f, img_x_, img_y_); }
  Poly apply_inverse(const Poly& f) const { return substitute(f, inv_x_, inv_y_); }
  Automorphism inverse() const;

  /// Same images of x and y.
  bool same_map(const Automorphism& o) const {
    return mode_ == o.mode_ && img_x_ == o.img_x_ && img_y_ == o.img_y_;
  }
  bool is_identity() const;
  /// Matrix M when x -> x^a y^b and y -> x^c y^d with unit coefficients.
  std::optional<IntMat2> monomial_matrix() const;

  /// "x -> ..., y -> ..."
  std::string str() const;

  /// Throws DomainError unless both round trips x -> x, y -> y hold.
  void check_inverse() const;

 private:
  friend Automorphism make_trusted(Mode, Poly, Poly, Poly, Poly, AutomKind);
  Automorphism(Mode mode, Poly ix, Poly iy, Poly vx, Poly vy, AutomKind kind)
      : mode_(mode), img_x_(std::move(ix)), img_y_(std::move(iy)), inv_x_(std::move(vx)),
        inv_y_(std::move(vy)), kind_(std::move(kind)) {}

  Mode mode_;
  Poly img_x_, img_y_, inv_x_, inv_y_;
  AutomKind kind_;
};

/// sigma(x) = x^a y^b, sigma(y) = x^c y^d, so sigma(x^i y^j) = x^(ai+cj) y^(bi+dj).
Automorphism monomial_autom(const IntMat2& m);
/// x -> a x + p(y), y -> b y + c.
Automorphism elementary_autom(const Rat& a, const Rat& b, const Rat& c, const Poly& p);
/// x -> p(x) - a y, y -> x; deg p >= 2.
Automorphism henon_autom(const Poly& p, const Rat& a);
/// x -> 1 + y - a x^2, y -> b x with a b != 0.
Automorphism henon_paper(const Rat& a, const Rat& b);

/// (s o t)(f) = s(t(f)).
Automorphism compose(const Automorphism& s, const Automorphism& t);
Automorphism power(const Automorphism& s, std::int64_t n);
inline Poly apply(const Automorphism& s, const Poly& f) { return s.apply(f); }

/// (sigma^m(x), sigma^m(y)) for m = 0..n, forward images only.
std::vector<std::pair<Poly, Poly>> orbit_images(const Automorphism& s, int n);

/// CLI syntax: "monomial:a,b;c,d", "elementary:a,b,c,p(y)", "henon:a,b",
/// "henon-std:p(x),a", "custom:img_x|img_y|inv_x|inv_y", "identity".
/// custom_mode applies to "custom" and "identity".
Automorphism parse_automorphism(std::string_view spec, Mode custom_mode = Mode::Poly);

}  // namespace skewfree
