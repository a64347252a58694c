#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewfree/autom.hpp"
#include "skewfree/poly.hpp"

namespace skewfree {

using AutomPtr = std::shared_ptr<const Automorphism>;

inline AutomPtr share(Automorphism a) { return std::make_shared<const Automorphism>(std::move(a)); }

/// Element sum_i f_i t^i of R[t; sigma], multiplied by (f t^i)(g t^j) = f sigma^i(g) t^(i+j).
///
/// Negative t-degrees are only accepted when the element is flagged as
/// living in the skew Laurent extension R[t^+-1; sigma], which in turn needs
/// sigma to act on the Laurent ring.
class SkewPoly {
 public:
  explicit SkewPoly(AutomPtr sigma, bool laurent_t = false);

  static SkewPoly term(AutomPtr sigma, Poly f, std::int64_t degree, bool laurent_t = false);
  /// "x*t + 2y*t^2 - 1": every term is a coefficient in x, y followed by t^k.
  static SkewPoly parse(AutomPtr sigma, std::string_view text, bool laurent_t = false);

  const AutomPtr& sigma() const { return sigma_; }
  bool laurent_t() const { return laurent_t_; }
  const std::map<std::int64_t, Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Poly coeff(std::int64_t degree) const;
  /// Single t-degree (zero counts as homogeneous).
  bool is_homogeneous() const { return coeffs_.size() <= 1; }
  std::int64_t max_degree() const;
  std::int64_t min_degree() const;

  SkewPoly& operator+=(const SkewPoly& o);
  SkewPoly& operator-=(const SkewPoly& o);
  SkewPoly& operator*=(const Rat& c);
  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
  friend SkewPoly operator*(SkewPoly a, const Rat& c) { return a *= c; }
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);

  friend bool operator==(const SkewPoly& a, const SkewPoly& b);

  std::string str() const;

 private:
  void add_term(std::int64_t degree, Poly f);
  void check_degree(std::int64_t degree) const;

  AutomPtr sigma_;
  bool laurent_t_;
  std::map<std::int64_t, Poly> coeffs_;
};

void require_same_sigma(const AutomPtr& a, const AutomPtr& b, std::string_view op);

SkewPoly skew_mul(const SkewPoly& u, const SkewPoly& v);

/// Phi(f t^j) = tau(f) s^j into R[s; tau sigma tau^-1].
SkewPoly conjugate_map(const SkewPoly& u, const Automorphism& tau);

/// Psi(g t^m) = a_m g t^m with a_m = a sigma(a) ... sigma^(m-1)(a), a_0 = 1,
/// a_(-m) = sigma^(-m)(a_m)^(-1). a must be a unit of the coefficient ring.
SkewPoly gauge_map(const SkewPoly& u, const Poly& a);

/// The gauge factor a_m.
Poly gauge_factor(const Automorphism& sigma, const Poly& a, std::int64_t m);

/// Generator f t^k with a display name; words are products of letters.
struct Letter {
  std::string name;
  Poly coeff;
  std::int64_t t_power = 1;

  /// "(xt)", "(xt^2)"
  std::string str() const;
  SkewPoly as_skew(const AutomPtr& sigma) const;
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.name == b.name && a.t_power == b.t_power && a.coeff == b.coeff;
  }
};

struct Word {
  std::vector<Letter> letters;

  std::int64_t t_degree() const;
  /// Runs of equal letters are collapsed: "(xt)^2(yt)".
  std::string str() const;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Product of the letters under skew_mul.
SkewPoly expand_word(const AutomPtr& sigma, const Word& w);

/// Parses "(xt)^2(yt)" against the given letters.
Word parse_word(std::string_view text, std::span<const Letter> alphabet);

/// Display name for a generator polynomial: the polynomial text itself when
/// it has a single term, otherwise the text wrapped in parentheses.
std::string letter_name_for(const Poly& p);

}  // namespace skewfree
