#include "skewfree/quad.hpp"

#include <cmath>

#include "skewfree/error.hpp"

namespace skewfree {

bool is_squarefree(long d) {
  if (d < 1) return false;
  for (long f = 2; f * f <= d; ++f)
    if (d % (f * f) == 0) return false;
  return true;
}

QuadExt::QuadExt(Rat rational, Rat radical, long d)
    : p_(std::move(rational)), q_(std::move(radical)), d_(d) {
  if (d < 0) throw DomainError("negative radicand " + std::to_string(d));
  if (d != 0 && !is_squarefree(d))
    throw DomainError("radicand " + std::to_string(d) + " is not squarefree");
  normalise();
}

QuadExt QuadExt::sqrt_of(long n) {
  if (n < 0) throw DomainError("sqrt of negative integer");
  long s = 1, d = n;
  for (long f = 2; f * f <= d;) {
    if (d % (f * f) == 0) {
      d /= f * f;
      s *= f;
    } else {
      ++f;
    }
  }
  if (d <= 1) return QuadExt(Rat(s * d));
  return QuadExt(Rat(0), Rat(s), d);
}

void QuadExt::normalise() {
  if (d_ == 1) {
    p_ += q_;
    q_ = Rat(0);
    d_ = 0;
  }
  if (q_.is_zero()) d_ = 0;
  if (d_ == 0) q_ = Rat(0);
}

long QuadExt::common_field(const QuadExt& a, const QuadExt& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
  throw ModeMismatch("mixing Q(sqrt " + std::to_string(a.d_) + ") with Q(sqrt " +
                     std::to_string(b.d_) + ")");
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.q_ = -r.q_;
  return r;
}

Rat QuadExt::norm() const { return p_ * p_ - q_ * q_ * Rat(d_); }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_field(*this, o);
  p_ += o.p_;
  q_ += o.q_;
  normalise();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  long d = common_field(*this, o);
  Rat p = p_ * o.p_ + q_ * o.q_ * Rat(d);
  Rat q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  d_ = d;
  normalise();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  Rat n = o.norm();
  if (n.is_zero()) throw DomainError("division by zero in quadratic field");
  QuadExt inv = o.conjugate();
  inv.p_ /= n;
  inv.q_ /= n;
  return *this *= inv;
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

QuadExt QuadExt::pow(long e) const {
  if (e < 0) return QuadExt(1) / pow(-e);
  QuadExt result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
  int s = quad_sign(a - b);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string QuadExt::str() const {
  if (d_ == 0) return p_.str();
  std::string out = p_.str();
  if (q_.sign() < 0)
    out += " - " + (-q_).str();
  else
    out += " + " + q_.str();
  return out + "*sqrt(" + std::to_string(d_) + ")";
}

double QuadExt::to_double() const {
  return p_.to_double() + q_.to_double() * std::sqrt(static_cast<double>(d_));
}

int quad_sign(const QuadExt& q) {
  int sp = q.rational_part().sign();
  int sq = q.radical_part().sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 with q^2 d.
  Rat p2 = q.rational_part() * q.rational_part();
  Rat q2d = q.radical_part() * q.radical_part() * Rat(q.discriminant());
  auto c = p2 <=> q2d;
  if (c > 0) return sp;
  if (c < 0) return sq;
  return 0;
}

QuadExt quad_abs(const QuadExt& q) { return quad_sign(q) < 0 ? -q : q; }

bool quad_abs_geq(const QuadExt& q, const Rat& bound) {
  return quad_sign(quad_abs(q) - QuadExt(bound)) >= 0;
}

}  // namespace skewfree
