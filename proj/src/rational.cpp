#include "skewfree/rational.hpp"

#include <functional>

#include "skewfree/error.hpp"

namespace skewfree {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InputError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) k = 1;
    if (k == part.size()) throw bad();
    for (; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9') throw bad();
  };
  std::string_view sv(s);
  if (slash == std::string::npos) {
    check_digits(sv, true);
    return Rat(BigInt(s[0] == '+' ? s.substr(1) : s));
  }
  auto n = sv.substr(0, slash);
  auto d = sv.substr(slash + 1);
  check_digits(n, true);
  check_digits(d, false);
  std::string ns(n[0] == '+' ? n.substr(1) : n);
  return Rat(BigInt(ns), BigInt(std::string(d)));
}

Rat Rat::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  mpq_class r(n, d);  // already reduced: gcd(n^e, d^e) = 1
  return Rat(r);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rat::hash() const {
  std::size_t h = std::hash<long>{}(mpz_get_si(q_.get_num_mpz_t()));
  h ^= mpz_size(q_.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL;
  h ^= std::hash<long>{}(mpz_get_si(q_.get_den_mpz_t())) + 0x7f4a7c15 + (h << 6) + (h >> 2);
  return h;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace skewfree
