#include <doctest.h>
#include <gmpxx.h>

#include "skewfree/error.hpp"
#include "skewfree/quad.hpp"
#include "support/gen.hpp"

using namespace skewfree;

namespace {

// Independent sign oracle: 512-bit floating evaluation of p + q sqrt(d).
int float_sign(const QuadExt& q) {
  mpf_class p(0, 512), r(0, 512), s(0, 512);
  p = mpf_class(q.rational_part().value(), 512);
  r = mpf_class(q.radical_part().value(), 512);
  s = sqrt(mpf_class(q.discriminant(), 512));
  mpf_class v = p + r * s;
  return sgn(v);
}

}  // namespace

TEST_CASE("rationals are reduced with positive denominators") {
  Rat r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rat::parse("-10/4") == Rat(-5, 2));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
  CHECK_THROWS_AS(Rat::parse("abc"), InputError);
  CHECK(Rat(2, 3).inverse() == Rat(3, 2));
  CHECK_THROWS_AS(Rat(0).inverse(), DomainError);
  CHECK(Rat(-2, 3).pow(-2) == Rat(9, 4));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
}

TEST_CASE("quad_sign examples") {
  CHECK(quad_sign(QuadExt(Rat(0), Rat(0), 5)) == 0);
  CHECK(quad_sign(QuadExt(Rat(-1), Rat(1), 5)) == 1);
  CHECK(quad_sign(QuadExt(Rat(3, 2), Rat(-1, 2), 5)) == 1);
  CHECK(quad_sign(QuadExt(Rat(-3), Rat(1), 5)) == -1);
  CHECK(quad_sign(QuadExt(Rat(-7), Rat(5), 2)) == 1);  // 5 sqrt 2 = 7.07...
}

TEST_CASE("quad_abs_geq examples") {
  const QuadExt golden = QuadExt(Rat(1, 2), Rat(1, 2), 5);
  const QuadExt golden_sq = QuadExt(Rat(3, 2), Rat(1, 2), 5);
  CHECK(quad_abs_geq(golden_sq, Rat(2)));
  CHECK_FALSE(quad_abs_geq(golden, Rat(2)));
  CHECK(quad_abs_geq(QuadExt(2), Rat(2)));
  CHECK(quad_abs_geq(-golden_sq, Rat(2)));
  CHECK(golden * golden == golden_sq);
}

TEST_CASE("sqrt_of extracts square factors") {
  CHECK(QuadExt::sqrt_of(20) == QuadExt(Rat(0), Rat(2), 5));
  CHECK(QuadExt::sqrt_of(16) == QuadExt(4));
  CHECK(QuadExt::sqrt_of(0) == QuadExt(0));
  CHECK(is_squarefree(5));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("rendering") {
  CHECK(QuadExt(Rat(3, 2), Rat(1, 2), 5).str() == "3/2 + 1/2*sqrt(5)");
  CHECK(QuadExt(Rat(3), Rat(-2), 2).str() == "3 - 2*sqrt(2)");
  CHECK(QuadExt(Rat(-1, 3)).str() == "-1/3");
  CHECK(QuadExt(Rat(0), Rat(1), 5).str() == "0 + 1*sqrt(5)");
}

TEST_CASE("different radicals do not mix") {
  CHECK_THROWS_AS(QuadExt(Rat(0), Rat(1), 2) + QuadExt(Rat(0), Rat(1), 3), ModeMismatch);
  CHECK_THROWS_AS(QuadExt(Rat(0), Rat(1), 4), DomainError);
  CHECK_NOTHROW(QuadExt(Rat(0), Rat(1), 2) + QuadExt(Rat(5)));
}

TEST_CASE("field axioms on samples") {
  testgen::Gen g(1);
  for (long d : {2L, 3L, 5L, 13L}) {
    for (int k = 0; k < 60; ++k) {
      QuadExt a = g.quad(d), b = g.quad(d), c = g.quad(d);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!(a == QuadExt(0))) {
        CHECK(a * (QuadExt(1) / a) == QuadExt(1));
        CHECK(quad_sign(a) * quad_sign(-a) == -1);
      }
      CHECK(QuadExt(a.norm()) == a * a.conjugate());
      CHECK(a.norm() == a.rational_part() * a.rational_part() -
                            a.radical_part() * a.radical_part() * Rat(d));
    }
  }
}

TEST_CASE("exact sign agrees with a high-precision evaluation") {
  testgen::Gen g(2);
  for (int k = 0; k < 400; ++k) {
    long d = std::vector<long>{2, 3, 5, 6, 7, 10}[static_cast<std::size_t>(g.integer(0, 5))];
    QuadExt q = g.quad(d);
    CHECK(quad_sign(q) == float_sign(q));
  }
  // Near-cancellation: 70 - 99/sqrt(2)... p/q close to sqrt(2).
  QuadExt close(Rat(99), Rat(-70), 2);  // 99 - 70 sqrt 2 = 0.00505...
  CHECK(quad_sign(close) == 1);
  CHECK(float_sign(close) == 1);
}

TEST_CASE("ordering is total and consistent with subtraction") {
  testgen::Gen g(3);
  for (int k = 0; k < 200; ++k) {
    QuadExt a = g.quad(5), b = g.quad(5);
    int s = quad_sign(a - b);
    CHECK(((a < b) == (s < 0)));
    CHECK(((a > b) == (s > 0)));
  }
}
