#include <doctest.h>

#include "skewfree/error.hpp"
#include "skewfree/skew.hpp"
#include "support/gen.hpp"

using namespace skewfree;

namespace {

Poly L(const char* s) { return Poly::parse(s, Mode::Laurent); }

SkewPoly random_skew(testgen::Gen& g, const AutomPtr& s, bool laurent_t, int max_deg = 2) {
  SkewPoly u(s, laurent_t);
  const int n = static_cast<int>(g.integer(1, 3));
  for (int k = 0; k < n; ++k) {
    std::int64_t d = g.integer(laurent_t ? -max_deg : 0, max_deg);
    u += SkewPoly::term(s, g.poly(s->mode(), 3, 2), d, laurent_t);
  }
  return u;
}

SkewPoly random_homogeneous(testgen::Gen& g, const AutomPtr& s, std::int64_t d) {
  return SkewPoly::term(s, g.poly(Mode::Laurent, 3, 2), d, true);
}

}  // namespace

TEST_CASE("skew_mul examples") {
  AutomPtr tau = share(monomial_autom({0, 1, 1, 1}));
  auto xt = SkewPoly::term(tau, L("x"), 1), yt = SkewPoly::term(tau, L("y"), 1);
  CHECK(xt * yt == SkewPoly::term(tau, L("x^2*y"), 2));
  auto f = SkewPoly::term(tau, L("x + y"), 0), g = SkewPoly::term(tau, L("x*y^-1"), 0);
  CHECK(f * g == SkewPoly::term(tau, L("x + y") * L("x*y^-1"), 0));
  auto t = SkewPoly::term(tau, L("1"), 1, true), xinv = SkewPoly::term(tau, L("x"), -1, true);
  CHECK(t * xinv == SkewPoly::term(tau, L("y"), 0, true));
}

TEST_CASE("negative degrees require the Laurent extension") {
  AutomPtr tau = share(monomial_autom({0, 1, 1, 1}));
  CHECK_THROWS_AS(SkewPoly::term(tau, L("x"), -1), DomainError);
  AutomPtr h = share(henon_paper(Rat(1), Rat(1)));
  CHECK_THROWS_AS(SkewPoly(h, true), ModeMismatch);
}

TEST_CASE("different sigmas do not multiply") {
  AutomPtr a = share(monomial_autom({0, 1, 1, 1}));
  AutomPtr b = share(monomial_autom({1, 1, 1, 2}));
  AutomPtr a2 = share(monomial_autom({0, 1, 1, 1}));
  CHECK_THROWS_AS(SkewPoly::term(a, L("x"), 1) * SkewPoly::term(b, L("x"), 1), ModeMismatch);
  CHECK_NOTHROW(SkewPoly::term(a, L("x"), 1) * SkewPoly::term(a2, L("x"), 1));
}

TEST_CASE("expand_word examples") {
  AutomPtr tau = share(monomial_autom({0, 1, 1, 1}));
  Letter x{"x", L("x"), 1}, y{"y", L("y"), 1};
  Word w{{x, x, y}};
  // x * tau(x) * tau^2(y) = x * y * (x y^2)... tau^2(y) = x y^2.
  CHECK(expand_word(tau, w) == SkewPoly::term(tau, L("x^2*y^3"), 3));
  CHECK(expand_word(tau, Word{{x}}) == SkewPoly::term(tau, L("x"), 1));
  AutomPtr id = share(Automorphism::identity(Mode::Poly));
  Letter px{"x", Poly::x(), 1};
  CHECK(expand_word(id, Word{{px, px, px, px}}) == SkewPoly::term(id, Poly::parse("x^4"), 4));
  CHECK(w.str() == "(xt)^2(yt)");
  CHECK(parse_word("(xt)^2 (yt)", std::vector<Letter>{x, y}) == w);
  CHECK_THROWS_AS(parse_word("(zt)", std::vector<Letter>{x, y}), InputError);
}

TEST_CASE("conjugation examples") {
  AutomPtr sigma = share(monomial_autom({1, 1, 1, 2}));
  Automorphism tau = monomial_autom({0, 1, 1, 1});
  SkewPoly image = conjugate_map(SkewPoly::term(sigma, L("x"), 1), tau);
  CHECK(image.coeff(1) == L("y"));
  CHECK(image.sigma()->same_map(compose(tau, compose(*sigma, tau.inverse()))));
  SkewPoly deg0 = conjugate_map(SkewPoly::term(sigma, L("x*y^-2"), 0), tau);
  CHECK(deg0.coeff(0) == tau.apply(L("x*y^-2")));
}

TEST_CASE("gauge examples") {
  AutomPtr sigma = share(monomial_autom({1, 1, 1, 2}));
  Poly a = L("x");
  CHECK(gauge_map(SkewPoly::term(sigma, L("1"), 1), a) == SkewPoly::term(sigma, L("x"), 1));
  CHECK(gauge_map(SkewPoly::term(sigma, L("x^-1*y"), 1), a) == SkewPoly::term(sigma, L("y"), 1));
  CHECK(gauge_map(SkewPoly::term(sigma, L("x + y"), 0), a) == SkewPoly::term(sigma, L("x + y"), 0));
  CHECK_THROWS_AS(gauge_map(SkewPoly::term(sigma, L("x"), 1), L("1 + x")), DomainError);
}

TEST_CASE("rendering") {
  AutomPtr tau = share(monomial_autom({0, 1, 1, 1}));
  SkewPoly u = SkewPoly::parse(tau, "x*t + 2y*t^2 - 1 + t^3");
  CHECK(u.str() == "t^3 + 2y*t^2 + x*t - 1");
  CHECK(SkewPoly::parse(tau, "-x*t").str() == "-x*t");
  CHECK(SkewPoly::parse(tau, u.str()) == u);
}

TEST_CASE("associativity and distributivity") {
  testgen::Gen g(41);
  for (int k = 0; k < 200; ++k) {
    AutomPtr s = share(monomial_autom(g.gl2(2)));
    SkewPoly a = random_skew(g, s, true), b = random_skew(g, s, true), c = random_skew(g, s, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
  AutomPtr h = share(henon_paper(Rat(1), Rat(1)));
  for (int k = 0; k < 30; ++k) {
    SkewPoly a = random_skew(g, h, false, 1), b = random_skew(g, h, false, 1), c = random_skew(g, h, false, 1);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("t f = sigma(f) t") {
  testgen::Gen g(42);
  for (int k = 0; k < 200; ++k) {
    AutomPtr s = share(monomial_autom(g.gl2(2)));
    Poly f = g.poly(Mode::Laurent);
    auto t = SkewPoly::term(s, L("1"), 1);
    CHECK(t * SkewPoly::term(s, f, 0) == SkewPoly::term(s, s->apply(f), 1));
  }
}

TEST_CASE("conjugation is a ring homomorphism") {
  testgen::Gen g(43);
  for (int k = 0; k < 200; ++k) {
    AutomPtr s = share(monomial_autom(g.gl2(2)));
    Automorphism tau = monomial_autom(g.gl2(2));
    SkewPoly u = random_skew(g, s, true), v = random_skew(g, s, true);
    CHECK(conjugate_map(u * v, tau) == conjugate_map(u, tau) * conjugate_map(v, tau));
    CHECK(conjugate_map(u + v, tau) == conjugate_map(u, tau) + conjugate_map(v, tau));
  }
}

TEST_CASE("gauge map is a graded ring automorphism") {
  testgen::Gen g(44);
  for (int k = 0; k < 200; ++k) {
    AutomPtr s = share(monomial_autom(g.gl2(2)));
    Poly a = g.laurent_monomial(2);
    const std::int64_t m = g.integer(-2, 2), n = g.integer(-2, 2);
    SkewPoly u = random_homogeneous(g, s, m), v = random_homogeneous(g, s, n);
    CHECK(gauge_map(u * v, a) == gauge_map(u, a) * gauge_map(v, a));
    // a_m sigma^m(a_n) = a_(m+n)
    CHECK(gauge_factor(*s, a, m) * power(*s, m).apply(gauge_factor(*s, a, n)) ==
          gauge_factor(*s, a, m + n));
  }
}

TEST_CASE("gauge by a then by the inverse unit undoes it") {
  testgen::Gen g(45);
  for (int k = 0; k < 100; ++k) {
    AutomPtr s = share(monomial_autom(g.gl2(2)));
    Poly a = g.laurent_monomial(2);
    Poly a_inv = *a.unit_inverse();
    SkewPoly u = random_skew(g, s, true);
    CHECK(gauge_map(gauge_map(u, a), a_inv) == u);
  }
}
