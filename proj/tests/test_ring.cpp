#include <doctest.h>

#include <map>

#include "skewfree/error.hpp"
#include "skewfree/poly.hpp"
#include "support/gen.hpp"

using namespace skewfree;

namespace {

Poly P(const char* s, Mode m = Mode::Poly) { return Poly::parse(s, m); }

// Dense schoolbook product over an ordered map, written independently of the library kernels.
Poly naive_mul(const Poly& f, const Poly& g) {
  std::map<std::pair<std::int64_t, std::int64_t>, Rat> acc;
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) acc[{a.e.i + b.e.i, a.e.j + b.e.j}] += a.c * b.c;
  std::vector<Term> terms;
  for (auto& [e, c] : acc) terms.push_back({{e.first, e.second}, c});
  return Poly::from_terms(std::move(terms), f.mode());
}

}  // namespace

TEST_CASE("poly_add examples") {
  CHECK(P("x + y") + P("-y") == P("x"));
  CHECK(Poly() + P("3x^2 - y") == P("3x^2 - y"));
  CHECK(P("1 + y - x^2") + P("x^2") == P("1 + y"));
  CHECK_THROWS_AS(P("x") + P("x", Mode::Laurent), ModeMismatch);
}

TEST_CASE("poly_mul examples") {
  CHECK(P("x") * P("y") == P("x*y"));
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(P("x^-1", Mode::Laurent) * P("x", Mode::Laurent) == P("1", Mode::Laurent));
}

TEST_CASE("substitute examples") {
  CHECK(substitute(P("x^2*y"), P("x*y"), P("x*y^2")) == P("x^3*y^4"));
  Poly f = P("3 - 2x^3*y + 1/2y^2");
  CHECK(substitute(f, P("x"), P("y")) == f);
  CHECK(substitute(P("x"), P("1 + y - x^2"), P("x")) == P("1 + y - x^2"));
  CHECK_THROWS_AS(substitute(P("x^-1", Mode::Laurent), P("1 + x", Mode::Laurent), P("y", Mode::Laurent)),
                  DomainError);
  CHECK(substitute(P("x^-1*y", Mode::Laurent), P("2x*y", Mode::Laurent), P("y", Mode::Laurent)) ==
        P("1/2x^-1", Mode::Laurent));
}

TEST_CASE("weighted_degree examples") {
  CHECK(weighted_degree(P("1 + y - x^2"), {2, 1}) == 4);
  CHECK(weighted_degree(P("y"), {2, 1}) == 1);
  CHECK(weighted_degree(P("x^3*y^2"), {1, 1}) == 5);
  CHECK_THROWS_AS(weighted_degree(Poly(), {1, 1}), DomainError);
}

TEST_CASE("parser and printer") {
  CHECK(P("1 + y - 2x^2").str() == "-2x^2 + y + 1");
  CHECK(P("x^-1*y^3", Mode::Laurent).str() == "x^-1*y^3");
  CHECK(P("(x + y)^2") == P("x^2 + 2x*y + y^2"));
  CHECK(P("2/3 x y") == Poly::monomial(Rat(2, 3), {1, 1}));
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("x^-1"), Error);
  CHECK_THROWS_AS(P("x + "), InputError);
  CHECK_THROWS_AS(P("(x"), InputError);
  CHECK_THROWS_AS(P("z"), InputError);
}

TEST_CASE("canonical order: higher total degree first, ties by larger x exponent") {
  Poly p = P("y^2 + x*y + x^2 + x + y + 1");
  std::vector<ExpVec> order;
  for (const auto& t : p.terms()) order.push_back(t.e);
  std::vector<ExpVec> want{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}};
  CHECK(order == want);
}

TEST_CASE("round trip parse(print(f)) = f") {
  testgen::Gen g(11);
  for (Mode m : {Mode::Poly, Mode::Laurent}) {
    for (int k = 0; k < 200; ++k) {
      Poly f = g.poly(m, 6, 4);
      CHECK(Poly::parse(f.str(), m) == f);
    }
  }
}

TEST_CASE("ring axioms and agreement with the naive product") {
  testgen::Gen g(12);
  for (Mode m : {Mode::Poly, Mode::Laurent}) {
    for (int k = 0; k < 150; ++k) {
      Poly a = g.poly(m), b = g.poly(m), c = g.poly(m);
      CHECK(a * b == naive_mul(a, b));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("weighted degree is additive") {
  testgen::Gen g(13);
  for (int k = 0; k < 200; ++k) {
    Poly a = g.nonzero_poly(Mode::Poly), b = g.nonzero_poly(Mode::Poly);
    WeightedDegree w{g.integer(1, 3), g.integer(1, 3)};
    CHECK(weighted_degree(a * b, w) == weighted_degree(a, w) + weighted_degree(b, w));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  testgen::Gen g(14);
  for (int k = 0; k < 150; ++k) {
    Poly ix = g.poly(Mode::Poly, 3, 2), iy = g.poly(Mode::Poly, 3, 2);
    Poly f = g.poly(Mode::Poly, 3, 3), h = g.poly(Mode::Poly, 3, 3);
    CHECK(substitute(f + h, ix, iy) == substitute(f, ix, iy) + substitute(h, ix, iy));
    CHECK(substitute(f * h, ix, iy) == substitute(f, ix, iy) * substitute(h, ix, iy));
  }
  for (int k = 0; k < 150; ++k) {
    Poly ix = g.laurent_monomial(2), iy = g.laurent_monomial(2);
    Poly f = g.poly(Mode::Laurent, 3, 3), h = g.poly(Mode::Laurent, 3, 3);
    CHECK(substitute(f * h, ix, iy) == substitute(f, ix, iy) * substitute(h, ix, iy));
  }
}

TEST_CASE("large products take the parallel kernel and still agree") {
  testgen::Gen g(15);
  Poly a = g.poly(Mode::Poly, 60, 12), b = g.poly(Mode::Poly, 60, 12);
  CHECK(a * b == naive_mul(a, b));
}

TEST_CASE("powers and units") {
  Poly u = P("-3x^2*y^-1", Mode::Laurent);
  CHECK(u.pow(-2) * u.pow(2) == P("1", Mode::Laurent));
  CHECK(P("x + 1").pow(3) == P("x^3 + 3x^2 + 3x + 1"));
  CHECK_THROWS_AS(P("x + 1", Mode::Laurent).pow(-1), DomainError);
  CHECK_FALSE(P("x").unit_inverse().has_value());
  CHECK(P("2").unit_inverse().value() == P("1/2"));
}
