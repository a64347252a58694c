#include <doctest.h>

#include "skewfree/error.hpp"
#include "skewfree/growth.hpp"
#include "skewfree/monomial.hpp"
#include "support/oracles.hpp"

using namespace skewfree;

namespace {

using oracle::binom3;
using oracle::elementary_lattice;

std::vector<SkewPoly> parse_gens(const AutomPtr& s, std::initializer_list<const char*> texts) {
  std::vector<SkewPoly> out;
  for (const char* t : texts) out.push_back(SkewPoly::parse(s, t));
  return out;
}

}  // namespace

TEST_CASE("elementary filtration matches the lattice-point count") {
  AutomPtr s = share(elementary_autom(Rat(1), Rat(1), Rat(0), Poly::parse("y^2")));
  auto gens = parse_gens(s, {"x", "y", "y^2", "t"});
  auto series = filtration_dims(gens, 16);
  REQUIRE(series.dims.size() == 17);
  for (int n = 0; n <= 16; ++n) CHECK(series.dims[static_cast<std::size_t>(n)] == elementary_lattice(n));
  CHECK(elementary_lattice(1) == 5);
}

TEST_CASE("identity sigma gives the polynomial ring in three variables") {
  AutomPtr s = share(Automorphism::identity(Mode::Poly));
  auto series = filtration_dims(parse_gens(s, {"x", "y", "t"}), 15);
  for (int n = 0; n <= 15; ++n) CHECK(series.dims[static_cast<std::size_t>(n)] == binom3(n));
  auto est = gk_estimate(series);
  CHECK(est.kind == GrowthKind::Polynomial);
  CHECK(est.degree == 3);
}

TEST_CASE("free generators give 2^n graded dimensions") {
  AutomPtr s = share(monomial_autom({1, 1, 1, 2}));
  auto series = graded_dims(parse_gens(s, {"x*t", "y*t"}), 12);
  for (int n = 0; n <= 12; ++n) CHECK(series.dims[static_cast<std::size_t>(n)] == (std::size_t{1} << n));
  CHECK(gk_estimate(series).kind == GrowthKind::Exponential);
}

TEST_CASE("Heisenberg oracle agrees with brute force, then with the graded series") {
  for (int n = 0; n <= 9; ++n) CHECK(oracle::heisenberg_graded(n) == oracle::heisenberg_bruteforce(n));
  AutomPtr s = share(monomial_autom({1, 0, 1, 1}));
  auto series = graded_dims(parse_gens(s, {"t", "x*t", "y*t"}), 18);
  for (int n = 0; n <= 18; ++n) CHECK(series.dims[static_cast<std::size_t>(n)] == oracle::heisenberg_graded(n));
  auto est = gk_estimate(series);
  CHECK(est.kind == GrowthKind::Polynomial);
  CHECK(est.cumulative);
}

TEST_CASE("finite-order sigma grows at most cubically") {
  AutomPtr s = share(monomial_autom({0, 1, 1, 0}));
  auto series = filtration_dims(parse_gens(s, {"x", "y", "t"}), 14);
  const double c = static_cast<double>(series.dims[7]) / (7.0 * 7.0 * 7.0);
  for (std::size_t n = 7; n < series.dims.size(); ++n)
    CHECK(static_cast<double>(series.dims[n]) <= 2 * c * static_cast<double>(n * n * n));
}

TEST_CASE("series invariants") {
  AutomPtr s = share(monomial_autom({0, 1, 1, 1}));
  auto series = filtration_dims(parse_gens(s, {"x*t", "y*t"}), 8);
  CHECK(series.dims[0] == 1);
  for (std::size_t n = 1; n < series.dims.size(); ++n) {
    CHECK(series.dims[n] >= series.dims[n - 1]);
    std::size_t bound = 1;
    for (std::size_t k = 0; k < n; ++k) bound *= series.dims[1];
    CHECK(series.dims[n] <= bound);
  }
  CHECK_FALSE(series.basis_spec.empty());
}

TEST_CASE("exponential series from the large branch are never called polynomial") {
  for (IntMat2 m : {IntMat2{1, 1, 1, 2}, IntMat2{2, 1, 1, 1}, IntMat2{3, 2, 4, 3}, IntMat2{1, 2, 1, 1}}) {
    REQUIRE(classify(m).branch == Branch::Large);
    AutomPtr s = share(monomial_autom(m));
    auto series = graded_dims(parse_gens(s, {"x*t", "y*t"}), 12);
    CHECK(gk_estimate(series).kind == GrowthKind::Exponential);
  }
}

TEST_CASE("gk_estimate input checks") {
  GrowthSeries tiny{{1, 2, 3}, "", false};
  CHECK_THROWS_AS(gk_estimate(tiny), DomainError);
  AutomPtr s = share(monomial_autom({1, 1, 1, 2}));
  CHECK_THROWS_AS(graded_dims(parse_gens(s, {"x*t", "y*t^2"}), 4), InputError);
  GrowthOptions small;
  small.max_basis = 10;
  CHECK_THROWS_AS(graded_dims(parse_gens(s, {"x*t", "y*t"}), 6, small), ResourceCapExceeded);
}
