#include <doctest.h>

#include <map>

#include "skewfree/linalg.hpp"
#include "support/gen.hpp"

using namespace skewfree;

namespace {

// Dense Gauss-Jordan over Q on a coefficient table indexed by exponent pairs.
std::size_t dense_rank(const std::vector<Poly>& polys) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> col;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) col.emplace(std::make_pair(t.e.i, t.e.j), col.size());
  std::vector<std::vector<Rat>> a(polys.size(), std::vector<Rat>(col.size()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& t : polys[r].terms()) a[r][col[{t.e.i, t.e.j}]] = t.c;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < col.size() && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      Rat f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < col.size(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Poly> random_family(testgen::Gen& g, int rows, bool with_dependencies) {
  std::vector<Poly> polys;
  for (int r = 0; r < rows; ++r) {
    if (with_dependencies && r >= 2 && g.integer(0, 2) == 0) {
      Poly combo = polys[static_cast<std::size_t>(g.integer(0, r - 1))] * g.rat() +
                   polys[static_cast<std::size_t>(g.integer(0, r - 1))] * g.rat();
      polys.push_back(combo);
    } else {
      polys.push_back(g.poly(Mode::Laurent, 5, 3));
    }
  }
  return polys;
}

}  // namespace

TEST_CASE("small hand examples") {
  std::vector<Poly> p{Poly::parse("x + y"), Poly::parse("x - y"), Poly::parse("2x")};
  CHECK(linalg::rank_rational(p) == 2);
  CHECK(linalg::rank_bareiss(linalg::assemble(p)) == 2);
  auto dep = linalg::first_dependency(p);
  REQUIRE(dep.has_value());
  CHECK(dep->index == 2);
  CHECK(dep->coeffs == std::vector<Rat>{Rat(-1), Rat(-1), Rat(1)});
  std::vector<Poly> indep{Poly::parse("x"), Poly::parse("y"), Poly::parse("1/3x*y")};
  CHECK_FALSE(linalg::first_dependency(indep).has_value());
  CHECK(linalg::rank(linalg::assemble(indep)) == 3);
  std::vector<Poly> with_zero{Poly::parse("x"), Poly()};
  CHECK(linalg::first_dependency(with_zero)->index == 1);
}

TEST_CASE("assembly scales rows to integers over shared columns") {
  std::vector<Poly> p{Poly::parse("1/2x + 1/3y"), Poly::parse("y")};
  auto m = linalg::assemble(p);
  CHECK(m.ncols == 2);
  CHECK(m.nonzeros() == 3);
  for (const auto& row : m.rows)
    for (const auto& v : row.vals) CHECK(v != 0);
}

TEST_CASE("all rank routes agree with the dense oracle") {
  testgen::Gen g(51);
  for (int trial = 0; trial < 200; ++trial) {
    auto polys = random_family(g, static_cast<int>(g.integer(1, 12)), g.coin());
    const std::size_t want = dense_rank(polys);
    auto m = linalg::assemble(polys);
    CHECK(linalg::rank_bareiss(m) == want);
    CHECK(linalg::rank(m, linalg::RankMethod::Auto) == want);
    CHECK(linalg::rank_rational(polys) == want);
    CHECK(linalg::rank_modp(m) <= want);
  }
}

TEST_CASE("first_dependency is a genuine, first dependency") {
  testgen::Gen g(52);
  for (int trial = 0; trial < 200; ++trial) {
    auto polys = random_family(g, static_cast<int>(g.integer(2, 10)), true);
    auto dep = linalg::first_dependency(polys);
    if (!dep) {
      CHECK(dense_rank(polys) == polys.size());
      continue;
    }
    REQUIRE(dep->coeffs.size() == dep->index + 1);
    CHECK(dep->coeffs.back() == Rat(1));
    Poly sum(Mode::Laurent);
    for (std::size_t k = 0; k <= dep->index; ++k) sum += polys[k] * dep->coeffs[k];
    CHECK(sum.is_zero());
    std::vector<Poly> prefix(polys.begin(), polys.begin() + static_cast<std::ptrdiff_t>(dep->index));
    CHECK(dense_rank(prefix) == prefix.size());
  }
}
