#include <doctest.h>

#include <algorithm>
#include <set>

#include "skewfree/kernels.hpp"
#include "support/gen.hpp"

using namespace skewfree;

TEST_CASE("parallel and serial products agree") {
  testgen::Gen g(21);
  for (int k = 0; k < 60; ++k) {
    Mode m = g.coin() ? Mode::Poly : Mode::Laurent;
    Poly a = g.poly(m, 40, 8), b = g.poly(m, 40, 8);
    CHECK(kernels::parallel::mul(a, b) == kernels::serial::mul(a, b));
  }
}

TEST_CASE("expand_level matches the serial enumeration and keeps order") {
  testgen::Gen g(22);
  std::vector<Poly> prefixes;
  for (int k = 0; k < 16; ++k) prefixes.push_back(g.nonzero_poly(Mode::Poly, 5, 4));
  Poly fa = g.nonzero_poly(Mode::Poly, 3, 2), fb = g.nonzero_poly(Mode::Poly, 3, 2);
  auto s = kernels::serial::expand_level(prefixes, fa, fb);
  auto p = kernels::parallel::expand_level(prefixes, fa, fb);
  REQUIRE(s.size() == 32);
  CHECK(s == p);
  CHECK(s[0] == prefixes[0] * fa);
  CHECK(s[1] == prefixes[0] * fb);
}

TEST_CASE("iterated sumset_step equals the brute-force sumset") {
  testgen::Gen g(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(g.integer(1, 10));
    std::vector<std::pair<ExpVec, ExpVec>> choices;
    for (int k = 0; k < n; ++k)
      choices.push_back({{g.integer(-3, 3), g.integer(-3, 3)}, {g.integer(-3, 3), g.integer(-3, 3)}});
    std::vector<ExpVec> set{{0, 0}};
    for (const auto& [u, v] : choices) set = kernels::parallel::sumset_step(set, u, v);
    CHECK(set.size() == kernels::serial::sumset_bruteforce(choices));
    CHECK(std::is_sorted(set.begin(), set.end(), kernels::lex_less));
    CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
  }
}
