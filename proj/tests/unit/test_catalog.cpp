#include <random>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "qdt/catalog.hpp"

using namespace qdt;

TEST_CASE("catalog entries") {
  const auto& names = catalog_names();
  CHECK(names.size() == 10);
  for (const std::string& n : names) {
    CatalogSpace c = catalog_get(n);
    CHECK(c.name == n);
    CHECK(c.is_finite() != c.formula.has_value());
    for (const Witness& w : c.witnesses) CHECK_MESSAGE(w.confirmed(), n << ": " << w.claim);
  }
  CHECK(finite_catalog().size() == 8);
  CHECK_THROWS_AS(catalog_get("no-such-space"), std::out_of_range);
}

TEST_CASE("formula spaces satisfy the triangle inequality on samples") {
  std::mt19937_64 rng(5);
  for (const char* n : {"right-projection", "n-chain"}) {
    CatalogSpace c = catalog_get(n);
    REQUIRE(c.formula.has_value());
    CHECK_FALSE(formula_triangle_violation(*c.formula, rng, 500).has_value());
  }
  // Squared distance breaks the triangle inequality.
  FormulaSpace broken{[](const Rational& a, const Rational& b) { return ExtVal((a - b) * (a - b)); },
                      [](std::mt19937_64& g) { return Rational(static_cast<std::int64_t>(g() % 4)); }};
  CHECK(formula_triangle_violation(broken, rng, 500).has_value());
}

TEST_CASE("profile names round trip") {
  for (Profile p : kAllProfiles) CHECK(parse_profile(to_string(p)) == p);
  CHECK_FALSE(parse_profile("bogus").has_value());
}

TEST_CASE("property: random matrices are closed, reproducible and match their profile") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Profile p = kAllProfiles[seed % 4];
    std::size_t n = 1 + seed % 6;
    GRel d = random_matrix(n, seed, p);
    CHECK(d.rows() == n);
    CHECK(oracle::triangle_ok(d));
    CHECK(matches_profile(d, p));
    CHECK(random_matrix(n, seed, p) == d);
    CHECK(random_space(n, seed, p).d() == d);
  }
  CHECK_THROWS(random_matrix(0, 1, Profile::Generic));
  CHECK_THROWS(random_matrix(13, 1, Profile::Generic));
}

TEST_CASE("property: min-plus closure is the least closed matrix above") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> v(0, 5), coin(0, 2);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + i % 5;
    GRel raw(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) raw(a, b) = coin(rng) == 0 ? kInf : ExtVal(v(rng));
    GRel c = minplus_closure(raw);
    CHECK(oracle::triangle_ok(c));
    CHECK(leq(c, raw));
    CHECK(minplus_closure(c) == c);
    // Every closed matrix below raw is below the closure.
    GRel path = raw;
    for (std::size_t k = 0; k < n; ++k) path = pointwise_min(path, oracle::compose(path, raw));
    CHECK(c == path);
  }
}
