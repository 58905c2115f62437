#include <random>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "qdt/catalog.hpp"
#include "qdt/space.hpp"

using namespace qdt;

namespace {

DistanceSpace cat(const char* name) { return *catalog_get(name).finite; }

Subset subset_of(const DistanceSpace& s, std::initializer_list<const char*> labels) {
  Subset out;
  for (const char* l : labels) out.push_back(*s.index_of(l));
  return out;
}

}  // namespace

TEST_CASE("construction validates the triangle inequality") {
  GRel bad = GRel::from_rows({{kZero, ExtVal(5), ExtVal(1)}, {kInf, kZero, kInf}, {kInf, ExtVal(1), kZero}});
  try {
    DistanceSpace s({"a", "b", "c"}, bad);
    FAIL("expected a triangle violation");
  } catch (const TriangleViolation& e) {
    CHECK(e.x == 0);
    CHECK(e.y == 1);
    CHECK(e.z == 2);
    CHECK(std::string(e.what()).find("a") != std::string::npos);
  }
  CHECK_THROWS_AS(DistanceSpace({"a", "a"}, GRel(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(DistanceSpace({"a"}, GRel(2, 2)), DimensionError);
}

TEST_CASE("hemimetric examples") {
  DistanceSpace b = cat("space-b");
  CHECK(upper_hemimetric(b.d()) == b.d());
  CHECK(lower_hemimetric(b.d()) == b.d());
  DistanceSpace chain = cat("3-chain");
  CHECK(upper_hemimetric(chain.d()) == chain.d());
  CHECK(lower_hemimetric(chain.d()) == chain.d());
  DistanceSpace np = cat("non-predomain");
  CHECK(upper_hemimetric(np.d())(1, 0).is_inf());
  CHECK(lower_hemimetric(np.d())(1, 0).is_zero());
}

TEST_CASE("classical relations") {
  DistanceSpace b = cat("space-b");
  CHECK(leq_rel(b.d()) == GRel::identity(2));
  GRel eps = ltfn_eps(b.d(), Rational(3, 2));
  CHECK(eps(0, 1).is_zero());
  CHECK(eps(1, 0).is_inf());
  DistanceSpace chain = cat("3-chain");
  CHECK(strict_rel(chain.d()) == chain.d());
}

TEST_CASE("directed subsets and bounds") {
  DistanceSpace chain = cat("3-chain"), b = cat("space-b"), np = cat("non-predomain");
  CHECK(is_directed(chain.d(), subset_of(chain, {"a", "b"})));
  CHECK_FALSE(is_directed(b.d(), subset_of(b, {"p", "q"})));
  CHECK(is_directed(b.d(), subset_of(b, {"q"})));
  CHECK(bound_check(chain.d(), subset_of(chain, {"a", "b"}), 1, SubsetRel::Max));
  CHECK(bound_check(np.d(), subset_of(np, {"a"}), 1, SubsetRel::Max));
  CHECK(bound_check(b.d(), subset_of(b, {"p"}), 0, SubsetRel::Max));
}

TEST_CASE("ultimately periodic sequences") {
  DistanceSpace b = cat("space-b");
  CHECK(seq_cauchy(b.d(), UPSeq{{1}, {0}}, CauchyMode::Cauchy));
  CHECK_FALSE(seq_cauchy(b.d(), UPSeq{{}, {0, 1}}, CauchyMode::Cauchy));
  CHECK(seq_cauchy(b.d(), UPSeq{{}, {1}}, CauchyMode::Cauchy));
  CHECK_THROWS(UPSeq{{}, {}}.validate(2));
  CHECK_THROWS(UPSeq{{}, {5}}.validate(2));
  UPSeq s{{3}, {0, 1}};
  CHECK(s.at(0) == 3);
  CHECK(s.at(1) == 0);
  CHECK(s.at(4) == 1);
}

TEST_CASE("sequence limits") {
  DistanceSpace np = cat("non-predomain");
  for (TopologyKind k : {TopologyKind::Alexandroff, TopologyKind::Smyth, TopologyKind::Yoneda})
    CHECK(seq_limit_check(np.d(), UPSeq{{}, {0}}, 0, k));
  CHECK(seq_limit_check(np.d(), UPSeq{{}, {0}}, 1, TopologyKind::Smyth));
  CHECK_FALSE(seq_limit_check(np.d(), UPSeq{{}, {0}}, 1, TopologyKind::Yoneda));
}

TEST_CASE("quotients") {
  DistanceSpace b = cat("space-b");
  CHECK(quotient(b).space.size() == 2);
  Quotient q = quotient(cat("duplicate-point"));
  CHECK(q.space.size() == 2);
  CHECK(q.class_of[0] == q.class_of[1]);
  CHECK(quotient(q.space).space.size() == 2);
}

TEST_CASE("property: hemimetrics match the brute-force oracle") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = 1 + i % 5;
    GRel d = oracle::random_closed_matrix(n, rng, i % 2 == 0);
    REQUIRE(oracle::triangle_ok(d));
    CHECK_FALSE(find_triangle_violation(d).has_value());
    CHECK(upper_hemimetric(d) == oracle::upper(d));
    CHECK(lower_hemimetric(d) == oracle::lower(d));
    if (is_hemimetric(d)) {
      CHECK(upper_hemimetric(d) == d);
      CHECK(lower_hemimetric(d) == d);
    }
  }
}

TEST_CASE("property: directedness agrees with its literal definition") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 2 + i % 4;
    GRel d = oracle::random_closed_matrix(n, rng, false);
    for (Mask m = 1; m < (Mask(1) << n); ++m) {
      Subset y = to_subset(m);
      CHECK(is_directed(d, y) == is_directed_by_definition(d, y));
    }
  }
}

TEST_CASE("subset masks") {
  CHECK(to_mask(to_subset(0b1011)) == 0b1011);
  CHECK(full_mask(3) == 0b111);
  CHECK_THROWS_AS(require_enumerable(13, "test"), SizeBoundError);
}
