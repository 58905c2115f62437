#include <random>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "qdt/grel.hpp"

using namespace qdt;

namespace {

GRel rows(std::initializer_list<std::initializer_list<const char*>> r) {
  std::vector<std::vector<ExtVal>> out;
  for (auto row : r) {
    out.emplace_back();
    for (const char* s : row) out.back().push_back(ExtVal::parse(s));
  }
  return GRel::from_rows(out);
}

const GRel kSpaceB = rows({{"0", "1"}, {"2", "0"}});
const GRel kChain = rows({{"0", "0", "0"}, {"inf", "0", "0"}, {"inf", "inf", "0"}});

GRel random_rel(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 8), den(1, 4), coin(0, 3);
  GRel g(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) g(i, j) = coin(rng) == 0 ? kInf : ExtVal::ratio(num(rng), den(rng));
  return g;
}

}  // namespace

TEST_CASE("composition examples") {
  CHECK(compose(kSpaceB, kSpaceB) == kSpaceB);
  CHECK(compose(kSpaceB, GRel::identity(2)) == kSpaceB);
  GRel lt = rows({{"inf", "0", "0"}, {"inf", "inf", "0"}, {"inf", "inf", "inf"}});
  CHECK(leq(lt, compose(lt, lt)));  // zero set of lt∘lt inside lt
  GRel not_transitive = rows({{"inf", "0", "inf"}, {"inf", "inf", "0"}, {"inf", "inf", "inf"}});
  CHECK_FALSE(leq(not_transitive, compose(not_transitive, not_transitive)));
}

TEST_CASE("composition rejects mismatched shapes") {
  CHECK_THROWS_AS(compose(GRel(2, 3), GRel(2, 3)), DimensionError);
  CHECK_THROWS_AS(pointwise_max(GRel(2, 2), GRel(3, 3)), DimensionError);
}

TEST_CASE("uniform order examples") {
  CHECK(uniform_leq(kSpaceB, kSpaceB));
  GRel pq = GRel::characteristic(2, 2, [](std::size_t x, std::size_t y) { return x == 0 && y == 1; });
  CHECK_FALSE(uniform_leq(pq, kSpaceB));
}

TEST_CASE("modulus examples") {
  auto m = modulus(kSpaceB, kSpaceB);
  CHECK(m.at(kZero) == kZero);
  CHECK(m.at(ExtVal(1)) == ExtVal(1));
  CHECK(m.at(ExtVal(2)) == ExtVal(2));
  auto z = modulus(GRel(2, 2), kSpaceB);
  for (auto& [r, v] : z) CHECK(v.is_zero());
  auto all = modulus(kSpaceB, GRel(2, 2));
  CHECK(all.at(kZero) == ExtVal(2));
}

TEST_CASE("phi composition examples") {
  CHECK(phi_compose(kSpaceB, kSpaceB) == kSpaceB);
  CHECK(phi_compose(kChain, kChain) == kChain);
  CHECK(phi_compose(kSpaceB, GRel(2, 2)) == compose(kSpaceB, GRel(2, 2)));
}

TEST_CASE("op and sym") {
  CHECK(op(op(kSpaceB)) == kSpaceB);
  CHECK(sym(kSpaceB) == rows({{"0", "2"}, {"2", "0"}}));
  GRel s = sym(kSpaceB);
  CHECK(sym(s) == s);
}

TEST_CASE("property: composition matches the brute-force oracle and is associative") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    GRel a = random_rel(3, 4, rng), b = random_rel(4, 2, rng), c = random_rel(2, 3, rng);
    CHECK(compose(a, b) == oracle::compose(a, b));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("property: phi composition is the limit of a∘(n·b)") {
  std::mt19937_64 rng(13);
  const std::uint64_t big = 100000;
  for (int i = 0; i < 200; ++i) {
    GRel a = random_rel(3, 3, rng), b = random_rel(3, 3, rng);
    GRel phi = phi_compose(a, b), approx = compose(a, scale(big, b));
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) {
        if (phi(x, y).is_finite())
          CHECK(phi(x, y) == approx(x, y));
        else
          CHECK(approx(x, y) >= ExtVal(1000));
      }
    GRel left = phi_left(a, b), left_approx = compose(scale(big, a), b);
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) {
        if (left(x, y).is_finite())
          CHECK(left(x, y) == left_approx(x, y));
        else
          CHECK(left_approx(x, y) >= ExtVal(1000));
      }
  }
}

TEST_CASE("property: pointwise order refines the uniform order") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    GRel a = random_rel(3, 3, rng), b = random_rel(3, 3, rng);
    GRel lo = pointwise_min(a, b);
    CHECK(leq(lo, a));
    CHECK(uniform_leq(lo, a));
    if (leq(a, b)) CHECK(uniform_leq(a, b));
    CHECK(leq(a, pointwise_max(a, b)));
  }
}

TEST_CASE("zero sets and submatrices") {
  GRel z = zero_set(kSpaceB);
  CHECK(z == GRel::identity(2));
  std::vector<std::size_t> keep{1};
  CHECK(submatrix(kSpaceB, keep, keep) == rows({{"0"}}));
  CHECK(kChain.is_characteristic());
  CHECK_FALSE(kSpaceB.is_characteristic());
  CHECK(kSpaceB.values() == std::vector<ExtVal>{kZero, ExtVal(1), ExtVal(2)});
}
