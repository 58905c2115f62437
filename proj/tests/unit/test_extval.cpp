#include <limits>
#include <random>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "qdt/extval.hpp"

using namespace qdt;

namespace {
ExtVal v(const char* s) { return ExtVal::parse(s); }
}  // namespace

TEST_CASE("rational values are reduced and printed canonically") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse(" 10/4 ").str() == "5/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("rational overflow throws instead of wrapping") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rational(big) + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(Rational(big) * Rational(2), std::overflow_error);
  CHECK(Rational(big) - Rational(1) == Rational(big - 1));
}

TEST_CASE("extended values: parsing and order") {
  CHECK(v("inf").is_inf());
  CHECK(v("3/6") == ExtVal::ratio(1, 2));
  CHECK(v("0").is_zero());
  CHECK(v("100") < kInf);
  CHECK_THROWS_AS(ExtVal(Rational(-1)), std::domain_error);
  CHECK_THROWS(ExtVal::parse("-1"));
  CHECK(v("7/3").str() == "7/3");
}

TEST_CASE("addition saturates at infinity") {
  CHECK(v("1/2") + v("1/3") == v("5/6"));
  CHECK(kInf + kZero == kInf);
  CHECK(v("2") + kInf == kInf);
}

TEST_CASE("truncated subtraction") {
  CHECK(tminus(v("1"), v("2")) == kZero);
  CHECK(tminus(kInf, v("3")) == kInf);
  CHECK(tminus(kInf, kInf) == kZero);
  CHECK(tminus(v("3"), kInf) == kZero);
  CHECK(tminus(v("5/2"), v("1")) == v("3/2"));
}

TEST_CASE("set infimum and supremum conventions") {
  std::vector<ExtVal> empty;
  CHECK(inf_set(empty).is_inf());
  CHECK(sup_set(empty).is_zero());
  std::vector<ExtVal> s{v("1/2"), kInf, v("2")};
  CHECK(inf_set(s) == v("1/2"));
  CHECK(sup_set(s) == kInf);
}

TEST_CASE("scaling by naturals") {
  CHECK(scale(3, v("1/2")) == v("3/2"));
  CHECK(scale(0, kInf) == kZero);
  CHECK(scale(2, kInf) == kInf);
}

TEST_CASE("signed differences") {
  CHECK(SignedExt::diff(kInf, kInf) == SignedExt(Rational(0)));
  CHECK(SignedExt::diff(v("1"), kInf) == SignedExt::neg_inf());
  CHECK(SignedExt::diff(kInf, v("1")) == SignedExt::pos_inf());
  CHECK(SignedExt::diff(v("1"), v("3")) == SignedExt(Rational(-2)));
  CHECK(SignedExt::neg_inf() < SignedExt(Rational(-100)));
  CHECK(SignedExt(Rational(-1, 2)).positive_part() == kZero);
  CHECK(SignedExt::pos_inf().positive_part() == kInf);
}

TEST_CASE("property: truncated subtraction is adjoint to addition") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(0, 12), den(1, 4), coin(0, 4);
  auto draw = [&] { return coin(rng) == 0 ? kInf : ExtVal::ratio(num(rng), den(rng)); };
  for (int i = 0; i < 2000; ++i) {
    ExtVal a = draw(), b = draw(), c = draw();
    CHECK((tminus(a, b) <= c) == (a <= b + c));
    CHECK(tminus(a, b) == oracle::monus(a, b));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("property: parse and print round trip") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> num(0, 1000), den(1, 97);
  for (int i = 0; i < 500; ++i) {
    ExtVal x = ExtVal::ratio(num(rng), den(rng));
    CHECK(ExtVal::parse(x.str()) == x);
  }
  CHECK(ExtVal::parse(kInf.str()) == kInf);
}
