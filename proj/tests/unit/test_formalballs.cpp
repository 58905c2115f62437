#include <random>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "qdt/catalog.hpp"
#include "qdt/formalballs.hpp"

using namespace qdt;

namespace {

DistanceSpace cat(const char* name) { return *catalog_get(name).finite; }

DistanceSpace labelled(const GRel& d) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < d.rows(); ++k) labels.push_back("x" + std::to_string(k));
  return DistanceSpace(labels, d);
}

const Rational kRadii[] = {Rational(0), Rational(1, 2), Rational(1), Rational(3)};

std::vector<FormalBall> ball_grid(std::size_t n) {
  std::vector<FormalBall> out;
  for (std::size_t x = 0; x < n; ++x)
    for (const Rational& r : kRadii) out.push_back({x, r});
  return out;
}

}  // namespace

TEST_CASE("ball distance examples") {
  GRel b = cat("space-b").d();
  CHECK(dplus(b, make_ball(0, Rational(3)), make_ball(1, Rational(1))).is_zero());
  CHECK(dplus(b, make_ball(1, Rational(0)), make_ball(0, Rational(1))) == ExtVal(3));
  CHECK(dplus(cat("strict-2-chain").d(), make_ball(0, Rational(5)), make_ball(0, Rational(0))).is_inf());
  CHECK_THROWS(make_ball(0, Rational(-1)));
  CHECK(make_ball(1, Rational(1, 2)).str(nullptr).find("1/2") != std::string::npos);
}

TEST_CASE("ball orders") {
  GRel b = cat("space-b").d();
  FormalBall big{0, Rational(3)}, small{1, Rational(2)};
  CHECK(ball_leq(b, big, small));
  CHECK_FALSE(ball_lt(b, big, small));  // d(p,q) = 1 = 3 - 2
  CHECK(ball_lt(b, big, FormalBall{1, Rational(1)}));
  BallOrders o = ball_orders(b, big, big);
  CHECK(o.leq);
  CHECK_FALSE(o.lt);
}

TEST_CASE("property: ball distance matches its closed form") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 40; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 4, rng, false);
    for (const FormalBall& a : ball_grid(d.rows()))
      for (const FormalBall& c : ball_grid(d.rows())) {
        CHECK(dplus(d, a, c) == oracle::ball_distance(d, a, c));
        CHECK(ball_leq(d, a, c) == dplus(d, a, c).is_zero());
      }
  }
}

TEST_CASE("lower agreement criterion examples") {
  CHECK(underline_agreement(cat("space-b").d()).criterion);
  CHECK(underline_agreement(cat("3-chain").d()).criterion);
  CHECK_FALSE(underline_agreement(cat("strict-2-chain").d()).criterion);
  CHECK_FALSE(underline_agreement(cat("void-point").d()).criterion);
  SignedMatrix L = lower_signed(cat("strict-2-chain").d());
  CHECK(L[0][1] == SignedExt::neg_inf());
}

TEST_CASE("property: lower hemimetric of d+ agrees with the lifted lower hemimetric exactly under the criterion") {
  std::mt19937_64 rng(79);
  int with = 0, without = 0;
  for (int i = 0; i < 80; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 4, rng, i % 3 == 0);
    std::vector<ExtVal> extra;
    for (const Rational& r : kRadii) extra.push_back(ExtVal(r));
    std::vector<Rational> grid = oracle::radius_grid(d, extra);
    GRel low = oracle::lower(d), up = oracle::upper(d);
    bool agree = true;
    for (const FormalBall& a : ball_grid(d.rows()))
      for (const FormalBall& c : ball_grid(d.rows())) {
        ExtVal direct = oracle::lower_of_dplus(d, a, c, grid);
        CHECK(lower_of_dplus(d, a, c) == direct);
        CHECK(direct <= dplus(low, a, c));
        CHECK(upper_of_dplus(d, a, c) == oracle::upper_of_dplus(d, a, c, grid));
        CHECK(upper_of_dplus(d, a, c) <= dplus(up, a, c));
        if (direct != dplus(low, a, c)) agree = false;
      }
    const bool criterion = underline_agreement(d).criterion;
    CHECK(agree == criterion);
    (criterion ? with : without)++;
  }
  CHECK(with > 0);
  CHECK(without > 0);
}

TEST_CASE("distance recovery") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 60; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 4, rng, i % 2 == 0);
    SignedMatrix L = lower_signed(d);
    const bool criterion = underline_agreement(d).criterion;
    for (std::size_t x = 0; x < d.rows(); ++x)
      for (std::size_t y = 0; y < d.rows(); ++y) {
        CHECK(recover_weak(d, x, y) == d(x, y));
        if (criterion) CHECK(recover_strict(d, L, x, y) == d(x, y));
      }
  }
}

TEST_CASE("threshold search") {
  std::vector<Rational> c{Rational(0), Rational(1), Rational(2)};
  CHECK(threshold_infimum(c, [](const Rational& r) { return r > Rational(1); }) == ExtVal(1));
  CHECK(threshold_infimum(c, [](const Rational&) { return true; }).is_zero());
  CHECK(threshold_infimum(c, [](const Rational&) { return false; }).is_inf());
}

TEST_CASE("sampled ball laws") {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 30; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 4, rng, i % 2 == 0);
    CHECK(ball_composition_check(d, rng, 50).ok);
    CHECK(hemimetric_comparison(d, rng, 50).ok);
    if (!underline_agreement(d).criterion) continue;
    InterpolationReport ip = interpolation_laws(d, rng, 50);
    CHECK(ip.set_law.ok);
    CHECK(ip.strict_law.ok);
    MaximaReport mx = ball_maxima_check(d, rng, 50);
    CHECK(mx.finite_forward.ok);
    CHECK(mx.open_agree.ok);
  }
}

TEST_CASE("composition of ball distances") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 30; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 3, rng, false), e = oracle::random_closed_matrix(1 + i % 3, rng, false);
    GRel de = oracle::compose(d, e);
    for (const FormalBall& a : ball_grid(d.rows()))
      for (const FormalBall& c : ball_grid(d.rows())) CHECK(dplus_compose(d, e, a, c) == dplus(de, a, c));
  }
}

TEST_CASE("apertures and radius functions") {
  CHECK(aperture(std::vector<FormalBall>{}).is_inf());
  std::vector<FormalBall> bs{{0, Rational(2)}, {1, Rational(1, 2)}};
  CHECK(aperture(bs) == ExtVal(Rational(1, 2)));
  GRel b = cat("space-b").d();
  RadiusFn col = column_radius(b, 0);
  CHECK(col.rho == std::vector<ExtVal>{kZero, ExtVal(2)});
  CHECK(aperture(col).is_zero());
  CHECK(aperture(shifted(col, Rational(1))) == ExtVal(1));
  CHECK(is_round(b, col));
  CHECK(radius_directed(b, col));
  CHECK(cluster_radius_functions(b).size() == 2);
  CHECK(open_family(col).open);
}

TEST_CASE("property: ideal hausdorff distance matches truncated ball enumeration") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 40; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 4, rng, i % 2 == 0);
    std::vector<RadiusFn> fs = cluster_radius_functions(d);
    const std::size_t base = fs.size();
    for (std::size_t k = 0; k < base; ++k) fs.push_back(shifted(fs[k], Rational(1)));
    std::vector<ExtVal> extra;
    for (const RadiusFn& f : fs) extra.insert(extra.end(), f.rho.begin(), f.rho.end());
    std::vector<Rational> grid = oracle::radius_grid(d, extra);
    const Rational R = grid.back();
    for (const RadiusFn& I : fs) {
      std::vector<FormalBall> ti = oracle::truncated_ideal(I, grid, R);
      CHECK(oracle::infimum_radii(ti, d.rows()) == I.rho);
      for (const RadiusFn& J : fs) {
        std::vector<FormalBall> tj = oracle::truncated_ideal(J, grid, R);
        for (HausdorffKind k : {HausdorffKind::Reverse, HausdorffKind::Classical})
          CHECK(ideal_hausdorff(d, I, J, k) == oracle::ball_hausdorff(d, ti, tj, k));
      }
    }
  }
}

TEST_CASE("property: column ideals reproduce hemimetric distances") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 40; ++i) {
    GRel d = random_matrix(1 + i % 5, 500 + i, Profile::Hemimetric);
    for (std::size_t x = 0; x < d.rows(); ++x)
      for (std::size_t y = 0; y < d.rows(); ++y)
        CHECK(ideal_hausdorff(d, column_radius(d, x), column_radius(d, y), HausdorffKind::Reverse) == d(x, y));
  }
}

TEST_CASE("smyth completion examples") {
  SmythCompletion c = smyth_completion(cat("space-b"));
  CHECK(c.family.size() == 2);
  CHECK(c.reverse == cat("space-b").d());
  CHECK(c.isometric);
  CHECK(c.domain);
  CHECK(c.surjective);
  SmythCompletion one = smyth_completion(cat("one-point"));
  CHECK(one.family.size() == 1);
  CHECK_THROWS_AS(smyth_completion(cat("strict-2-chain")), std::invalid_argument);
}

TEST_CASE("property: smyth completion is a contracting basis embedding") {
  for (int i = 0; i < 60; ++i) {
    DistanceSpace s = random_space(1 + i % 5, 900 + i, kAllProfiles[i % 4]);
    if (!smyth_continuous(s.d())) continue;
    SmythCompletion c = smyth_completion(s);
    CHECK(c.lower_is_classical);
    CHECK(c.domain);
    CHECK(c.basis);
    CHECK(c.contracting);
    CHECK(c.isometric == is_predomain(s.d(), ContinuityKind::Smyth));
  }
}

TEST_CASE("ball domain examples") {
  GRel b = cat("space-b").d();
  BallDomainReport self = ball_domain_check(b, b);
  CHECK(self.left);
  CHECK(self.consistent());
  GRel chain = cat("3-chain").d();
  CHECK(ball_domain_check(chain, chain).left);
  BallDomainReport zero = ball_domain_check(b, GRel(2, 2, kZero));
  CHECK_FALSE(zero.left);
  CHECK(zero.consistent());
  CHECK(lower_strict_closed(b, {0, Rational(2)}, {1, Rational(1)}));
  CHECK_FALSE(lower_strict_closed(b, {1, Rational(0)}, {0, Rational(0)}));
}

TEST_CASE("property: strict lower order closed form matches probing") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 40; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 3, rng, i % 2 == 0);
    std::vector<Rational> probes = probe_radii(d, kRadii);
    for (const FormalBall& a : ball_grid(d.rows()))
      for (const FormalBall& c : ball_grid(d.rows()))
        CHECK(lower_strict_closed(d, a, c) == lower_strict_by_probes(d, a, c, probes));
  }
}

TEST_CASE("transfer and hemimetric reports") {
  for (int i = 0; i < 40; ++i) {
    GRel d = random_matrix(1 + i % 4, 1300 + i, kAllProfiles[i % 4]);
    BallTransferReport t = ball_domain_transfer(d);
    CHECK(t.completeness_ok());
    CHECK(t.continuity_ok());
    if (is_hemimetric(d)) CHECK(smyth_completeness_check(labelled(d)).all());
  }
}
