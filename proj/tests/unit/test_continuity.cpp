#include <random>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "qdt/catalog.hpp"
#include "qdt/continuity.hpp"

using namespace qdt;

namespace {

GRel cat(const char* name) { return catalog_get(name).finite->d(); }

// Literal continuity: every point is the d-max of some directed subset.
bool max_continuous_brute(const GRel& d) {
  const std::size_t n = d.rows();
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (Mask m = 1; m <= full_mask(n) && !found; ++m) {
      Subset y = to_subset(m);
      found = is_directed_by_definition(d, y) && bound_check(d, y, x, SubsetRel::Max);
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("continuity examples") {
  for (ContinuityKind k : {ContinuityKind::Smyth, ContinuityKind::Max}) {
    CHECK(is_continuous(cat("space-b"), k));
    CHECK(is_continuous(cat("non-predomain"), k));
    CHECK_FALSE(is_continuous(cat("strict-2-chain"), k));
  }
  CHECK_FALSE(interpolation_check(cat("strict-2-chain"), Interpolation::SetSelf));
  CHECK(interpolation_check(cat("3-chain"), Interpolation::SetLeq));
  for (Interpolation c : {Interpolation::SetPhi, Interpolation::SetUniform, Interpolation::PhiSelf, Interpolation::SetLeq,
                          Interpolation::LeqSelf, Interpolation::LeqSetInPhi, Interpolation::LeqSelfUniform})
    CHECK(interpolation_check(cat("zero"), c));
}

TEST_CASE("hemimetric spaces are continuous predomains") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    GRel d = oracle::random_closed_matrix(2 + i % 4, rng, true);
    CHECK(smyth_continuous(d));
    CHECK(max_continuous(d));
    CHECK(is_predomain(d, ContinuityKind::Smyth));
    CHECK(is_predomain(d, ContinuityKind::Max));
  }
}

TEST_CASE("predomains and domains") {
  CHECK(is_domain(cat("space-b"), ContinuityKind::Smyth));
  CHECK(is_domain(cat("space-b"), ContinuityKind::Max));
  CHECK(is_continuous(cat("non-predomain"), ContinuityKind::Max));
  CHECK_FALSE(is_predomain(cat("non-predomain"), ContinuityKind::Max));
}

TEST_CASE("bases") {
  GRel b = cat("space-b");
  CHECK(is_basis(b, full_mask(2), BasisKind::Smyth));
  CHECK_FALSE(is_basis(b, Mask(0b01), BasisKind::Smyth));
  GRel np = cat("non-predomain");
  CHECK(is_basis(np, Mask(0b01), BasisKind::Smyth));
  CHECK(is_basis(np, Mask(0b01), BasisKind::Max));
}

TEST_CASE("restriction") {
  DistanceSpace np = *catalog_get("non-predomain").finite;
  std::vector<std::size_t> a{0};
  DistanceSpace r = restrict(np, a);
  CHECK(r.d() == GRel(1, 1, kZero));
  CHECK(upper_hemimetric(r.d()) == submatrix(upper_hemimetric(np.d()), a, a));
  std::vector<std::size_t> all{0, 1};
  CHECK(restrict(np, all) == np);
}

TEST_CASE("way-below examples") {
  GRel chain = cat("3-chain");
  CHECK(way_below(chain, WayBelowKind::Max) == leq_rel(chain));
  for (WayBelowKind k : {WayBelowKind::Yoneda, WayBelowKind::Smyth, WayBelowKind::Sup, WayBelowKind::Max})
    CHECK(way_below(cat("zero"), k) == GRel(2, 2, kZero));
  GRel b = cat("space-b");
  CHECK(leq(b, way_below(b, WayBelowKind::Sup)));
}

TEST_CASE("duality examples") {
  GRel chain = cat("3-chain");
  DualityReport r = duality_check(chain, chain);
  CHECK(r.topological_side1);
  CHECK(r.topological_side2);
  CHECK(r.relational_side1);
  CHECK(r.relational_side2);
  GRel b = cat("space-b");
  r = duality_check(b, b);
  CHECK(r.topological_side1);
  CHECK(r.relational_side2);
  CHECK(r.consistent());
  r = duality_check(b, GRel(2, 2, kZero));
  CHECK_FALSE(r.topological_side1);
  CHECK_FALSE(r.topological_side2);
  CHECK_FALSE(r.relational_side1);
  CHECK_FALSE(r.relational_side2);
}

TEST_CASE("property: continuity deciders agree with each other and with brute force") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 150; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 5, rng, false);
    const bool brute = max_continuous_brute(d);
    CHECK(max_continuous(d) == brute);
    CHECK(max_continuous_criterion(d) == brute);
    CHECK(smyth_continuous(d) == smyth_continuous_by_clusters(d));
    CHECK(smyth_continuous(d) == interpolation_check(d, Interpolation::SetPhi));
  }
}

TEST_CASE("property: basis characterisations agree on continuous spaces") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 80; ++i) {
    std::size_t n = 2 + i % 4;
    GRel d = oracle::random_closed_matrix(n, rng, i % 2 == 0);
    if (!smyth_continuous(d)) continue;
    for (Mask m = 1; m <= full_mask(n); ++m) {
      for (BasisKind k : {BasisKind::Smyth, BasisKind::Max}) {
        const bool direct = is_basis(d, m, k);
        CHECK(basis_by_composition(d, m, k) == direct);
        CHECK(basis_by_density(d, m, k) == direct);
      }
      if (is_basis(d, m, BasisKind::Smyth)) {
        Subset b = to_subset(m);
        CHECK(upper_hemimetric(submatrix(d, b, b)) == submatrix(upper_hemimetric(d), b, b));
      }
    }
  }
}
