#include <random>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "qdt/catalog.hpp"
#include "qdt/hyperspace.hpp"

using namespace qdt;

namespace {

DistanceSpace cat(const char* name) { return *catalog_get(name).finite; }

}  // namespace

TEST_CASE("hausdorff examples") {
  GRel b = cat("space-b").d();
  CHECK(hausdorff(b, Mask(0b11), Mask(0b01), HausdorffKind::Reverse) == ExtVal(2));
  CHECK(hausdorff(b, Mask(0b11), Mask(0b01), HausdorffKind::Classical) == ExtVal(2));
  CHECK(hausdorff(b, Mask(0b01), Mask(0b11), HausdorffKind::Reverse) == ExtVal(0));
  CHECK(hausdorff(b, Mask(0b11), Mask(0), HausdorffKind::Reverse).is_inf());
  CHECK(hausdorff(b, Mask(0), Mask(0b10), HausdorffKind::Classical).is_zero());
  CHECK(hausdorff(b, Mask(0), Mask(0), HausdorffKind::Reverse).is_inf());
}

TEST_CASE("property: hausdorff distances match enumeration") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + i % 4;
    GRel d = oracle::random_closed_matrix(n, rng, i % 2 == 0);
    GRel rev = hausdorff_matrix(d, HausdorffKind::Reverse), cls = hausdorff_matrix(d, HausdorffKind::Classical);
    for (Mask y = 0; y <= full_mask(n); ++y)
      for (Mask z = 0; z <= full_mask(n); ++z) {
        Subset ys = to_subset(y), zs = to_subset(z);
        CHECK(rev(y, z) == oracle::hausdorff_reverse(d, ys, zs));
        CHECK(cls(y, z) == oracle::hausdorff_classical(d, ys, zs));
      }
  }
}

TEST_CASE("hausdorff functoriality") {
  GRel b = cat("space-b").d();
  CHECK(hausdorff_composition_check(b, b).all());
  CHECK(hausdorff_composition_check(b, upper_hemimetric(b)).all());
  CHECK(hausdorff_composition_check(cat("zero").d(), cat("zero").d()).all());
  std::mt19937_64 rng(59);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = 1 + i % 4;
    GRel d = oracle::random_closed_matrix(n, rng, false), e = oracle::random_closed_matrix(n, rng, false);
    HausdorffCompositionReport r = hausdorff_composition_check(d, e);
    CHECK(r.classical_below_reverse);
    CHECK(r.classical_composition);
    CHECK(r.mixed_composition);
    CHECK(r.reverse_composition);
  }
}

TEST_CASE("unions of directed families") {
  UnionReport r = union_completeness_check(cat("3-chain").d());
  CHECK(r.reverse_families > 0);
  CHECK(r.classical_families > 0);
  CHECK(r.reverse_ok);
  CHECK(r.classical_ok);
  CHECK(r.witness.empty());
  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    UnionReport q = union_completeness_check(oracle::random_closed_matrix(2 + i % 3, rng, false), 3);
    CHECK(q.reverse_ok);
    CHECK(q.classical_ok);
  }
}

TEST_CASE("noetherian spaces") {
  CHECK(is_noetherian(cat("zero").d()));
  CHECK(is_noetherian(cat("space-b").d()));
  std::mt19937_64 rng(67);
  for (int i = 0; i < 60; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 5, rng, i % 2 == 0);
    CHECK(noetherian_sampled(d, rng, 200) == is_noetherian(d));
    if (is_hemimetric(d)) CHECK(dHrev_hemimetric_check(d));
  }
}

TEST_CASE("relational completion of space-b") {
  RelationalCompletion c = relational_completion(cat("space-b"));
  CHECK(c.ideals == std::vector<Mask>{0b01, 0b10});
  CHECK(c.dist(0, 1) == ExtVal(1));
  CHECK(c.dist(1, 0) == ExtVal(2));
  CHECK(c.embedding == std::vector<std::size_t>{0, 1});
  CHECK(c.isometric);
  CHECK(c.is_domain());
  CHECK(c.basis);
}

TEST_CASE("relational completion of the 3-chain") {
  RelationalCompletion c = relational_completion(cat("3-chain"));
  CHECK(c.ideals.size() == 7);
  std::vector<Mask> images;
  for (std::size_t i : c.embedding) images.push_back(c.ideals[i]);
  CHECK(images == std::vector<Mask>{0b001, 0b011, 0b111});
  CHECK(c.isometric);
  CHECK(c.lower_is_classical);
}

TEST_CASE("relational completion edge cases") {
  RelationalCompletion one = relational_completion(cat("one-point"));
  CHECK(one.ideals == std::vector<Mask>{0b1});
  CHECK(one.dist == GRel(1, 1, kZero));
  CHECK_THROWS_AS(relational_completion(cat("strict-2-chain")), std::invalid_argument);
}

TEST_CASE("glued extension is valid exactly on predomains") {
  CHECK(completion_extension(cat("space-b")).valid());
  ExtensionReport np = completion_extension(cat("non-predomain"));
  CHECK(np.built);
  CHECK_FALSE(np.valid());
  CHECK_FALSE(completion_extension(cat("strict-2-chain")).built);
  std::mt19937_64 rng(71);
  for (int i = 0; i < 40; ++i) {
    GRel d = oracle::random_closed_matrix(1 + i % 4, rng, false);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < d.rows(); ++k) labels.push_back("x" + std::to_string(k));
    DistanceSpace sp(labels, d);
    if (!max_continuous(d)) continue;
    CHECK(completion_extension(sp).valid() == is_predomain(d, ContinuityKind::Max));
  }
}

TEST_CASE("universality of the ideal completion") {
  for (const char* name : {"3-chain", "space-b"}) {
    DistanceSpace s = cat(name);
    UniversalityReport r = universality_check(s, full_mask(s.size()));
    CHECK(r.hypotheses);
    CHECK(r.images_are_ideals);
    CHECK(r.isometric);
    CHECK(r.surjective == r.complete);
  }
  CHECK(ideals_of(cat("3-chain").d(), 0b111) == std::vector<Mask>{0b001, 0b011, 0b111});
}
