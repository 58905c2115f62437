#include <random>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "qdt/catalog.hpp"
#include "qdt/topology.hpp"

using namespace qdt;

namespace {

constexpr TopologyKind kKinds[] = {TopologyKind::Alexandroff, TopologyKind::LowerBall, TopologyKind::Lower,
                                   TopologyKind::Smyth,       TopologyKind::Upper,     TopologyKind::Yoneda,
                                   TopologyKind::Symmetric};

GRel cat(const char* name) { return catalog_get(name).finite->d(); }

}  // namespace

TEST_CASE("generated topology examples") {
  FiniteTopology b = generate(cat("space-b"), TopologyKind::Alexandroff);
  CHECK(b.opens().size() == 4);  // discrete
  FiniteTopology chain = generate(cat("3-chain"), TopologyKind::Alexandroff);
  CHECK(chain.opens() == std::vector<Mask>{0b000, 0b100, 0b110, 0b111});
  for (TopologyKind k : kKinds) CHECK(generate(cat("zero"), k).opens() == std::vector<Mask>{0b00, 0b11});
}

TEST_CASE("closure and density") {
  FiniteTopology b = generate(cat("space-b"), TopologyKind::Alexandroff);
  CHECK(closure(b, 0b01) == 0b01);
  CHECK_FALSE(is_dense(b, 0b01));
  CHECK(is_dense(b, 0b11));
  FiniteTopology chain = generate(cat("3-chain"), TopologyKind::Alexandroff);
  CHECK(closure(chain, 0b010) == 0b011);
  CHECK(closure(chain, 0) == 0);
  CHECK(chain.specializes(0, 1));
  CHECK_FALSE(chain.specializes(1, 0));
}

TEST_CASE("joined topologies") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    GRel d = oracle::random_closed_matrix(2 + i % 4, rng, i % 3 == 0);
    CHECK(generate(d, TopologyKind::Smyth) ==
          join(generate(d, TopologyKind::Alexandroff), generate(d, TopologyKind::Lower)));
    CHECK(generate(d, TopologyKind::Yoneda) == join(generate(d, TopologyKind::Upper), generate(d, TopologyKind::Lower)));
    CHECK(generate(d, TopologyKind::Symmetric) ==
          join(generate(d, TopologyKind::Alexandroff), generate(d, TopologyKind::LowerBall)));
  }
}

TEST_CASE("property: generated families are topologies with idempotent closure") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 2 + i % 4;
    GRel d = oracle::random_closed_matrix(n, rng, false);
    for (TopologyKind k : kKinds) {
      FiniteTopology t = generate(d, k);
      CHECK(t.is_open(0));
      CHECK(t.is_open(full_mask(n)));
      for (Mask a : t.opens())
        for (Mask b : t.opens()) {
          CHECK(t.is_open(a | b));
          CHECK(t.is_open(a & b));
        }
      for (Mask y = 0; y <= full_mask(n); ++y) {
        Mask c = closure(t, y);
        CHECK((c & y) == y);
        CHECK(closure(t, c) == c);
      }
    }
  }
}

TEST_CASE("topology kind names round trip") {
  for (TopologyKind k : kKinds) CHECK(parse_topology_kind(to_string(k)) == k);
  CHECK_FALSE(parse_topology_kind("nonsense").has_value());
}
