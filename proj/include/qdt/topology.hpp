#pragma once

#include <string>
#include <vector>

#include "qdt/space.hpp"

namespace qdt {

// A topology on {0..n-1} stored as its full list of open sets.  On a finite
// carrier every topology is determined by the minimal open neighbourhood of
// each point, which is kept alongside.
class FiniteTopology {
 public:
  FiniteTopology() = default;
  // Topology generated by the given subbasis (closed under ∩ then ∪).
  static FiniteTopology from_subbasis(std::size_t n, std::span<const Mask> subbasis, std::string tag);

  std::size_t size() const { return n_; }
  const std::vector<Mask>& opens() const { return opens_; }  // ascending
  bool is_open(Mask m) const;
  Mask minimal_neighbourhood(std::size_t p) const { return nbhd_[p]; }
  const std::string& tag() const { return tag_; }
  // p ⊑ q iff p lies in the closure of {q}.
  bool specializes(std::size_t p, std::size_t q) const { return has(nbhd_[p], q); }

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Mask> opens_;
  std::vector<Mask> nbhd_;
  std::string tag_;
};

// Radii where {x : d(c,x) < r} or {x : d(c,x) > r} can change: 0, every
// finite entry, midpoints of consecutive entries and one value past the max.
std::vector<Rational> thresholds(const GRel& d);

std::vector<Mask> subbasis(const GRel& d, TopologyKind kind, std::span<const Rational> radii);
FiniteTopology generate(const GRel& d, TopologyKind kind);
FiniteTopology generate(const GRel& d, TopologyKind kind, std::span<const Rational> radii);
FiniteTopology join(const FiniteTopology& a, const FiniteTopology& b);

Mask closure(const FiniteTopology& t, Mask y);
bool is_dense(const FiniteTopology& t, Mask b);

}  // namespace qdt
