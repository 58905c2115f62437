#pragma once

#include "qdt/space.hpp"
#include "qdt/topology.hpp"

namespace qdt {

// Smyth: Cauchy sequences converging in the Smyth topology.  Max: directed
// subsets with a d-max.  Yoneda and Sup are measured against a second
// distance e (Yoneda topology of e, e-sup) while Cauchy/directed stay with d.
enum class ContinuityKind { Smyth, Max, Yoneda, Sup };
const char* to_string(ContinuityKind k);

// ∀x ∃z: d(z,z) = 0 and column z = column x.  No size bound.
bool smyth_continuous(const GRel& d);
// ∀x some zero-cluster converges to x in the Smyth topology.
bool smyth_continuous_by_clusters(const GRel& d);
// ∀x ∃ directed Y with x = d-max Y, by enumeration.
bool max_continuous(const GRel& d);
// On finite carriers a directed Y has a top y with column y = d Y, so
// d-max continuity reduces to the Smyth criterion; no size bound.
bool max_continuous_criterion(const GRel& d);
bool is_continuous(const GRel& d, ContinuityKind kind);
bool is_continuous(const GRel& d, const GRel& e, ContinuityKind kind);

// Smyth: every zero-cluster has a Smyth limit.  Max: every directed subset
// has a d-max.  Yoneda: every zero-cluster has a Yoneda limit.  Sup: every
// directed subset has a d-sup.
bool is_complete(const GRel& d, ContinuityKind kind);

// Continuity with directedness taken from a separate relation r (as a 0/inf
// matrix) and maxima from d: ∀x ∃ r-directed Y with x = d-max Y.
bool relation_max_continuous(const GRel& r, const GRel& d);

// Rows indexed by subset masks 0..2^n-1: (F d)(x) = max_{y in F} d(y,x).
GRel subset_row_distance(const GRel& d);
// Columns indexed by subset masks: x (dP) Y = min_{y in Y} d(x,y).
GRel point_subset_distance(const GRel& d);

enum class Interpolation {
  SetPhi,              // Fd∘Φ^d ≤ Fd
  SetUniform,          // Fd∘d ≾ Fd
  PhiSelf,             // d∘Φ^d ≤ d
  SetLeq,              // Fd∘≤^d ≤ Fd
  LeqSelf,             // d∘≤^d ≤ d
  LeqSetInPhi,         // ≤^{Fd} ⊆ Φ^{Fd}∘≤^d
  LeqSelfUniform,      // d∘≤^d ≾ d
  LowerSetUniform,     // lower∘≤^{dP} ≾ dP
  LowerSymPhiUniform,  // (lower ∨ lower^op)∘Φ^{lower} ≾ d
  SetUpperLeq,         // ≤^{Fd}∘upper ≤ Fd
  SetSelf,             // Fd∘d ≤ Fd
};
const char* to_string(Interpolation c);
bool interpolation_check(const GRel& d, Interpolation c);

enum class BasisKind { Smyth, Max };
// Direct definitions: every point is a Smyth limit of a zero-cluster inside
// B, or the d-max of a directed subset of B.
// Only subsets of B are enumerated, so the carrier may exceed the
// enumeration bound as long as B does not.
bool is_basis(const GRel& d, std::span<const std::size_t> B, BasisKind kind);
bool is_basis(const GRel& d, Mask B, BasisKind kind);
// d∘B∘d ≾ d (Smyth) and d∘B∘≤^d ≾ d (max).
bool basis_by_composition(const GRel& d, Mask B, BasisKind kind);
// Density in the Alexandroff+lower-ball join (Smyth), or in the join of the
// Alexandroff topology with the lower-ball topology of ≤^d (max).
bool basis_by_density(const GRel& d, Mask B, BasisKind kind);
FiniteTopology basis_topology(const GRel& d, BasisKind kind);

DistanceSpace restrict(const DistanceSpace& s, std::span<const std::size_t> B);

// Yoneda and Smyth: topological, over zero-clusters and their limits.
// Sup and Max: relational, over directed subsets and their bounds.
enum class WayBelowKind { Yoneda, Smyth, Sup, Max };
const char* to_string(WayBelowKind k);
std::optional<WayBelowKind> parse_way_below_kind(std::string_view s);
GRel way_below(const GRel& e, WayBelowKind kind);

// Continuity (Smyth or Max) plus upper ≤ lower; domains add completeness.
bool is_predomain(const GRel& d, ContinuityKind kind);
bool is_domain(const GRel& d, ContinuityKind kind);

struct DualityReport {
  bool topological_side1 = false;  // e Yoneda-complete, d-e-Yoneda continuous, d = Yoneda way-below of e
  bool topological_side2 = false;  // d Smyth-complete and continuous, e = lower ≥ upper
  bool relational_side1 = false;   // e sup-complete, d-e-sup continuous, d = sup way-below of e
  bool relational_side2 = false;   // d max-complete and continuous, e = lower ≥ upper
  bool consistent() const {
    return topological_side1 == topological_side2 && relational_side1 == relational_side2;
  }
};
DualityReport duality_check(const GRel& d, const GRel& e);

// For a lower-Cauchy sequence s, search a d-zero-cluster with the same
// limsup row of the lower hemimetric and the same liminf column of d.
// Returns true when s is not lower-Cauchy or a replacement exists.
bool lower_cauchy_replacement(const GRel& d, const UPSeq& s);
// Every lower-directed Y has a d-directed Z with Y lower = Z lower and d Y = d Z.
bool lower_directed_replacement(const GRel& d);

}  // namespace qdt
