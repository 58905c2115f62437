#pragma once

#include <random>
#include <string>

#include "qdt/continuity.hpp"

namespace qdt {

enum class HausdorffKind {
  Classical,  // Y d_H Z = max_{y in Y} min_{z in Z} d(y,z)
  Reverse,    // Y d^H Z = min_{z in Z} max_{y in Y} d(y,z)
};

ExtVal hausdorff(const GRel& d, std::span<const std::size_t> Y, std::span<const std::size_t> Z, HausdorffKind kind);
ExtVal hausdorff(const GRel& d, Mask Y, Mask Z, HausdorffKind kind);
// Matrix over the given subsets (as masks), or over all 2^n subsets indexed
// by mask value when the family is omitted.
GRel hausdorff_matrix(const GRel& d, std::span<const Mask> family, HausdorffKind kind);
GRel hausdorff_matrix(const GRel& d, HausdorffKind kind);

struct HausdorffCompositionReport {
  bool classical_below_reverse = false;  // d_H ≤ d^H
  bool classical_composition = false;    // (d∘e)_H ≤ d_H∘e_H ≤ 2(d∘e)_H
  bool mixed_composition = false;        // (d∘e)^H ≤ d_H∘e^H ≤ 2(d∘e)^H
  bool reverse_composition = false;      // d^H∘e^H = d^H∘e_H
  bool all() const {
    return classical_below_reverse && classical_composition && mixed_composition && reverse_composition;
  }
};
// Exhaustive over all subset pairs; |X| ≤ 8.
HausdorffCompositionReport hausdorff_composition_check(const GRel& d, const GRel& e);

struct UnionReport {
  std::size_t reverse_families = 0;    // reverse-directed families examined
  std::size_t classical_families = 0;  // classical-directed families examined
  bool reverse_ok = true;              // union is the d^H-max of each
  bool classical_ok = true;            // union is the d_H-sup of each
  std::string witness;                 // first failing family, if any
};
// Families of at most max_family subsets plus every principal family (all
// nonempty subsets of one subset); |X| ≤ 8.
UnionReport union_completeness_check(const GRel& d, std::size_t max_family = 4);

// Every zero-cluster is also a zero-cluster of d^op, which makes every
// Cauchy sequence op-Cauchy.
bool is_noetherian(const GRel& d);
UPSeq random_upseq(std::size_t n, std::mt19937_64& rng, std::size_t max_prefix = 3, std::size_t max_cycle = 4);
// Random sequences: Cauchy implies op-Cauchy, and pre-Cauchy implies op-Cauchy.
bool noetherian_sampled(const GRel& d, std::mt19937_64& rng, std::size_t samples = 1000);
// Y d^H Y = 0 for every directed Y; |X| ≤ 10.
bool dHrev_hemimetric_check(const GRel& d);

struct RelationalCompletion {
  std::vector<Mask> ideals;             // all directed subsets
  GRel dist;                            // reverse Hausdorff distance between them
  std::vector<std::size_t> embedding;   // x ↦ index of {y : d(y,x) = 0}
  bool lower_is_classical = false;      // lower hemimetric of dist = classical Hausdorff
  bool continuous = false;
  bool predomain = false;
  bool complete_sampled = false;        // families of ≤ 3 ideals and principal families
  bool basis = false;                   // embedded points form a max-basis
  bool contracting = false;             // embedded distance ≤ d
  bool isometric = false;               // embedded distance = d
  bool is_domain() const { return continuous && predomain && complete_sampled; }
};
// Requires d-max continuity (throws std::invalid_argument) and |X| ≤ 10.
RelationalCompletion relational_completion(const DistanceSpace& s);

struct ExtensionReport {
  bool built = false;       // completion exists (input continuous)
  bool triangle = false;    // X ⊔ ideals with the glued distance satisfies the triangle inequality
  bool basis = false;       // X is a max-basis of the glued space
  bool domain = false;      // the glued space is a max-domain
  bool valid() const { return built && triangle && basis && domain; }
};
// Glues X to its relational completion (x ~ {y : d(y,x) = 0}).
ExtensionReport completion_extension(const DistanceSpace& s);

struct UniversalityReport {
  bool hypotheses = false;  // B is a max-basis and S a max-predomain
  bool images_are_ideals = false;
  bool isometric = false;
  bool surjective = false;
  bool complete = false;    // S max-complete
  std::size_t ideal_count = 0;
};
// x ↦ {y : d(y,x) = 0} ∩ B into the directed, upper-Alexandroff-closed
// subsets of B.
UniversalityReport universality_check(const DistanceSpace& s, Mask B);

// Directed subsets of B (w.r.t. d restricted to B) that are closed in the
// Alexandroff topology of the upper hemimetric of that restriction.
std::vector<Mask> ideals_of(const GRel& d, Mask B);

}  // namespace qdt
