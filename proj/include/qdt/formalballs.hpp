#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qdt/hyperspace.hpp"

namespace qdt {

struct FormalBall {
  std::size_t point = 0;
  Rational radius;  // finite, ≥ 0
  friend bool operator==(const FormalBall&, const FormalBall&) = default;
  std::string str(const DistanceSpace* s = nullptr) const;
};

FormalBall make_ball(std::size_t point, const Rational& radius);  // throws on negative radius

// (x,r) d+ (y,s) = (d(x,y) - r + s)_+
ExtVal dplus(const GRel& d, const FormalBall& a, const FormalBall& b);

// Weak order: d(x,y) ≤ r - s.  Strict order: d(x,y) < r - s.
bool ball_leq(const GRel& d, const FormalBall& a, const FormalBall& b);
bool ball_lt(const GRel& d, const FormalBall& a, const FormalBall& b);
struct BallOrders {
  bool leq = false;
  bool lt = false;
};
BallOrders ball_orders(const GRel& d, const FormalBall& a, const FormalBall& b);

// L(z,y) = sup (d(x,y) - d(x,z)) over x with d(x,z) finite, untruncated;
// -inf when there is no such x.
using SignedMatrix = std::vector<std::vector<SignedExt>>;
SignedMatrix lower_signed(const GRel& d);

// Strict order read off the neighbourhoods of the lower hemimetric of d+:
// a < b iff some neighbourhood of b lies weakly above a.
bool ball_lt_by_neighbourhood(const GRel& d, const SignedMatrix& L, const FormalBall& a, const FormalBall& b);

struct AgreementReport {
  bool criterion = false;  // L(z,y) ≥ 0 for all y, z
  bool initial = false;    // every column has minimum 0
};
AgreementReport underline_agreement(const GRel& d);

// Lower and upper hemimetrics of d+, evaluated directly as suprema over all
// balls; radius breakpoints make them exact.  Compare with dplus taken over
// the lower/upper hemimetric of d.
ExtVal lower_of_dplus(const GRel& d, const FormalBall& a, const FormalBall& b);
ExtVal upper_of_dplus(const GRel& d, const FormalBall& a, const FormalBall& b);

// Sorted nonnegative radii: 0, the finite entries, the given extras, all
// pairwise sums of those, midpoints and one point beyond the top.
std::vector<Rational> probe_radii(const GRel& d, std::span<const Rational> extra);

// Smallest t in the sorted candidates such that pred holds just above t,
// assuming pred is upward closed and its threshold is a candidate.
// Returns infinity when pred fails everywhere.
ExtVal threshold_infimum(std::span<const Rational> candidates, const std::function<bool(const Rational&)>& pred);

// min{r : (x,r) ≤ (y,0)} and inf{r : (x,r) < (y,0)} by search over radii.
ExtVal recover_weak(const GRel& d, std::size_t x, std::size_t y);
ExtVal recover_strict(const GRel& d, const SignedMatrix& L, std::size_t x, std::size_t y);

// Composition of d+ and e+ through middle balls, minimised over the radii
// that can be optimal; the closed form is (d∘e)+.
ExtVal dplus_compose(const GRel& d, const GRel& e, const FormalBall& a, const FormalBall& b);

struct SampleReport {
  std::size_t instances = 0;
  std::size_t positive = 0;  // instances where the tested property is non-vacuous
  bool ok = true;
  std::string witness;
};

// Composition identity on random ball pairs, for e ∈ {d, lower, upper}.
SampleReport ball_composition_check(const GRel& d, std::mt19937_64& rng, std::size_t samples);
// Both hemimetric comparisons on random ball pairs.  ok: the inequalities
// hold everywhere and the lower pair agrees everywhere iff the criterion
// holds.
SampleReport hemimetric_comparison(const GRel& d, std::mt19937_64& rng, std::size_t samples);

struct InterpolationReport {
  SampleReport set_law;     // inf{(t-r)+ : (x,t) strictly below Y} = sup d+(b, Y)
  SampleReport strict_law;  // <^{=+} ∘ < = <
};
InterpolationReport interpolation_laws(const GRel& d, std::mt19937_64& rng, std::size_t samples);

// A finite set of balls, optionally opened up: the open family replaces each
// (y,s) by every (y,s') with s' > s.
struct BallFamily {
  std::vector<FormalBall> base;
  bool open = false;
};
bool is_strict_max(const GRel& d, const BallFamily& Y, const FormalBall& x, std::span<const Rational> probes);
bool is_dplus_max(const GRel& d, const BallFamily& Y, const FormalBall& x, std::span<const Rational> probes);

struct MaximaReport {
  SampleReport finite_forward;  // strict max ⇒ d+ max, finite families
  SampleReport open_agree;      // strict max ⇔ d+ max, open families
};
MaximaReport ball_maxima_check(const GRel& d, std::mt19937_64& rng, std::size_t samples);

// Per-point infimum radius of a zero-aperture ideal of balls.
struct RadiusFn {
  std::vector<ExtVal> rho;
  friend bool operator==(const RadiusFn&, const RadiusFn&) = default;
  friend auto operator<=>(const RadiusFn&, const RadiusFn&) = default;
  bool contains(const FormalBall& b) const { return rho[b.point] <= ExtVal(b.radius); }
};
RadiusFn column_radius(const GRel& d, std::size_t x);  // ρ(y) = d(y,x)
RadiusFn shifted(const RadiusFn& f, const Rational& c);
bool is_round(const GRel& d, const RadiusFn& f);  // ρ(x) ≤ d(x,y) + ρ(y)
// The strict ball family {(y,r) : ρ(y) < r} is directed under <.
bool radius_directed(const GRel& d, const RadiusFn& f);
BallFamily open_family(const RadiusFn& f);

ExtVal aperture(std::span<const FormalBall> balls);  // inf {} = inf
ExtVal aperture(const RadiusFn& f);

ExtVal ideal_hausdorff(const GRel& d, const RadiusFn& I, const RadiusFn& J, HausdorffKind kind);
GRel ideal_hausdorff_matrix(const GRel& d, std::span<const RadiusFn> family, HausdorffKind kind);

// Distinct columns of zero-cluster members, in column order.
std::vector<RadiusFn> cluster_radius_functions(const GRel& d);

struct BallTransferReport {
  AgreementReport agreement;
  bool x_complete = false;
  bool x_continuous = false;
  bool plus_complete = false;    // representable families have strict maxima (sampled)
  bool plus_continuous = false;  // every probed ball is the strict max of a representable family (sampled)
  bool completeness_ok() const { return !agreement.criterion || x_complete == plus_complete; }
  bool continuity_ok() const { return x_continuous == (plus_continuous && agreement.initial); }
};
BallTransferReport ball_domain_transfer(const GRel& d);

struct BallDomainReport {
  bool left = false;   // Smyth domain with e = lower(d)
  bool right = false;  // strict-ball domain with ≤^{e+} = lower(<)
  BallTransferReport transfer;
  bool plus_predomain = false;  // lower(<) ⊆ upper(<) on probes (sampled)
  bool order_identity = false;
  bool consistent() const { return left == right; }
};
// (z,t) lower(<) (y,s) holds iff d(x,y) ≤ d(x,z) + t - s for every x.
bool lower_strict_closed(const GRel& d, const FormalBall& a, const FormalBall& b);
bool lower_strict_by_probes(const GRel& d, const FormalBall& a, const FormalBall& b, std::span<const Rational> probes);
BallDomainReport ball_domain_check(const GRel& d, const GRel& e);

struct SmythCompletion {
  std::vector<RadiusFn> family;
  GRel reverse;
  GRel classical;
  std::vector<std::size_t> embedding;  // x ↦ index of the column of x
  bool lower_is_classical = false;
  bool domain = false;
  bool basis = false;
  bool contracting = false;
  bool isometric = false;
  bool surjective = false;
};
// Requires Smyth continuity (throws std::invalid_argument); |X| ≤ 12.
SmythCompletion smyth_completion(const DistanceSpace& s);

struct SmythUniversality {
  bool hypotheses = false;  // B a Smyth basis of a Smyth predomain
  bool isometric = false;
  bool surjective = false;
  bool complete = false;
};
SmythUniversality smyth_universality_check(const DistanceSpace& s, Mask B);

// Four equivalent conditions on a hemimetric space.  The classical
// completeness and the hemimetric completion are only checked on the finite
// construction, so reports label them "sampled".
struct SmythCompletenessReport {
  bool noetherian = false;
  bool classical_smyth_complete = false;  // Smyth-complete under the classical Hausdorff distance
  bool reverse_hemimetric = false;        // Y d^H Y = 0 on directed Y
  bool hemimetric_completion = false;     // the Smyth completion is again hemimetric
  bool all() const { return noetherian && classical_smyth_complete && reverse_hemimetric && hemimetric_completion; }
  bool none() const { return !noetherian && !classical_smyth_complete && !reverse_hemimetric && !hemimetric_completion; }
};
SmythCompletenessReport smyth_completeness_check(const DistanceSpace& s);

}  // namespace qdt
