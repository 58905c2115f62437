#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdt/grel.hpp"

namespace qdt {

using Mask = std::uint32_t;
using Subset = std::vector<std::size_t>;

// Largest carrier for which deciders enumerate all subsets.
inline constexpr std::size_t kEnumerationBound = 12;

struct SizeBoundError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
void require_enumerable(std::size_t n, const char* what, std::size_t bound = kEnumerationBound);

Subset to_subset(Mask m);
Mask to_mask(std::span<const std::size_t> s);
inline bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }
inline Mask full_mask(std::size_t n) { return n >= 32 ? ~Mask(0) : ((Mask(1) << n) - 1); }

struct TriangleViolation : std::invalid_argument {
  TriangleViolation(std::string msg, std::size_t x_, std::size_t y_, std::size_t z_)
      : std::invalid_argument(std::move(msg)), x(x_), y(y_), z(z_) {}
  std::size_t x, y, z;
};

// First (x, y, z) with d(x,y) > d(x,z) + d(z,y), if any.
std::optional<std::array<std::size_t, 3>> find_triangle_violation(const GRel& d);

// A labelled square relation satisfying the triangle inequality.
class DistanceSpace {
 public:
  DistanceSpace() = default;
  // Throws TriangleViolation, DimensionError or std::invalid_argument (labels).
  DistanceSpace(std::vector<std::string> labels, GRel d, std::string name = {});
  // Labels default to "0", "1", ...
  explicit DistanceSpace(GRel d, std::string name = {});

  std::size_t size() const { return labels_.size(); }
  const GRel& d() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  friend bool operator==(const DistanceSpace& a, const DistanceSpace& b) {
    return a.labels_ == b.labels_ && a.d_ == b.d_;
  }

 private:
  std::vector<std::string> labels_;
  GRel d_;
  std::string name_;
};

bool is_hemimetric(const GRel& d);   // zero diagonal
bool is_quasimetric(const GRel& d);  // hemimetric with antisymmetric zero set

// upper(x,z) = sup_y (d(x,y) - d(z,y))_+ ; lower(z,y) = sup_x (d(x,y) - d(x,z))_+
GRel upper_hemimetric(const GRel& d);
GRel lower_hemimetric(const GRel& d);

// Classical relations, as 0/inf characteristic matrices.
GRel leq_rel(const GRel& d);
GRel ltfn_eps(const GRel& d, const Rational& eps);
// x < y iff d(x,z) = 0 for every z with lower(y,z) = 0.
GRel strict_rel(const GRel& d);

// (Y d)(w) = max_{y in Y} d(y,w) and (d Y)(w) = min_{y in Y} d(w,y).
std::vector<ExtVal> set_row(const GRel& d, std::span<const std::size_t> Y);
std::vector<ExtVal> set_col(const GRel& d, std::span<const std::size_t> Y);

// Nonempty Y holding some y with max_{z in Y} d(z,y) = 0.
bool is_directed(const GRel& d, std::span<const std::size_t> Y);
// The literal definition: for every F ⊆ Y, inf_{y in Y} max_{z in F} d(z,y) = 0.
bool is_directed_by_definition(const GRel& d, std::span<const std::size_t> Y);
bool is_final(const GRel& d, std::span<const std::size_t> Y);
bool is_initial(const GRel& d, std::span<const std::size_t> Y);

enum class SubsetRel { Sup, Max };
// x = d-sup Y or x = d-max Y.
bool bound_check(const GRel& d, std::span<const std::size_t> Y, std::size_t x, SubsetRel kind);

// Ultimately periodic sequence: prefix followed by the cycle repeated forever.
struct UPSeq {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> cycle;
  void validate(std::size_t n) const;
  std::size_t at(std::size_t k) const;
};

enum class CauchyMode { PreCauchy, Cauchy, OpCauchy };
bool seq_cauchy(const GRel& d, const UPSeq& s, CauchyMode mode);

enum class TopologyKind {
  Alexandroff,  // upper balls {x : d(c,x) < r}
  LowerBall,    // lower balls {x : d(x,c) < r}
  Lower,        // lower holes {x : d(c,x) > r}
  Smyth,        // Alexandroff joined with lower
  Upper,        // upper holes {x : d(x,c) > r}
  Yoneda,       // upper joined with lower
  Symmetric,    // Alexandroff joined with lower-ball
};
const char* to_string(TopologyKind k);
std::optional<TopologyKind> parse_topology_kind(std::string_view s);

// Convergence of a sequence whose recurrent values are V to x.
bool converges(const GRel& d, std::span<const std::size_t> V, std::size_t x, TopologyKind kind);
bool seq_limit_check(const GRel& d, const UPSeq& s, std::size_t x, TopologyKind kind);

// Nonempty V with d(u,v) = 0 for all u, v in V (u = v included).
bool is_zero_cluster(const GRel& d, std::span<const std::size_t> V);
std::vector<Mask> zero_clusters(const GRel& d);
std::vector<Mask> directed_subsets(const GRel& d);

bool d_equivalent(const GRel& d, std::size_t x, std::size_t y);
struct Quotient {
  DistanceSpace space;
  std::vector<std::size_t> class_of;
};
Quotient quotient(const DistanceSpace& s);

}  // namespace qdt
