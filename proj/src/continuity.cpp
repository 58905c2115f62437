#include "qdt/continuity.hpp"

#include <set>

namespace qdt {

namespace {

bool same_column(const GRel& d, std::size_t a, std::size_t b) {
  for (std::size_t w = 0; w < d.rows(); ++w)
    if (d(w, a) != d(w, b)) return false;
  return true;
}

ExtVal min_into(const GRel& d, std::size_t x, std::span<const std::size_t> V) {
  ExtVal m = kInf;
  for (std::size_t v : V) m = min(m, d(x, v));
  return m;
}

void require_square(const GRel& d, const char* what) {
  if (!d.is_square()) throw DimensionError(std::string(what) + ": relation is not square");
}

}  // namespace

const char* to_string(ContinuityKind k) {
  switch (k) {
    case ContinuityKind::Smyth: return "smyth";
    case ContinuityKind::Max: return "max";
    case ContinuityKind::Yoneda: return "yoneda";
    case ContinuityKind::Sup: return "sup";
  }
  return "?";
}

bool smyth_continuous(const GRel& d) {
  require_square(d, "smyth_continuous");
  const std::size_t n = d.rows();
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t z = 0; z < n && !found; ++z) found = d(z, z).is_zero() && same_column(d, z, x);
    if (!found) return false;
  }
  return true;
}

bool smyth_continuous_by_clusters(const GRel& d) {
  const std::size_t n = d.rows();
  auto clusters = zero_clusters(d);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (Mask v : clusters) {
      if (converges(d, to_subset(v), x, TopologyKind::Smyth)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool relation_max_continuous(const GRel& r, const GRel& d) {
  const std::size_t n = d.rows();
  auto dirs = directed_subsets(r);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (Mask y : dirs) {
      if (bound_check(d, to_subset(y), x, SubsetRel::Max)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool max_continuous(const GRel& d) { return relation_max_continuous(d, d); }

bool max_continuous_criterion(const GRel& d) { return smyth_continuous(d); }

bool is_continuous(const GRel& d, ContinuityKind kind) { return is_continuous(d, d, kind); }

bool is_continuous(const GRel& d, const GRel& e, ContinuityKind kind) {
  require_square(d, "is_continuous");
  if (e.rows() != d.rows() || !e.is_square()) throw DimensionError("is_continuous: carriers differ");
  const std::size_t n = d.rows();
  switch (kind) {
    case ContinuityKind::Smyth:
      if (&d != &e && !(d == e)) break;
      return smyth_continuous(d);
    case ContinuityKind::Max:
      if (&d != &e && !(d == e)) break;
      return max_continuous(d);
    case ContinuityKind::Yoneda: {
      auto clusters = zero_clusters(d);
      for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (Mask v : clusters)
          if (converges(e, to_subset(v), x, TopologyKind::Yoneda)) {
            found = true;
            break;
          }
        if (!found) return false;
      }
      return true;
    }
    case ContinuityKind::Sup: {
      auto dirs = directed_subsets(d);
      for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (Mask y : dirs)
          if (bound_check(e, to_subset(y), x, SubsetRel::Sup)) {
            found = true;
            break;
          }
        if (!found) return false;
      }
      return true;
    }
  }
  throw std::invalid_argument("Smyth and max continuity take a single distance");
}

bool is_complete(const GRel& d, ContinuityKind kind) {
  require_square(d, "is_complete");
  const std::size_t n = d.rows();
  const bool by_clusters = kind == ContinuityKind::Smyth || kind == ContinuityKind::Yoneda;
  auto family = by_clusters ? zero_clusters(d) : directed_subsets(d);
  for (Mask m : family) {
    Subset s = to_subset(m);
    bool found = false;
    for (std::size_t z = 0; z < n && !found; ++z) {
      switch (kind) {
        case ContinuityKind::Smyth: found = converges(d, s, z, TopologyKind::Smyth); break;
        case ContinuityKind::Yoneda: found = converges(d, s, z, TopologyKind::Yoneda); break;
        case ContinuityKind::Max: found = bound_check(d, s, z, SubsetRel::Max); break;
        case ContinuityKind::Sup: found = bound_check(d, s, z, SubsetRel::Sup); break;
      }
    }
    if (!found) return false;
  }
  return true;
}

GRel subset_row_distance(const GRel& d) {
  const std::size_t n = d.rows();
  require_enumerable(n, "subset_row_distance");
  const std::size_t count = std::size_t(1) << n;
  GRel out(count, n, kZero);
  for (std::size_t f = 1; f < count; ++f) {
    // Extend the row of f without its lowest point by that point.
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(f));
    std::size_t rest = f & (f - 1);
    for (std::size_t x = 0; x < n; ++x) out(f, x) = max(out(rest, x), d(low, x));
  }
  return out;
}

GRel point_subset_distance(const GRel& d) {
  const std::size_t n = d.rows();
  require_enumerable(n, "point_subset_distance");
  const std::size_t count = std::size_t(1) << n;
  GRel out(n, count, kInf);
  for (std::size_t y = 1; y < count; ++y) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(y));
    std::size_t rest = y & (y - 1);
    for (std::size_t x = 0; x < n; ++x) out(x, y) = min(out(x, rest), d(x, low));
  }
  return out;
}

const char* to_string(Interpolation c) {
  switch (c) {
    case Interpolation::SetPhi: return "Fd∘Φ^d ≤ Fd";
    case Interpolation::SetUniform: return "Fd∘d ≾ Fd";
    case Interpolation::PhiSelf: return "d∘Φ^d ≤ d";
    case Interpolation::SetLeq: return "Fd∘≤^d ≤ Fd";
    case Interpolation::LeqSelf: return "d∘≤^d ≤ d";
    case Interpolation::LeqSetInPhi: return "≤^{Fd} ⊆ Φ^{Fd}∘≤^d";
    case Interpolation::LeqSelfUniform: return "d∘≤^d ≾ d";
    case Interpolation::LowerSetUniform: return "lower∘≤^{dP} ≾ dP";
    case Interpolation::LowerSymPhiUniform: return "sym(lower)∘Φ^{lower} ≾ d";
    case Interpolation::SetUpperLeq: return "≤^{Fd}∘upper ≤ Fd";
    case Interpolation::SetSelf: return "Fd∘d ≤ Fd";
  }
  return "?";
}

bool interpolation_check(const GRel& d, Interpolation c) {
  require_square(d, "interpolation_check");
  switch (c) {
    case Interpolation::SetPhi: {
      GRel fd = subset_row_distance(d);
      return leq(phi_compose(fd, d), fd);
    }
    case Interpolation::SetUniform: {
      GRel fd = subset_row_distance(d);
      return uniform_leq(compose(fd, d), fd);
    }
    case Interpolation::PhiSelf: return leq(phi_compose(d, d), d);
    case Interpolation::SetLeq: {
      GRel fd = subset_row_distance(d);
      return leq(compose(fd, leq_rel(d)), fd);
    }
    case Interpolation::LeqSelf: return leq(compose(d, leq_rel(d)), d);
    case Interpolation::LeqSetInPhi: {
      GRel fd = subset_row_distance(d);
      return leq(phi_left(fd, leq_rel(d)), zero_set(fd));
    }
    case Interpolation::LeqSelfUniform: return uniform_leq(compose(d, leq_rel(d)), d);
    case Interpolation::LowerSetUniform: {
      GRel dp = point_subset_distance(d);
      return uniform_leq(compose(lower_hemimetric(d), zero_set(dp)), dp);
    }
    case Interpolation::LowerSymPhiUniform: {
      GRel low = lower_hemimetric(d);
      return uniform_leq(phi_compose(sym(low), low), d);
    }
    case Interpolation::SetUpperLeq: {
      GRel fd = subset_row_distance(d);
      return leq(compose(zero_set(fd), upper_hemimetric(d)), fd);
    }
    case Interpolation::SetSelf: {
      GRel fd = subset_row_distance(d);
      return leq(compose(fd, d), fd);
    }
  }
  return false;
}

bool is_basis(const GRel& d, std::span<const std::size_t> B, BasisKind kind) {
  require_square(d, "is_basis");
  require_enumerable(B.size(), "is_basis");
  const std::size_t n = d.rows();
  std::vector<Subset> family;
  for (Mask m = 1; m < (Mask(1) << B.size()); ++m) {
    Subset s;
    for (std::size_t k = 0; k < B.size(); ++k)
      if (has(m, k)) s.push_back(B[k]);
    if (kind == BasisKind::Smyth ? is_zero_cluster(d, s) : is_directed(d, s)) family.push_back(std::move(s));
  }
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (const Subset& s : family) {
      found = kind == BasisKind::Smyth ? converges(d, s, x, TopologyKind::Smyth)
                                       : bound_check(d, s, x, SubsetRel::Max);
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

bool is_basis(const GRel& d, Mask B, BasisKind kind) {
  Subset b = to_subset(B);
  return is_basis(d, b, kind);
}

bool basis_by_composition(const GRel& d, Mask B, BasisKind kind) {
  const std::size_t n = d.rows();
  GRel through(n, n, kInf);
  for (std::size_t b = 0; b < n; ++b) {
    if (!has(B, b)) continue;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        ExtVal v = kind == BasisKind::Smyth ? d(x, b) + d(b, y) : (d(b, y).is_zero() ? d(x, b) : kInf);
        through(x, y) = min(through(x, y), v);
      }
  }
  return uniform_leq(through, d);
}

FiniteTopology basis_topology(const GRel& d, BasisKind kind) {
  if (kind == BasisKind::Smyth) return generate(d, TopologyKind::Symmetric);
  return join(generate(d, TopologyKind::Alexandroff), generate(leq_rel(d), TopologyKind::LowerBall));
}

bool basis_by_density(const GRel& d, Mask B, BasisKind kind) { return is_dense(basis_topology(d, kind), B); }

DistanceSpace restrict(const DistanceSpace& s, std::span<const std::size_t> B) {
  if (B.empty()) throw std::invalid_argument("restrict: empty subset");
  std::vector<std::string> labels;
  for (std::size_t b : B) {
    if (b >= s.size()) throw std::invalid_argument("restrict: index out of range");
    labels.push_back(s.label(b));
  }
  return DistanceSpace(labels, submatrix(s.d(), B, B), s.name());
}

const char* to_string(WayBelowKind k) {
  switch (k) {
    case WayBelowKind::Yoneda: return "yoneda";
    case WayBelowKind::Smyth: return "smyth";
    case WayBelowKind::Sup: return "sup";
    case WayBelowKind::Max: return "max";
  }
  return "?";
}

std::optional<WayBelowKind> parse_way_below_kind(std::string_view s) {
  for (auto k : {WayBelowKind::Yoneda, WayBelowKind::Smyth, WayBelowKind::Sup, WayBelowKind::Max})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

GRel way_below(const GRel& e, WayBelowKind kind) {
  require_square(e, "way_below");
  const std::size_t n = e.rows();
  GRel w(n, n, kZero);
  const bool topological = kind == WayBelowKind::Yoneda || kind == WayBelowKind::Smyth;
  auto family = topological ? zero_clusters(e) : directed_subsets(e);
  for (Mask m : family) {
    Subset s = to_subset(m);
    std::vector<ExtVal> into(n);
    for (std::size_t x = 0; x < n; ++x) into[x] = min_into(e, x, s);
    for (std::size_t z = 0; z < n; ++z) {
      bool limit = false;
      switch (kind) {
        case WayBelowKind::Yoneda: limit = converges(e, s, z, TopologyKind::Yoneda); break;
        case WayBelowKind::Smyth: limit = converges(e, s, z, TopologyKind::Smyth); break;
        case WayBelowKind::Sup: limit = bound_check(e, s, z, SubsetRel::Sup); break;
        case WayBelowKind::Max: limit = bound_check(e, s, z, SubsetRel::Max); break;
      }
      if (!limit) continue;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) w(x, y) = max(w(x, y), tminus(into[x], e(y, z)));
    }
  }
  return w;
}

bool is_predomain(const GRel& d, ContinuityKind kind) {
  if (kind != ContinuityKind::Smyth && kind != ContinuityKind::Max)
    throw std::invalid_argument("is_predomain: kind must be smyth or max");
  return is_continuous(d, kind) && leq(upper_hemimetric(d), lower_hemimetric(d));
}

bool is_domain(const GRel& d, ContinuityKind kind) { return is_predomain(d, kind) && is_complete(d, kind); }

DualityReport duality_check(const GRel& d, const GRel& e) {
  if (!d.is_square() || d.rows() != e.rows() || !e.is_square()) throw DimensionError("duality_check: carriers differ");
  DualityReport r;
  GRel low = lower_hemimetric(d);
  const bool e_is_lower = e == low && leq(upper_hemimetric(d), low);
  r.topological_side1 = is_complete(e, ContinuityKind::Yoneda) && is_continuous(d, e, ContinuityKind::Yoneda) &&
                        d == way_below(e, WayBelowKind::Yoneda);
  r.topological_side2 = is_complete(d, ContinuityKind::Smyth) && smyth_continuous(d) && e_is_lower;
  r.relational_side1 = is_complete(e, ContinuityKind::Sup) && is_continuous(d, e, ContinuityKind::Sup) &&
                       d == way_below(e, WayBelowKind::Sup);
  r.relational_side2 = is_complete(d, ContinuityKind::Max) && max_continuous(d) && e_is_lower;
  return r;
}

bool lower_cauchy_replacement(const GRel& d, const UPSeq& s) {
  GRel low = lower_hemimetric(d);
  if (!seq_cauchy(low, s, CauchyMode::Cauchy)) return true;
  auto want_row = set_row(low, s.cycle);
  auto want_col = set_col(d, s.cycle);
  for (Mask m : zero_clusters(d)) {
    Subset w = to_subset(m);
    if (set_row(low, w) == want_row && set_col(d, w) == want_col) return true;
  }
  return false;
}

bool lower_directed_replacement(const GRel& d) {
  GRel low = lower_hemimetric(d);
  std::set<std::pair<std::vector<ExtVal>, std::vector<ExtVal>>> signatures;
  for (Mask m : directed_subsets(d)) {
    Subset z = to_subset(m);
    signatures.emplace(set_row(low, z), set_col(d, z));
  }
  for (Mask m : directed_subsets(low)) {
    Subset y = to_subset(m);
    if (!signatures.count({set_row(low, y), set_col(d, y)})) return false;
  }
  return true;
}

}  // namespace qdt
