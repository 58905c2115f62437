#include "qdt/space.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace qdt {

void require_enumerable(std::size_t n, const char* what, std::size_t bound) {
  if (n > bound)
    throw SizeBoundError(std::string(what) + ": carrier of size " + std::to_string(n) + " exceeds the bound " +
                         std::to_string(bound));
}

Subset to_subset(Mask m) {
  Subset s;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) s.push_back(i);
  return s;
}

Mask to_mask(std::span<const std::size_t> s) {
  Mask m = 0;
  for (std::size_t i : s) {
    if (i >= 32) throw SizeBoundError("subset index beyond mask width");
    m |= Mask(1) << i;
  }
  return m;
}

std::optional<std::array<std::size_t, 3>> find_triangle_violation(const GRel& d) {
  const std::size_t n = d.rows();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (d(x, y).is_zero()) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (d(x, z) + d(z, y) < d(x, y)) return std::array<std::size_t, 3>{x, y, z};
    }
  return std::nullopt;
}

DistanceSpace::DistanceSpace(std::vector<std::string> labels, GRel d, std::string name)
    : labels_(std::move(labels)), d_(std::move(d)), name_(std::move(name)) {
  if (!d_.is_square()) throw DimensionError("distance matrix is not square");
  if (d_.rows() != labels_.size())
    throw DimensionError("distance matrix has " + std::to_string(d_.rows()) + " rows for " +
                         std::to_string(labels_.size()) + " points");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty point label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate point label '" + l + "'");
  }
  if (auto v = find_triangle_violation(d_)) {
    auto [x, y, z] = *v;
    throw TriangleViolation("triangle inequality fails: d(" + labels_[x] + "," + labels_[y] + ") = " +
                                d_(x, y).str() + " > d(" + labels_[x] + "," + labels_[z] + ") + d(" + labels_[z] +
                                "," + labels_[y] + ") = " + (d_(x, z) + d_(z, y)).str(),
                            x, y, z);
  }
}

DistanceSpace::DistanceSpace(GRel d, std::string name)
    : DistanceSpace(
          [&] {
            std::vector<std::string> l;
            for (std::size_t i = 0; i < d.rows(); ++i) l.push_back(std::to_string(i));
            return l;
          }(),
          std::move(d), std::move(name)) {}

std::optional<std::size_t> DistanceSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool is_hemimetric(const GRel& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (!d(i, i).is_zero()) return false;
  return true;
}

bool is_quasimetric(const GRel& d) {
  if (!is_hemimetric(d)) return false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = i + 1; j < d.rows(); ++j)
      if (d(i, j).is_zero() && d(j, i).is_zero()) return false;
  return true;
}

GRel upper_hemimetric(const GRel& d) {
  const std::size_t n = d.rows();
  GRel out(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      ExtVal m = kZero;
      for (std::size_t y = 0; y < n; ++y) m = max(m, tminus(d(x, y), d(z, y)));
      out(x, z) = m;
    }
  return out;
}

GRel lower_hemimetric(const GRel& d) {
  const std::size_t n = d.rows();
  GRel out(n, n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y) {
      ExtVal m = kZero;
      for (std::size_t x = 0; x < n; ++x) m = max(m, tminus(d(x, y), d(x, z)));
      out(z, y) = m;
    }
  return out;
}

GRel leq_rel(const GRel& d) { return zero_set(d); }

GRel ltfn_eps(const GRel& d, const Rational& eps) {
  if (eps <= Rational(0)) throw std::invalid_argument("ltfn_eps: epsilon must be positive");
  ExtVal e(eps);
  return GRel::characteristic(d.rows(), d.cols(), [&](std::size_t i, std::size_t j) { return d(i, j) < e; });
}

GRel strict_rel(const GRel& d) {
  const std::size_t n = d.rows();
  GRel low = lower_hemimetric(d);
  return GRel::characteristic(n, n, [&](std::size_t x, std::size_t y) {
    for (std::size_t z = 0; z < n; ++z)
      if (low(y, z).is_zero() && !d(x, z).is_zero()) return false;
    return true;
  });
}

std::vector<ExtVal> set_row(const GRel& d, std::span<const std::size_t> Y) {
  std::vector<ExtVal> out(d.cols(), kZero);
  for (std::size_t y : Y)
    for (std::size_t w = 0; w < d.cols(); ++w) out[w] = max(out[w], d(y, w));
  return out;
}

std::vector<ExtVal> set_col(const GRel& d, std::span<const std::size_t> Y) {
  std::vector<ExtVal> out(d.rows(), kInf);
  for (std::size_t y : Y)
    for (std::size_t w = 0; w < d.rows(); ++w) out[w] = min(out[w], d(w, y));
  return out;
}

bool is_directed(const GRel& d, std::span<const std::size_t> Y) {
  for (std::size_t y : Y) {
    bool top = true;
    for (std::size_t z : Y)
      if (!d(z, y).is_zero()) {
        top = false;
        break;
      }
    if (top) return true;
  }
  return false;
}

bool is_directed_by_definition(const GRel& d, std::span<const std::size_t> Y) {
  require_enumerable(Y.size(), "is_directed_by_definition");
  const Mask all = full_mask(Y.size());
  for (Mask f = 0;; ++f) {
    ExtVal best = kInf;
    for (std::size_t y : Y) {
      ExtVal worst = kZero;
      for (std::size_t k = 0; k < Y.size(); ++k)
        if (has(f, k)) worst = max(worst, d(Y[k], y));
      best = min(best, worst);
    }
    if (!best.is_zero()) return false;
    if (f == all) break;
  }
  return true;
}

bool is_final(const GRel& d, std::span<const std::size_t> Y) {
  for (std::size_t x : Y) {
    bool ok = false;
    for (std::size_t y : Y)
      if (d(x, y).is_zero()) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool is_initial(const GRel& d, std::span<const std::size_t> Y) {
  for (std::size_t x : Y) {
    bool ok = false;
    for (std::size_t y : Y)
      if (d(y, x).is_zero()) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool bound_check(const GRel& d, std::span<const std::size_t> Y, std::size_t x, SubsetRel kind) {
  for (std::size_t y : Y)
    if (!d(y, x).is_zero()) return false;
  const std::size_t n = d.rows();
  if (kind == SubsetRel::Sup) {
    auto row = set_row(d, Y);
    for (std::size_t w = 0; w < n; ++w)
      if (row[w] < d(x, w)) return false;
  } else {
    auto col = set_col(d, Y);
    for (std::size_t w = 0; w < n; ++w)
      if (d(w, x) < col[w]) return false;
  }
  return true;
}

void UPSeq::validate(std::size_t n) const {
  if (cycle.empty()) throw std::invalid_argument("UPSeq: empty cycle");
  for (std::size_t i : prefix)
    if (i >= n) throw std::invalid_argument("UPSeq: index out of range");
  for (std::size_t i : cycle)
    if (i >= n) throw std::invalid_argument("UPSeq: index out of range");
}

std::size_t UPSeq::at(std::size_t k) const {
  if (k < prefix.size()) return prefix[k];
  return cycle[(k - prefix.size()) % cycle.size()];
}

bool seq_cauchy(const GRel& d, const UPSeq& s, CauchyMode mode) {
  s.validate(d.rows());
  // Tails may start inside the cycle, where every cycle value recurs after
  // every position; only cycle pairs matter.
  for (std::size_t u : s.cycle)
    for (std::size_t v : s.cycle) {
      const ExtVal& e = mode == CauchyMode::OpCauchy ? d(v, u) : d(u, v);
      if (!e.is_zero()) return false;
    }
  return true;
}

const char* to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::Alexandroff: return "alexandroff";
    case TopologyKind::LowerBall: return "lower-ball";
    case TopologyKind::Lower: return "lower";
    case TopologyKind::Smyth: return "smyth";
    case TopologyKind::Upper: return "upper";
    case TopologyKind::Yoneda: return "yoneda";
    case TopologyKind::Symmetric: return "symmetric";
  }
  return "?";
}

std::optional<TopologyKind> parse_topology_kind(std::string_view s) {
  for (auto k : {TopologyKind::Alexandroff, TopologyKind::LowerBall, TopologyKind::Lower, TopologyKind::Smyth,
                 TopologyKind::Upper, TopologyKind::Yoneda, TopologyKind::Symmetric})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

bool converges(const GRel& d, std::span<const std::size_t> V, std::size_t x, TopologyKind kind) {
  const std::size_t n = d.rows();
  // limsup / liminf over the recurrent values are max / min over V.
  auto col_max = [&](std::size_t c) {
    ExtVal m = kZero;
    for (std::size_t v : V) m = max(m, d(c, v));
    return m;
  };
  auto col_min = [&](std::size_t c) {
    ExtVal m = kInf;
    for (std::size_t v : V) m = min(m, d(c, v));
    return m;
  };
  auto row_max = [&](std::size_t c) {
    ExtVal m = kZero;
    for (std::size_t v : V) m = max(m, d(v, c));
    return m;
  };
  auto row_min = [&](std::size_t c) {
    ExtVal m = kInf;
    for (std::size_t v : V) m = min(m, d(v, c));
    return m;
  };
  auto alexandroff = [&] {
    for (std::size_t c = 0; c < n; ++c)
      if (d(c, x) < col_max(c)) return false;
    return true;
  };
  auto lower_ball = [&] {
    for (std::size_t c = 0; c < n; ++c)
      if (d(x, c) < row_max(c)) return false;
    return true;
  };
  auto lower = [&] {
    for (std::size_t c = 0; c < n; ++c)
      if (col_min(c) < d(c, x)) return false;
    return true;
  };
  auto upper = [&] {
    for (std::size_t c = 0; c < n; ++c)
      if (row_min(c) < d(x, c)) return false;
    return true;
  };
  switch (kind) {
    case TopologyKind::Alexandroff: return alexandroff();
    case TopologyKind::LowerBall: return lower_ball();
    case TopologyKind::Lower: return lower();
    case TopologyKind::Smyth: return alexandroff() && lower();
    case TopologyKind::Upper: return upper();
    case TopologyKind::Yoneda: return upper() && lower();
    case TopologyKind::Symmetric: return alexandroff() && lower_ball();
  }
  return false;
}

bool seq_limit_check(const GRel& d, const UPSeq& s, std::size_t x, TopologyKind kind) {
  s.validate(d.rows());
  if (x >= d.rows()) throw std::invalid_argument("seq_limit_check: point out of range");
  return converges(d, s.cycle, x, kind);
}

bool is_zero_cluster(const GRel& d, std::span<const std::size_t> V) {
  if (V.empty()) return false;
  for (std::size_t u : V)
    for (std::size_t v : V)
      if (!d(u, v).is_zero()) return false;
  return true;
}

std::vector<Mask> zero_clusters(const GRel& d) {
  const std::size_t n = d.rows();
  require_enumerable(n, "zero_clusters");
  std::vector<Mask> out;
  for (Mask m = 1; m <= full_mask(n); ++m) {
    Subset s = to_subset(m);
    if (is_zero_cluster(d, s)) out.push_back(m);
    if (m == full_mask(n)) break;
  }
  return out;
}

std::vector<Mask> directed_subsets(const GRel& d) {
  const std::size_t n = d.rows();
  require_enumerable(n, "directed_subsets");
  std::vector<Mask> out;
  for (Mask m = 1; m <= full_mask(n); ++m) {
    Subset s = to_subset(m);
    if (is_directed(d, s)) out.push_back(m);
    if (m == full_mask(n)) break;
  }
  return out;
}

bool d_equivalent(const GRel& d, std::size_t x, std::size_t y) {
  for (std::size_t w = 0; w < d.rows(); ++w)
    if (d(x, w) != d(y, w) || d(w, x) != d(w, y)) return false;
  return true;
}

Quotient quotient(const DistanceSpace& s) {
  const std::size_t n = s.size();
  Quotient q;
  q.class_of.assign(n, 0);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](std::size_t r) { return d_equivalent(s.d(), r, x); });
    if (it == reps.end()) {
      q.class_of[x] = reps.size();
      reps.push_back(x);
    } else {
      q.class_of[x] = static_cast<std::size_t>(it - reps.begin());
    }
  }
  std::vector<std::string> labels;
  for (std::size_t r : reps) labels.push_back(s.label(r));
  q.space = DistanceSpace(labels, submatrix(s.d(), reps, reps), s.name());
  return q;
}

}  // namespace qdt
