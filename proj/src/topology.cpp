#include "qdt/topology.hpp"

#include <algorithm>

namespace qdt {

FiniteTopology FiniteTopology::from_subbasis(std::size_t n, std::span<const Mask> subbasis, std::string tag) {
  require_enumerable(n, "topology");
  FiniteTopology t;
  t.n_ = n;
  t.tag_ = std::move(tag);
  const Mask all = full_mask(n);
  t.nbhd_.assign(n, all);
  for (Mask s : subbasis)
    for (std::size_t p = 0; p < n; ++p)
      if (has(s, p)) t.nbhd_[p] &= s;
  for (Mask m = 0;; ++m) {
    bool open = true;
    for (std::size_t p = 0; p < n && open; ++p)
      if (has(m, p) && (t.nbhd_[p] & ~m)) open = false;
    if (open) t.opens_.push_back(m);
    if (m == all) break;
  }
  return t;
}

bool FiniteTopology::is_open(Mask m) const { return std::binary_search(opens_.begin(), opens_.end(), m); }

std::vector<Rational> thresholds(const GRel& d) {
  std::vector<Rational> finite;
  for (const ExtVal& v : d.values())
    if (v.is_finite()) finite.push_back(v.value());
  std::vector<Rational> out{Rational(0)};
  for (std::size_t i = 0; i < finite.size(); ++i) {
    out.push_back(finite[i]);
    if (i + 1 < finite.size()) out.push_back((finite[i] + finite[i + 1]) / Rational(2));
  }
  out.push_back((finite.empty() ? Rational(0) : finite.back()) + Rational(1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> subbasis(const GRel& d, TopologyKind kind, std::span<const Rational> radii) {
  const std::size_t n = d.rows();
  std::vector<Mask> out;
  auto emit = [&](auto member) {
    for (std::size_t c = 0; c < n; ++c)
      for (const Rational& r : radii) {
        Mask m = 0;
        for (std::size_t x = 0; x < n; ++x)
          if (member(c, x, ExtVal(r))) m |= Mask(1) << x;
        out.push_back(m);
      }
  };
  auto upper_balls = [&] {
    emit([&](std::size_t c, std::size_t x, const ExtVal& r) { return !r.is_zero() && d(c, x) < r; });
  };
  auto lower_balls = [&] {
    emit([&](std::size_t c, std::size_t x, const ExtVal& r) { return !r.is_zero() && d(x, c) < r; });
  };
  auto lower_holes = [&] { emit([&](std::size_t c, std::size_t x, const ExtVal& r) { return r < d(c, x); }); };
  auto upper_holes = [&] { emit([&](std::size_t c, std::size_t x, const ExtVal& r) { return r < d(x, c); }); };
  const bool ub = kind == TopologyKind::Alexandroff || kind == TopologyKind::Smyth || kind == TopologyKind::Symmetric;
  const bool lb = kind == TopologyKind::LowerBall || kind == TopologyKind::Symmetric;
  const bool lh = kind == TopologyKind::Lower || kind == TopologyKind::Smyth || kind == TopologyKind::Yoneda;
  const bool uh = kind == TopologyKind::Upper || kind == TopologyKind::Yoneda;
  if (ub) upper_balls();
  if (lb) lower_balls();
  if (lh) lower_holes();
  if (uh) upper_holes();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteTopology generate(const GRel& d, TopologyKind kind) {
  auto radii = thresholds(d);
  return generate(d, kind, radii);
}

FiniteTopology generate(const GRel& d, TopologyKind kind, std::span<const Rational> radii) {
  if (!d.is_square()) throw DimensionError("generate: relation is not square");
  auto sb = subbasis(d, kind, radii);
  return FiniteTopology::from_subbasis(d.rows(), sb, to_string(kind));
}

FiniteTopology join(const FiniteTopology& a, const FiniteTopology& b) {
  if (a.size() != b.size()) throw DimensionError("join: carriers differ");
  std::vector<Mask> sb = a.opens();
  sb.insert(sb.end(), b.opens().begin(), b.opens().end());
  return FiniteTopology::from_subbasis(a.size(), sb, a.tag() + "+" + b.tag());
}

Mask closure(const FiniteTopology& t, Mask y) {
  Mask avoid = 0;
  for (Mask o : t.opens())
    if ((o & y) == 0) avoid |= o;
  return full_mask(t.size()) & ~avoid;
}

bool is_dense(const FiniteTopology& t, Mask b) {
  for (Mask o : t.opens())
    if (o != 0 && (o & b) == 0) return false;
  return true;
}

}  // namespace qdt
