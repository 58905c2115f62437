#include "qdt/formalballs.hpp"

#include <algorithm>
#include <set>


namespace qdt {

namespace {

const Rational kRadiusPool[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1), Rational(3, 2),
                                Rational(2), Rational(3)};

FormalBall random_ball(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pt(0, n - 1), rad(0, std::size(kRadiusPool) - 1);
  FormalBall b;
  b.point = pt(rng);
  b.radius = kRadiusPool[rad(rng)];
  return b;
}

std::vector<FormalBall> random_balls(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::vector<FormalBall> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_ball(n, rng));
  return out;
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Sorted set plus midpoints and one point past the top.
std::vector<Rational> refine(std::vector<Rational> v) {
  sort_unique(v);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
    if (i + 1 < v.size()) out.push_back((v[i] + v[i + 1]) / Rational(2));
  }
  out.push_back((v.empty() ? Rational(0) : v.back()) + Rational(1));
  return out;
}

std::vector<Rational> finite_entries(const GRel& d) {
  std::vector<Rational> out;
  for (const ExtVal& v : d.values())
    if (v.is_finite()) out.push_back(v.value());
  return out;
}

Rational min_gap(std::span<const Rational> sorted) {
  Rational g(1);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) g = std::min(g, sorted[i + 1] - sorted[i]);
  return g;
}

std::string family_str(const BallFamily& Y) {
  std::string s = Y.open ? "open{" : "{";
  for (std::size_t i = 0; i < Y.base.size(); ++i) s += (i ? "," : "") + Y.base[i].str();
  return s + "}";
}

}  // namespace

std::string FormalBall::str(const DistanceSpace* s) const {
  return "(" + (s ? s->label(point) : std::to_string(point)) + "," + radius.str() + ")";
}

FormalBall make_ball(std::size_t point, const Rational& radius) {
  if (radius.is_negative()) throw std::domain_error("formal ball radius must be nonnegative");
  return FormalBall{point, radius};
}

ExtVal dplus(const GRel& d, const FormalBall& a, const FormalBall& b) {
  return tminus(d(a.point, b.point) + ExtVal(b.radius), ExtVal(a.radius));
}

bool ball_leq(const GRel& d, const FormalBall& a, const FormalBall& b) {
  if (a.radius < b.radius) return false;
  return d(a.point, b.point) <= ExtVal(a.radius - b.radius);
}

bool ball_lt(const GRel& d, const FormalBall& a, const FormalBall& b) {
  if (a.radius < b.radius) return false;
  return d(a.point, b.point) < ExtVal(a.radius - b.radius);
}

BallOrders ball_orders(const GRel& d, const FormalBall& a, const FormalBall& b) {
  return {ball_leq(d, a, b), ball_lt(d, a, b)};
}

SignedMatrix lower_signed(const GRel& d) {
  const std::size_t n = d.rows();
  SignedMatrix L(n, std::vector<SignedExt>(n, SignedExt::neg_inf()));
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        if (d(x, z).is_finite()) L[z][y] = std::max(L[z][y], SignedExt::diff(d(x, y), d(x, z)));
  return L;
}

bool ball_lt_by_neighbourhood(const GRel& d, const SignedMatrix& L, const FormalBall& a, const FormalBall& b) {
  // The lower hemimetric of d+ from b to (z,t) is (L(y,z) - s + t)_+, so for
  // small eps the neighbourhood meets column z exactly in t < s - L(y,z) + eps.
  const std::size_t n = d.rows();
  for (std::size_t z = 0; z < n; ++z) {
    const SignedExt& l = L[b.point][z];
    if (l.kind() == SignedExt::Kind::PosInf) continue;
    if (l.kind() == SignedExt::Kind::NegInf) return false;
    Rational top = b.radius - l.value();
    if (top.is_negative()) continue;
    const ExtVal& dz = d(a.point, z);
    if (dz.is_inf() || !(dz.value() + top < a.radius)) return false;
  }
  return true;
}

AgreementReport underline_agreement(const GRel& d) {
  const std::size_t n = d.rows();
  AgreementReport r;
  auto L = lower_signed(d);
  r.criterion = true;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      if (L[z][y] < SignedExt(Rational(0))) r.criterion = false;
  r.initial = true;
  for (std::size_t y = 0; y < n; ++y) {
    bool zero = false;
    for (std::size_t x = 0; x < n; ++x) zero = zero || d(x, y).is_zero();
    r.initial = r.initial && zero;
  }
  return r;
}

ExtVal lower_of_dplus(const GRel& d, const FormalBall& a, const FormalBall& b) {
  // (z,t) vs (y,s): sup over (x,r) of (x,r)d+(y,s) - (x,r)d+(z,t).
  ExtVal best = kZero;
  for (std::size_t x = 0; x < d.rows(); ++x) {
    std::vector<Rational> rs{Rational(0)};
    if (d(x, b.point).is_finite()) rs.push_back(d(x, b.point).value() + b.radius);
    if (d(x, a.point).is_finite()) rs.push_back(d(x, a.point).value() + a.radius);
    for (const Rational& r : rs) {
      FormalBall c{x, r};
      best = max(best, tminus(dplus(d, c, b), dplus(d, c, a)));
    }
  }
  return best;
}

ExtVal upper_of_dplus(const GRel& d, const FormalBall& a, const FormalBall& b) {
  // (y,s) vs (z,t): sup over (x,r) of (y,s)d+(x,r) - (z,t)d+(x,r).
  ExtVal best = kZero;
  for (std::size_t x = 0; x < d.rows(); ++x) {
    std::vector<Rational> rs{Rational(0)};
    if (d(a.point, x).is_finite()) {
      Rational k = a.radius - d(a.point, x).value();
      if (!k.is_negative()) rs.push_back(k);
    }
    if (d(b.point, x).is_finite()) {
      Rational k = b.radius - d(b.point, x).value();
      if (!k.is_negative()) rs.push_back(k);
    }
    rs.push_back(*std::max_element(rs.begin(), rs.end()) + Rational(1));
    for (const Rational& r : rs) {
      FormalBall c{x, r};
      best = max(best, tminus(dplus(d, a, c), dplus(d, b, c)));
    }
  }
  return best;
}

std::vector<Rational> probe_radii(const GRel& d, std::span<const Rational> extra) {
  std::vector<Rational> base = finite_entries(d);
  base.push_back(Rational(0));
  for (const Rational& e : extra)
    if (!e.is_negative()) base.push_back(e);
  sort_unique(base);
  std::vector<Rational> sums;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) sums.push_back(base[i] + base[j]);
  return refine(std::move(sums));
}

ExtVal threshold_infimum(std::span<const Rational> candidates, const std::function<bool(const Rational&)>& pred) {
  std::vector<Rational> c(candidates.begin(), candidates.end());
  sort_unique(c);
  if (c.empty()) return kInf;
  const Rational delta = min_gap(c) / Rational(2);
  for (const Rational& t : c)
    if (pred(t + delta)) return ExtVal(t);
  return kInf;
}

ExtVal recover_weak(const GRel& d, std::size_t x, std::size_t y) {
  auto radii = probe_radii(d, {});
  ExtVal t = threshold_infimum(radii, [&](const Rational& r) { return ball_leq(d, {x, r}, {y, Rational(0)}); });
  // The weak set is closed, so the infimum is attained.
  if (t.is_finite() && !ball_leq(d, {x, t.value()}, {y, Rational(0)})) throw std::logic_error("recover_weak: not attained");
  return t;
}

ExtVal recover_strict(const GRel& d, const SignedMatrix& L, std::size_t x, std::size_t y) {
  std::vector<Rational> cands = probe_radii(d, {});
  for (std::size_t z = 0; z < d.rows(); ++z) {
    const SignedExt& l = L[y][z];
    if (l.kind() != SignedExt::Kind::Finite || d(x, z).is_inf()) continue;
    Rational c = d(x, z).value() - l.value();
    if (!c.is_negative()) cands.push_back(c);
  }
  return threshold_infimum(cands,
                           [&](const Rational& r) { return ball_lt_by_neighbourhood(d, L, {x, r}, {y, Rational(0)}); });
}

ExtVal dplus_compose(const GRel& d, const GRel& e, const FormalBall& a, const FormalBall& b) {
  ExtVal best = kInf;
  for (std::size_t z = 0; z < d.cols(); ++z) {
    std::vector<Rational> ts{Rational(0)};
    if (d(a.point, z).is_finite()) {
      Rational t = a.radius - d(a.point, z).value();
      if (!t.is_negative()) ts.push_back(t);
    }
    if (e(z, b.point).is_finite()) ts.push_back(e(z, b.point).value() + b.radius);
    for (const Rational& t : ts) {
      FormalBall mid{z, t};
      best = min(best, dplus(d, a, mid) + dplus(e, mid, b));
    }
  }
  return best;
}

SampleReport ball_composition_check(const GRel& d, std::mt19937_64& rng, std::size_t samples) {
  SampleReport r;
  const std::size_t n = d.rows();
  const GRel partners[] = {d, lower_hemimetric(d), upper_hemimetric(d)};
  GRel composed[3];
  for (int k = 0; k < 3; ++k) composed[k] = compose(d, partners[k]);
  for (std::size_t i = 0; i < samples; ++i) {
    FormalBall a = random_ball(n, rng), b = random_ball(n, rng);
    const int k = static_cast<int>(i % 3);
    ++r.instances;
    ExtVal lhs = dplus(composed[k], a, b);
    ExtVal rhs = dplus_compose(d, partners[k], a, b);
    if (lhs != rhs && r.ok) {
      r.ok = false;
      r.witness = a.str() + " " + b.str() + " partner " + std::to_string(k) + ": " + lhs.str() + " vs " + rhs.str();
    }
  }
  return r;
}

SampleReport hemimetric_comparison(const GRel& d, std::mt19937_64& rng, std::size_t samples) {
  SampleReport r;
  const std::size_t n = d.rows();
  GRel low = lower_hemimetric(d), up = upper_hemimetric(d);
  auto L = lower_signed(d);
  std::vector<std::pair<FormalBall, FormalBall>> pairs;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y) {
      const SignedExt& l = L[z][y];
      if (l.kind() == SignedExt::Kind::NegInf) pairs.push_back({{z, Rational(0)}, {y, Rational(1)}});
      if (l.kind() == SignedExt::Kind::Finite && l.value().is_negative())
        pairs.push_back({{z, Rational(0)}, {y, -l.value()}});
    }
  for (std::size_t i = 0; i < samples; ++i) pairs.push_back({random_ball(n, rng), random_ball(n, rng)});
  bool all_equal = true;
  for (auto& [a, b] : pairs) {
    ++r.instances;
    ExtVal lo = lower_of_dplus(d, a, b), lo_closed = dplus(low, a, b);
    ExtVal hi = upper_of_dplus(d, a, b), hi_closed = dplus(up, a, b);
    if (lo != lo_closed) all_equal = false;
    if ((lo_closed < lo || hi_closed < hi) && r.ok) {
      r.ok = false;
      r.witness = "inequality fails at " + a.str() + " " + b.str();
    }
  }
  r.positive = all_equal ? 1 : 0;
  if (r.ok && all_equal != underline_agreement(d).criterion) {
    r.ok = false;
    r.witness = all_equal ? "criterion fails but lower pair agrees" : "criterion holds but lower pair differs";
  }
  return r;
}

InterpolationReport interpolation_laws(const GRel& d, std::mt19937_64& rng, std::size_t samples) {
  InterpolationReport rep;
  const std::size_t n = d.rows();
  auto L = lower_signed(d);
  GRel eq = GRel::characteristic(n, n, [](std::size_t x, std::size_t y) { return x == y; });
  auto Leq = lower_signed(eq);
  std::uniform_int_distribution<std::size_t> size_dist(0, 3);
  auto entries = finite_entries(d);
  for (std::size_t i = 0; i < samples; ++i) {
    FormalBall b = random_ball(n, rng);
    auto Y = random_balls(n, size_dist(rng), rng);
    std::vector<Rational> cands{Rational(0)};
    for (const FormalBall& m : Y)
      for (std::size_t z = 0; z < n; ++z) {
        const SignedExt& l = L[m.point][z];
        if (l.kind() != SignedExt::Kind::Finite || d(b.point, z).is_inf()) continue;
        Rational c = d(b.point, z).value() + m.radius - l.value();
        if (!c.is_negative()) cands.push_back(c);
      }
    ExtVal t = threshold_infimum(cands, [&](const Rational& t) {
      return std::all_of(Y.begin(), Y.end(),
                         [&](const FormalBall& m) { return ball_lt_by_neighbourhood(d, L, {b.point, t}, m); });
    });
    ExtVal left = t.is_inf() ? kInf : tminus(t, ExtVal(b.radius));
    ExtVal right = kZero;
    for (const FormalBall& m : Y) right = max(right, dplus(d, b, m));
    ++rep.set_law.instances;
    if (!Y.empty()) ++rep.set_law.positive;
    if (left != right && rep.set_law.ok) {
      rep.set_law.ok = false;
      rep.set_law.witness = b.str() + " vs " + family_str({Y, false}) + ": " + left.str() + " vs " + right.str();
    }

    FormalBall a = random_ball(n, rng), c = random_ball(n, rng);
    std::vector<Rational> grid{Rational(0), a.radius, c.radius};
    for (const Rational& v : entries) grid.push_back(v + c.radius);
    grid = refine(grid);
    bool composite = false;
    for (std::size_t w = 0; w < n && !composite; ++w)
      for (const Rational& q : grid) {
        FormalBall mid{w, q};
        if (ball_lt_by_neighbourhood(eq, Leq, a, mid) && ball_lt_by_neighbourhood(d, L, mid, c)) {
          composite = true;
          break;
        }
      }
    bool direct = ball_lt_by_neighbourhood(d, L, a, c);
    ++rep.strict_law.instances;
    if (direct) ++rep.strict_law.positive;
    if (composite != direct && rep.strict_law.ok) {
      rep.strict_law.ok = false;
      rep.strict_law.witness = a.str() + " " + c.str();
    }
  }
  return rep;
}

namespace {

// Radius of a member of Y nearest its lower end: s itself for finite
// families, s + delta for open ones (delta below every probe gap).
Rational member_radius(const BallFamily& Y, const FormalBall& m, const Rational& delta) {
  return Y.open ? m.radius + delta : m.radius;
}

}  // namespace

bool is_strict_max(const GRel& d, const BallFamily& Y, const FormalBall& x, std::span<const Rational> probes) {
  const Rational delta = min_gap(probes) / Rational(4);
  for (const FormalBall& m : Y.base)
    if (!ball_lt(d, {m.point, member_radius(Y, m, delta)}, x)) return false;
  for (std::size_t u = 0; u < d.rows(); ++u)
    for (const Rational& t : probes) {
      FormalBall c{u, t};
      bool below_x = ball_lt(d, c, x);
      bool below_y = std::any_of(Y.base.begin(), Y.base.end(), [&](const FormalBall& m) {
        return ball_lt(d, c, {m.point, member_radius(Y, m, delta)});
      });
      if (below_x != below_y) return false;
    }
  return true;
}

bool is_dplus_max(const GRel& d, const BallFamily& Y, const FormalBall& x, std::span<const Rational> probes) {
  // Over an open family, sup and inf of d+ in s' > s are the values at s.
  for (const FormalBall& m : Y.base)
    if (!dplus(d, m, x).is_zero()) return false;
  for (std::size_t u = 0; u < d.rows(); ++u)
    for (const Rational& t : probes) {
      FormalBall c{u, t};
      ExtVal inf = kInf;
      for (const FormalBall& m : Y.base) inf = min(inf, dplus(d, c, m));
      if (dplus(d, c, x) != inf) return false;
    }
  return true;
}

MaximaReport ball_maxima_check(const GRel& d, std::mt19937_64& rng, std::size_t samples) {
  MaximaReport rep;
  const std::size_t n = d.rows();
  std::uniform_int_distribution<std::size_t> size_dist(1, 3), pt(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    BallFamily Y;
    if (i % 2 == 0) {
      Y.base = random_balls(n, size_dist(rng), rng);
    } else {
      // Shifted column of a random point: often has a maximum.
      std::size_t x = pt(rng);
      Rational c = kRadiusPool[i % std::size(kRadiusPool)];
      for (std::size_t y = 0; y < n; ++y)
        if (d(y, x).is_finite()) Y.base.push_back({y, d(y, x).value() + c});
      if (Y.base.empty()) Y.base.push_back({x, c});
    }
    std::vector<Rational> radii{Rational(0)};
    for (const FormalBall& m : Y.base) radii.push_back(m.radius);
    auto probes = probe_radii(d, radii);
    sort_unique(radii);
    for (std::size_t x = 0; x < n; ++x)
      for (const Rational& r : radii) {
        FormalBall cand{x, r};
        Y.open = false;
        bool smax = is_strict_max(d, Y, cand, probes);
        ++rep.finite_forward.instances;
        if (smax) {
          ++rep.finite_forward.positive;
          if (!is_dplus_max(d, Y, cand, probes) && rep.finite_forward.ok) {
            rep.finite_forward.ok = false;
            rep.finite_forward.witness = cand.str() + " over " + family_str(Y);
          }
        }
        Y.open = true;
        bool omax = is_strict_max(d, Y, cand, probes), dmax = is_dplus_max(d, Y, cand, probes);
        ++rep.open_agree.instances;
        if (omax && dmax) ++rep.open_agree.positive;
        if (omax != dmax && rep.open_agree.ok) {
          rep.open_agree.ok = false;
          rep.open_agree.witness = cand.str() + " over " + family_str(Y) + (omax ? ": strict only" : ": d+ only");
        }
      }
  }
  return rep;
}

RadiusFn column_radius(const GRel& d, std::size_t x) {
  RadiusFn f;
  for (std::size_t y = 0; y < d.rows(); ++y) f.rho.push_back(d(y, x));
  return f;
}

RadiusFn shifted(const RadiusFn& f, const Rational& c) {
  RadiusFn g = f;
  for (ExtVal& v : g.rho) v = v + ExtVal(c);
  return g;
}

bool is_round(const GRel& d, const RadiusFn& f) {
  for (std::size_t x = 0; x < d.rows(); ++x)
    for (std::size_t y = 0; y < d.rows(); ++y)
      if (d(x, y) + f.rho[y] < f.rho[x]) return false;
  return true;
}

bool radius_directed(const GRel& d, const RadiusFn& f) {
  for (std::size_t z = 0; z < d.rows(); ++z) {
    if (f.rho[z].is_inf()) continue;
    bool ok = true;
    for (std::size_t y = 0; y < d.rows() && ok; ++y) ok = d(y, z) + f.rho[z] <= f.rho[y];
    if (ok) return true;
  }
  return false;
}

BallFamily open_family(const RadiusFn& f) {
  BallFamily Y;
  Y.open = true;
  for (std::size_t y = 0; y < f.rho.size(); ++y)
    if (f.rho[y].is_finite()) Y.base.push_back({y, f.rho[y].value()});
  return Y;
}

ExtVal aperture(std::span<const FormalBall> balls) {
  ExtVal m = kInf;
  for (const FormalBall& b : balls) m = min(m, ExtVal(b.radius));
  return m;
}

ExtVal aperture(const RadiusFn& f) { return inf_set(f.rho); }

ExtVal ideal_hausdorff(const GRel& d, const RadiusFn& I, const RadiusFn& J, HausdorffKind kind) {
  const std::size_t n = d.rows();
  auto term = [&](std::size_t x, std::size_t y) { return tminus(d(x, y) + J.rho[y], I.rho[x]); };
  if (kind == HausdorffKind::Reverse) {
    ExtVal out = kInf;
    for (std::size_t y = 0; y < n; ++y) {
      if (J.rho[y].is_inf()) continue;
      ExtVal worst = kZero;
      for (std::size_t x = 0; x < n; ++x)
        if (I.rho[x].is_finite()) worst = max(worst, term(x, y));
      out = min(out, worst);
    }
    return out;
  }
  ExtVal out = kZero;
  for (std::size_t x = 0; x < n; ++x) {
    if (I.rho[x].is_inf()) continue;
    ExtVal best = kInf;
    for (std::size_t y = 0; y < n; ++y)
      if (J.rho[y].is_finite()) best = min(best, term(x, y));
    out = max(out, best);
  }
  return out;
}

GRel ideal_hausdorff_matrix(const GRel& d, std::span<const RadiusFn> family, HausdorffKind kind) {
  GRel out(family.size(), family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) out(i, j) = ideal_hausdorff(d, family[i], family[j], kind);
  return out;
}

std::vector<RadiusFn> cluster_radius_functions(const GRel& d) {
  std::set<RadiusFn> seen;
  for (std::size_t v = 0; v < d.rows(); ++v)
    if (d(v, v).is_zero()) seen.insert(column_radius(d, v));
  // Every zero-cluster has the column of any of its members, and every
  // member is reflexive, so reflexive points already give all columns.
  return {seen.begin(), seen.end()};
}

BallTransferReport ball_domain_transfer(const GRel& d) {
  BallTransferReport r;
  const std::size_t n = d.rows();
  r.agreement = underline_agreement(d);
  r.x_complete = is_complete(d, ContinuityKind::Smyth);
  r.x_continuous = smyth_continuous(d);
  auto family = cluster_radius_functions(d);
  const Rational shifts[] = {Rational(0), Rational(1)};
  auto has_max = [&](const RadiusFn& f, const FormalBall& x) {
    BallFamily Y = open_family(f);
    std::vector<Rational> radii{x.radius};
    for (const FormalBall& m : Y.base) radii.push_back(m.radius);
    auto probes = probe_radii(d, radii);
    return is_strict_max(d, Y, x, probes);
  };
  r.plus_complete = true;
  for (const RadiusFn& f : family)
    for (const Rational& c : shifts) {
      RadiusFn g = shifted(f, c);
      if (!radius_directed(d, g)) continue;
      bool found = false;
      for (std::size_t x = 0; x < n && !found; ++x) found = has_max(g, {x, c});
      r.plus_complete = r.plus_complete && found;
    }
  r.plus_continuous = true;
  for (std::size_t x = 0; x < n; ++x)
    for (const Rational& c : shifts) {
      bool found = false;
      for (const RadiusFn& f : family) {
        if (found) break;
        found = has_max(shifted(f, c), {x, c});
      }
      r.plus_continuous = r.plus_continuous && found;
    }
  return r;
}

bool lower_strict_closed(const GRel& d, const FormalBall& a, const FormalBall& b) {
  // d(x,y) ≤ d(x,z) + t - s, with t - s possibly negative.
  for (std::size_t x = 0; x < d.rows(); ++x) {
    const ExtVal& dy = d(x, b.point);
    const ExtVal& dz = d(x, a.point);
    if (dy.is_inf()) {
      if (dz.is_finite()) return false;
      continue;
    }
    if (dz.is_inf()) continue;
    if (dz.value() + a.radius - b.radius < dy.value()) return false;
  }
  return true;
}

bool lower_strict_by_probes(const GRel& d, const FormalBall& a, const FormalBall& b, std::span<const Rational> probes) {
  for (std::size_t u = 0; u < d.rows(); ++u)
    for (const Rational& q : probes) {
      FormalBall c{u, q};
      if (ball_lt(d, c, a) && !ball_lt(d, c, b)) return false;
    }
  return true;
}

namespace {

bool upper_strict_by_probes(const GRel& d, const FormalBall& a, const FormalBall& b) {
  std::vector<Rational> qs{Rational(0)};
  std::vector<Rational> entries = finite_entries(d);
  entries.push_back(Rational(0));
  for (const Rational& v : entries)
    for (const Rational& r : {a.radius, b.radius})
      if (!(r - v).is_negative()) qs.push_back(r - v);
  qs = refine(qs);
  for (std::size_t u = 0; u < d.rows(); ++u)
    for (const Rational& q : qs) {
      FormalBall c{u, q};
      if (ball_lt(d, b, c) && !ball_lt(d, a, c)) return false;
    }
  return true;
}

}  // namespace

BallDomainReport ball_domain_check(const GRel& d, const GRel& e) {
  if (!d.is_square() || !e.is_square() || d.rows() != e.rows()) throw DimensionError("ball_domain_check: carriers differ");
  BallDomainReport r;
  const std::size_t n = d.rows();
  GRel low = lower_hemimetric(d);
  r.left = is_domain(d, ContinuityKind::Smyth) && e == low;
  r.transfer = ball_domain_transfer(d);

  std::vector<Rational> diffs = finite_entries(e);
  for (const Rational& v : finite_entries(low)) diffs.push_back(v);
  diffs.push_back(Rational(0));
  diffs = refine(diffs);
  const Rational bases[] = {Rational(0), Rational(1), Rational(5, 2)};
  r.order_identity = true;
  r.plus_predomain = true;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (const Rational& s : bases) {
        std::vector<Rational> ts;
        for (const Rational& g : diffs) ts.push_back(s + g);
        if (!s.is_zero()) ts.push_back(s - Rational(1, 2));
        for (const Rational& t : ts) {
          FormalBall a{z, t}, b{y, s};
          bool lower = lower_strict_closed(d, a, b);
          bool weak_e = ball_leq(e, a, b);
          if (lower != weak_e) r.order_identity = false;
          if (lower && r.plus_predomain && !upper_strict_by_probes(d, a, b)) r.plus_predomain = false;
        }
      }
  r.right = r.transfer.plus_complete && r.transfer.plus_continuous && r.plus_predomain && r.order_identity;
  return r;
}

SmythCompletion smyth_completion(const DistanceSpace& s) {
  const GRel& d = s.d();
  const std::size_t n = s.size();
  require_enumerable(n, "smyth_completion");
  if (!smyth_continuous(d))
    throw std::invalid_argument("Smyth completion needs a Smyth-continuous space; '" + s.name() + "' is not");
  SmythCompletion c;
  c.family = cluster_radius_functions(d);
  c.reverse = ideal_hausdorff_matrix(d, c.family, HausdorffKind::Reverse);
  c.classical = ideal_hausdorff_matrix(d, c.family, HausdorffKind::Classical);
  c.lower_is_classical = lower_hemimetric(c.reverse) == c.classical;
  c.domain = is_domain(c.reverse, ContinuityKind::Smyth);
  for (std::size_t x = 0; x < n; ++x) {
    auto it = std::find(c.family.begin(), c.family.end(), column_radius(d, x));
    if (it == c.family.end()) throw std::logic_error("column of a point is missing from a continuous completion");
    c.embedding.push_back(static_cast<std::size_t>(it - c.family.begin()));
  }
  std::vector<std::size_t> basis = c.embedding;
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  c.basis = is_basis(c.reverse, basis, BasisKind::Smyth);
  c.surjective = basis.size() == c.family.size();
  c.contracting = c.isometric = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const ExtVal& v = c.reverse(c.embedding[x], c.embedding[y]);
      if (d(x, y) < v) c.contracting = false;
      if (v != d(x, y)) c.isometric = false;
    }
  return c;
}

SmythUniversality smyth_universality_check(const DistanceSpace& s, Mask B) {
  const GRel& d = s.d();
  const std::size_t n = s.size();
  SmythUniversality r;
  r.complete = is_complete(d, ContinuityKind::Smyth);
  r.hypotheses = B != 0 && is_basis(d, B, BasisKind::Smyth) && is_predomain(d, ContinuityKind::Smyth);
  if (!r.hypotheses) return r;
  Subset b = to_subset(B);
  GRel db = submatrix(d, b, b);
  auto family = cluster_radius_functions(db);
  std::vector<RadiusFn> image(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k : b) image[x].rho.push_back(d(k, x));
  r.isometric = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (ideal_hausdorff(db, image[x], image[y], HausdorffKind::Reverse) != d(x, y)) r.isometric = false;
  r.surjective = std::all_of(family.begin(), family.end(), [&](const RadiusFn& f) {
    return std::find(image.begin(), image.end(), f) != image.end();
  });
  return r;
}

SmythCompletenessReport smyth_completeness_check(const DistanceSpace& s) {
  const GRel& d = s.d();
  if (!is_hemimetric(d)) throw std::invalid_argument("smyth_completeness_check needs a hemimetric");
  SmythCompletenessReport r;
  r.noetherian = is_noetherian(d);
  SmythCompletion c = smyth_completion(s);
  r.classical_smyth_complete = is_complete(c.classical, ContinuityKind::Smyth);
  r.reverse_hemimetric = is_hemimetric(c.reverse);
  const std::size_t n = s.size(), m = c.family.size();
  GRel g(n + m, n + m);
  auto at = [&](std::size_t i) { return i < n ? c.embedding[i] : i - n; };
  for (std::size_t i = 0; i < n + m; ++i)
    for (std::size_t j = 0; j < n + m; ++j) g(i, j) = (i < n && j < n) ? d(i, j) : c.reverse(at(i), at(j));
  std::vector<std::size_t> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = i;
  r.hemimetric_completion = is_hemimetric(g) && !find_triangle_violation(g).has_value() &&
                            is_domain(g, ContinuityKind::Smyth) && is_basis(g, base, BasisKind::Smyth);
  return r;
}

}  // namespace qdt
