#include "qdt/hyperspace.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qdt {

namespace {

// Calls f on every family of 1..k distinct indices below m.
void for_each_family(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!cur.empty()) f(cur);
    if (cur.size() == k) return;
    for (std::size_t i = start; i < m; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::string family_str(std::span<const Mask> family) {
  std::string s = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) s += ", ";
    s += "{";
    Subset sub = to_subset(family[i]);
    for (std::size_t j = 0; j < sub.size(); ++j) s += (j ? "," : "") + std::to_string(sub[j]);
    s += "}";
  }
  return s + "}";
}

// Every directed family of at most max_family members, and every family of
// all members below one member (by mask inclusion), has a d-max among the
// members.
bool complete_sampled(const GRel& dist, std::span<const Mask> members, std::size_t max_family) {
  const std::size_t m = dist.rows();
  auto has_max = [&](const std::vector<std::size_t>& fam) {
    if (!is_directed(dist, fam)) return true;
    for (std::size_t z = 0; z < m; ++z)
      if (bound_check(dist, fam, z, SubsetRel::Max)) return true;
    return false;
  };
  bool ok = true;
  for_each_family(m, max_family, [&](const std::vector<std::size_t>& fam) {
    if (ok && !has_max(fam)) ok = false;
  });
  if (!ok) return false;
  if (members.size() != m) return true;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> fam;
    for (std::size_t j = 0; j < m; ++j)
      if ((members[j] & ~members[i]) == 0) fam.push_back(j);
    if (!has_max(fam)) return false;
  }
  return true;
}

}  // namespace

ExtVal hausdorff(const GRel& d, std::span<const std::size_t> Y, std::span<const std::size_t> Z, HausdorffKind kind) {
  if (kind == HausdorffKind::Classical) {
    ExtVal out = kZero;
    for (std::size_t y : Y) {
      ExtVal best = kInf;
      for (std::size_t z : Z) best = min(best, d(y, z));
      out = max(out, best);
    }
    return out;
  }
  ExtVal out = kInf;
  for (std::size_t z : Z) {
    ExtVal worst = kZero;
    for (std::size_t y : Y) worst = max(worst, d(y, z));
    out = min(out, worst);
  }
  return out;
}

ExtVal hausdorff(const GRel& d, Mask Y, Mask Z, HausdorffKind kind) {
  Subset y = to_subset(Y), z = to_subset(Z);
  return hausdorff(d, y, z, kind);
}

GRel hausdorff_matrix(const GRel& d, std::span<const Mask> family, HausdorffKind kind) {
  const std::size_t m = family.size();
  std::vector<Subset> subs;
  for (Mask f : family) subs.push_back(to_subset(f));
  GRel out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = hausdorff(d, subs[i], subs[j], kind);
  return out;
}

GRel hausdorff_matrix(const GRel& d, HausdorffKind kind) {
  require_enumerable(d.rows(), "hausdorff_matrix");
  std::vector<Mask> all;
  for (Mask m = 0; m <= full_mask(d.rows()); ++m) {
    all.push_back(m);
    if (m == full_mask(d.rows())) break;
  }
  return hausdorff_matrix(d, all, kind);
}

HausdorffCompositionReport hausdorff_composition_check(const GRel& d, const GRel& e) {
  if (d.rows() != e.rows() || !d.is_square() || !e.is_square()) throw DimensionError("hausdorff_composition_check: carriers differ");
  require_enumerable(d.rows(), "hausdorff_composition_check", 8);
  GRel de = compose(d, e);
  GRel dH = hausdorff_matrix(d, HausdorffKind::Classical), dR = hausdorff_matrix(d, HausdorffKind::Reverse);
  GRel eH = hausdorff_matrix(e, HausdorffKind::Classical), eR = hausdorff_matrix(e, HausdorffKind::Reverse);
  GRel deH = hausdorff_matrix(de, HausdorffKind::Classical), deR = hausdorff_matrix(de, HausdorffKind::Reverse);
  HausdorffCompositionReport r;
  r.classical_below_reverse = leq(dH, dR);
  GRel mid = compose(dH, eH);
  r.classical_composition = leq(deH, mid) && leq(mid, scale(2, deH));
  GRel mixed = compose(dH, eR);
  r.mixed_composition = leq(deR, mixed) && leq(mixed, scale(2, deR));
  r.reverse_composition = compose(dR, eR) == compose(dR, eH);
  return r;
}

UnionReport union_completeness_check(const GRel& d, std::size_t max_family) {
  const std::size_t n = d.rows();
  require_enumerable(n, "union_completeness_check", 8);
  if (n > 5) max_family = std::min<std::size_t>(max_family, 2);
  GRel rev = hausdorff_matrix(d, HausdorffKind::Reverse);
  GRel cls = hausdorff_matrix(d, HausdorffKind::Classical);
  const std::size_t m = rev.rows();
  UnionReport r;
  auto examine = [&](const std::vector<std::size_t>& fam) {
    Mask u = 0;
    for (std::size_t i : fam) u |= Mask(i);
    if (is_directed(rev, fam)) {
      ++r.reverse_families;
      if (!bound_check(rev, fam, u, SubsetRel::Max) && r.reverse_ok) {
        r.reverse_ok = false;
        std::vector<Mask> f(fam.begin(), fam.end());
        r.witness = "reverse: " + family_str(f);
      }
    }
    if (is_directed(cls, fam)) {
      ++r.classical_families;
      if (!bound_check(cls, fam, u, SubsetRel::Sup) && r.classical_ok) {
        r.classical_ok = false;
        std::vector<Mask> f(fam.begin(), fam.end());
        r.witness = "classical: " + family_str(f);
      }
    }
  };
  for_each_family(m, max_family, examine);
  for (std::size_t y = 1; y < m; ++y) {
    std::vector<std::size_t> fam;
    for (std::size_t s = 1; s < m; ++s)
      if ((s & ~y) == 0) fam.push_back(s);
    examine(fam);
  }
  return r;
}

bool is_noetherian(const GRel& d) {
  GRel dop = op(d);
  for (Mask v : zero_clusters(d))
    if (!is_zero_cluster(dop, to_subset(v))) return false;
  return true;
}

UPSeq random_upseq(std::size_t n, std::mt19937_64& rng, std::size_t max_prefix, std::size_t max_cycle) {
  std::uniform_int_distribution<std::size_t> pt(0, n - 1), pre(0, max_prefix), cyc(1, max_cycle);
  UPSeq s;
  s.prefix.resize(pre(rng));
  for (auto& p : s.prefix) p = pt(rng);
  s.cycle.resize(cyc(rng));
  for (auto& p : s.cycle) p = pt(rng);
  return s;
}

bool noetherian_sampled(const GRel& d, std::mt19937_64& rng, std::size_t samples) {
  const std::size_t n = d.rows();
  if (n == 0) return true;
  for (std::size_t k = 0; k < samples; ++k) {
    UPSeq s = random_upseq(n, rng);
    // Bias towards short cycles of reflexive points so that Cauchy samples occur.
    if (k % 2 == 1) s.cycle.resize(1);
    bool op_cauchy = seq_cauchy(d, s, CauchyMode::OpCauchy);
    if (seq_cauchy(d, s, CauchyMode::Cauchy) && !op_cauchy) return false;
    if (seq_cauchy(d, s, CauchyMode::PreCauchy) && !op_cauchy) return false;
  }
  return true;
}

bool dHrev_hemimetric_check(const GRel& d) {
  require_enumerable(d.rows(), "dHrev_hemimetric_check", 10);
  for (Mask y : directed_subsets(d))
    if (!hausdorff(d, y, y, HausdorffKind::Reverse).is_zero()) return false;
  return true;
}

RelationalCompletion relational_completion(const DistanceSpace& s) {
  const GRel& d = s.d();
  const std::size_t n = s.size();
  require_enumerable(n, "relational_completion", 10);
  if (!max_continuous_criterion(d))
    throw std::invalid_argument("relational completion needs a d-max-continuous space; '" + s.name() + "' is not");
  RelationalCompletion c;
  c.ideals = directed_subsets(d);
  c.dist = hausdorff_matrix(d, c.ideals, HausdorffKind::Reverse);
  GRel classical = hausdorff_matrix(d, c.ideals, HausdorffKind::Classical);
  c.lower_is_classical = lower_hemimetric(c.dist) == classical;
  c.continuous = max_continuous_criterion(c.dist);
  c.predomain = leq(upper_hemimetric(c.dist), lower_hemimetric(c.dist));
  c.complete_sampled = complete_sampled(c.dist, c.ideals, 3);

  std::map<Mask, std::size_t> index;
  for (std::size_t i = 0; i < c.ideals.size(); ++i) index[c.ideals[i]] = i;
  for (std::size_t x = 0; x < n; ++x) {
    Mask below = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (d(y, x).is_zero()) below |= Mask(1) << y;
    auto it = index.find(below);
    if (it == index.end()) throw std::logic_error("principal ideal is not directed in a continuous space");
    c.embedding.push_back(it->second);
  }
  std::vector<std::size_t> basis = c.embedding;
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  c.basis = is_basis(c.dist, basis, BasisKind::Max);
  c.contracting = c.isometric = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const ExtVal& v = c.dist(c.embedding[x], c.embedding[y]);
      if (d(x, y) < v) c.contracting = false;
      if (v != d(x, y)) c.isometric = false;
    }
  return c;
}

ExtensionReport completion_extension(const DistanceSpace& s) {
  ExtensionReport r;
  if (!max_continuous_criterion(s.d())) return r;
  RelationalCompletion c = relational_completion(s);
  r.built = true;
  const GRel& d = s.d();
  const std::size_t n = s.size(), m = c.ideals.size();
  GRel g(n + m, n + m);
  auto at = [&](std::size_t i) { return i < n ? c.embedding[i] : i - n; };
  for (std::size_t i = 0; i < n + m; ++i)
    for (std::size_t j = 0; j < n + m; ++j) g(i, j) = (i < n && j < n) ? d(i, j) : c.dist(at(i), at(j));
  r.triangle = !find_triangle_violation(g).has_value();
  if (!r.triangle) return r;
  std::vector<std::size_t> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = i;
  r.basis = is_basis(g, base, BasisKind::Max);
  std::vector<Mask> no_members;
  r.domain = max_continuous_criterion(g) && leq(upper_hemimetric(g), lower_hemimetric(g)) &&
             complete_sampled(g, no_members, 3);
  return r;
}

std::vector<Mask> ideals_of(const GRel& d, Mask B) {
  Subset b = to_subset(B);
  require_enumerable(b.size(), "ideals_of");
  GRel db = submatrix(d, b, b);
  FiniteTopology t = generate(upper_hemimetric(db), TopologyKind::Alexandroff);
  std::vector<Mask> out;
  for (Mask local : directed_subsets(db)) {
    if (closure(t, local) != local) continue;
    Mask global = 0;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (has(local, k)) global |= Mask(1) << b[k];
    out.push_back(global);
  }
  std::sort(out.begin(), out.end());
  return out;
}

UniversalityReport universality_check(const DistanceSpace& s, Mask B) {
  const GRel& d = s.d();
  const std::size_t n = s.size();
  UniversalityReport r;
  r.hypotheses = B != 0 && is_basis(d, B, BasisKind::Max) && is_predomain(d, ContinuityKind::Max);
  r.complete = is_complete(d, ContinuityKind::Max);
  if (!r.hypotheses) return r;
  auto ideals = ideals_of(d, B);
  r.ideal_count = ideals.size();
  std::vector<Mask> image(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (has(B, y) && d(y, x).is_zero()) image[x] |= Mask(1) << y;
  r.images_are_ideals = std::all_of(image.begin(), image.end(),
                                    [&](Mask m) { return std::binary_search(ideals.begin(), ideals.end(), m); });
  r.isometric = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (hausdorff(d, image[x], image[y], HausdorffKind::Reverse) != d(x, y)) r.isometric = false;
  r.surjective = std::all_of(ideals.begin(), ideals.end(), [&](Mask i) {
    return std::find(image.begin(), image.end(), i) != image.end();
  });
  return r;
}

}  // namespace qdt
