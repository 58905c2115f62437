#include "qdt/catalog.hpp"

#include <algorithm>
#include <map>

namespace qdt {

namespace {

GRel matrix(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<ExtVal>> out;
  for (auto row : rows) {
    out.emplace_back();
    for (const char* v : row) out.back().push_back(ExtVal::parse(v));
  }
  return GRel::from_rows(out);
}

DistanceSpace finite_space(std::vector<std::string> labels, GRel d, std::string name) {
  return DistanceSpace(std::move(labels), std::move(d), std::move(name));
}

CatalogSpace make_finite(std::string name, std::string description, std::vector<std::string> labels, GRel d) {
  CatalogSpace c;
  c.name = name;
  c.description = std::move(description);
  c.finite = finite_space(std::move(labels), std::move(d), std::move(name));
  return c;
}

ExtVal right_projection(const Rational&, const Rational& z) { return ExtVal(z); }

ExtVal chain(const Rational& m, const Rational& n) { return m <= n ? kZero : kInf; }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(0, 40), den(1, 6);
  return Rational(num(rng), den(rng));
}

Rational random_natural(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> n(0, 60);
  return Rational(n(rng));
}

// (d(x,y) - r + s)_+ over a formula space.
ExtVal formula_dplus(const FormulaSpace& f, const Rational& x, const Rational& r, const Rational& y, const Rational& s) {
  return tminus(f.d(x, y) + ExtVal(s), ExtVal(r));
}

CatalogSpace right_projection_space() {
  CatalogSpace c;
  c.name = "right-projection";
  c.description = "nonnegative rationals with y d z = z";
  c.formula = FormulaSpace{right_projection, random_rational};
  const FormulaSpace& f = *c.formula;
  {
    Witness w{"radius-shift identity", "(0,0) d+ (1,1) = (0,0) d+ (2,0) = 2"};
    ExtVal a = formula_dplus(f, Rational(0), Rational(0), Rational(1), Rational(1));
    ExtVal b = formula_dplus(f, Rational(0), Rational(0), Rational(2), Rational(0));
    w.holds = a == ExtVal(2) && b == ExtVal(2);
    c.witnesses.push_back(w);
  }
  {
    // Every x gives d(x,0) - d(x,1) = -1, so the supremum is negative.
    Witness w{"lower agreement criterion", "y = 0, z = 1: sup_x (d(x,0) - d(x,1)) = -1", false};
    std::mt19937_64 rng(7);
    bool negative = true;
    for (int i = 0; i < 100; ++i) {
      Rational x = random_rational(rng);
      SignedExt diff = SignedExt::diff(f.d(x, Rational(0)), f.d(x, Rational(1)));
      negative = negative && diff == SignedExt(Rational(-1));
    }
    w.holds = !negative;
    c.witnesses.push_back(w);
  }
  {
    Witness w{"shift invariance", "(x,r) d+ (y,s) = (x,r) d+ (y+t,s-t) for t ≤ s, 200 samples"};
    std::mt19937_64 rng(11);
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
      Rational x = random_rational(rng), r = random_rational(rng), y = random_rational(rng), s = random_rational(rng);
      Rational t = random_rational(rng);
      if (s < t) std::swap(s, t);
      ok = ok && formula_dplus(f, x, r, y, s) == formula_dplus(f, x, r, y + t, s - t);
    }
    w.holds = ok;
    c.witnesses.push_back(w);
  }
  return c;
}

CatalogSpace natural_chain_space() {
  CatalogSpace c;
  c.name = "n-chain";
  c.description = "natural numbers with d(m,n) = 0 iff m <= n, else inf";
  c.formula = FormulaSpace{chain, random_natural};
  const FormulaSpace& f = *c.formula;
  // x_n = n over a window of tails: forward distances vanish, backward ones never do.
  const std::int64_t start = 1, window = 50;
  {
    Witness w{"sequence x_n = n is Cauchy", "d(x_m, x_n) = 0 for m <= n in [1,50]"};
    bool ok = true;
    for (std::int64_t m = start; m < start + window; ++m)
      for (std::int64_t n = m; n < start + window; ++n) ok = ok && f.d(Rational(m), Rational(n)).is_zero();
    w.holds = ok;
    c.witnesses.push_back(w);
  }
  {
    Witness w{"sequence x_n = n is op-Cauchy", "d(x_n, x_m) = inf for m < n", false};
    bool all_inf = true;
    for (std::int64_t m = start; m < start + window; ++m)
      for (std::int64_t n = m + 1; n < start + window; ++n) all_inf = all_inf && f.d(Rational(n), Rational(m)).is_inf();
    w.holds = !all_inf;
    c.witnesses.push_back(w);
  }
  {
    Witness w{"Noetherian", "x_n = n is Cauchy but not op-Cauchy", false};
    w.holds = !(c.witnesses[0].holds && !c.witnesses[1].holds);
    c.witnesses.push_back(w);
  }
  {
    // Y = {(n, 1/n)}: for each target (n,1/n) the source (n+1, 1/(n+1)) is
    // infinitely far, so every column maximum is inf.
    Witness w{"reverse self-distance of {(n,1/n)} is zero", "source (n+1,1/(n+1)) against target (n,1/n)", false};
    bool all_inf = true;
    for (std::int64_t n = 1; n <= window; ++n) {
      ExtVal worst = formula_dplus(f, Rational(n + 1), Rational(1, n + 1), Rational(n), Rational(1, n));
      all_inf = all_inf && worst.is_inf();
    }
    w.holds = !all_inf;
    c.witnesses.push_back(w);
  }
  return c;
}

using Builder = CatalogSpace (*)();

const std::map<std::string, Builder, std::less<>>& registry() {
  static const std::map<std::string, Builder, std::less<>> reg = {
      {"space-b",
       [] {
         return make_finite("space-b", "two-point quasimetric", {"p", "q"}, matrix({{"0", "1"}, {"2", "0"}}));
       }},
      {"3-chain",
       [] {
         return make_finite("3-chain", "reflexive chain a <= b <= c as a 0/inf relation", {"a", "b", "c"},
                            matrix({{"0", "0", "0"}, {"inf", "0", "0"}, {"inf", "inf", "0"}}));
       }},
      {"strict-2-chain",
       [] {
         return make_finite("strict-2-chain", "only a < b", {"a", "b"}, matrix({{"inf", "0"}, {"inf", "inf"}}));
       }},
      {"non-predomain",
       [] {
         return make_finite("non-predomain", "continuous but upper hemimetric exceeds lower", {"a", "b"},
                            matrix({{"0", "0"}, {"inf", "inf"}}));
       }},
      {"zero", [] { return make_finite("zero", "constant zero on two points", {"a", "b"}, matrix({{"0", "0"}, {"0", "0"}})); }},
      {"one-point", [] { return make_finite("one-point", "single reflexive point", {"a"}, matrix({{"0"}})); }},
      {"duplicate-point",
       [] {
         return make_finite("duplicate-point", "space-b with p doubled", {"p", "p'", "q"},
                            matrix({{"0", "0", "1"}, {"0", "0", "1"}, {"2", "2", "0"}}));
       }},
      {"void-point",
       [] { return make_finite("void-point", "single point at infinite distance from itself", {"a"}, matrix({{"inf"}})); }},
      {"right-projection", right_projection_space},
      {"n-chain", natural_chain_space},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
  }();
  return names;
}

CatalogSpace catalog_get(std::string_view name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::out_of_range("unknown catalog space '" + std::string(name) + "'");
  return it->second();
}

std::vector<DistanceSpace> finite_catalog() {
  std::vector<DistanceSpace> out;
  for (const auto& name : catalog_names()) {
    CatalogSpace c = catalog_get(name);
    if (c.finite) out.push_back(*c.finite);
  }
  return out;
}

std::optional<std::array<Rational, 3>> formula_triangle_violation(const FormulaSpace& f, std::mt19937_64& rng,
                                                                 std::size_t samples) {
  for (std::size_t i = 0; i < samples; ++i) {
    Rational x = f.sample(rng), y = f.sample(rng), z = f.sample(rng);
    if (f.d(x, z) + f.d(z, y) < f.d(x, y)) return std::array<Rational, 3>{x, y, z};
  }
  return std::nullopt;
}

const char* to_string(Profile p) {
  switch (p) {
    case Profile::Generic: return "generic";
    case Profile::Hemimetric: return "hemimetric";
    case Profile::Quasimetric: return "quasimetric";
    case Profile::Characteristic: return "characteristic";
  }
  return "?";
}

std::optional<Profile> parse_profile(std::string_view s) {
  for (Profile p : kAllProfiles)
    if (s == to_string(p)) return p;
  if (s == "characteristic-relation") return Profile::Characteristic;
  return std::nullopt;
}

GRel minplus_closure(GRel d) {
  for (;;) {
    GRel next = pointwise_min(d, compose(d, d));
    if (next == d) return d;
    d = std::move(next);
  }
}

GRel random_matrix(std::size_t n, std::uint64_t seed, Profile profile) {
  if (n < 1 || n > kEnumerationBound) throw SizeBoundError("random_space: size must be in 1..12");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + n * 131 + static_cast<std::uint64_t>(profile));
  std::uniform_int_distribution<std::int64_t> num(0, 8), pos(1, 8), den(1, 4);
  std::uniform_int_distribution<int> coin(0, 3);
  GRel d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool inf = coin(rng) == 0;
      switch (profile) {
        case Profile::Characteristic: d(i, j) = inf || coin(rng) == 1 ? kInf : kZero; break;
        case Profile::Quasimetric:
          d(i, j) = inf ? kInf : ExtVal::ratio(pos(rng), den(rng));
          break;
        default: d(i, j) = inf ? kInf : ExtVal::ratio(num(rng), den(rng)); break;
      }
      if (i == j && profile != Profile::Generic && profile != Profile::Characteristic) d(i, j) = kZero;
    }
  return minplus_closure(std::move(d));
}

DistanceSpace random_space(std::size_t n, std::uint64_t seed, Profile profile) {
  GRel d = random_matrix(n, seed, profile);
  return DistanceSpace(std::move(d),
                       "random:" + std::string(to_string(profile)) + ":n=" + std::to_string(n) + ":seed=" + std::to_string(seed));
}

bool matches_profile(const GRel& d, Profile p) {
  switch (p) {
    case Profile::Generic: return true;
    case Profile::Hemimetric: return is_hemimetric(d);
    case Profile::Quasimetric: return is_quasimetric(d);
    case Profile::Characteristic: return d.is_characteristic();
  }
  return false;
}

}  // namespace qdt
