#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qdt/space.hpp"

namespace qdt {

// Distance given by a closed form over a countable carrier of nonnegative
// rationals (natural numbers for discrete carriers).
struct FormulaSpace {
  std::function<ExtVal(const Rational&, const Rational&)> d;
  std::function<Rational(std::mt19937_64&)> sample;
};

// A claim checked against a specific instance; holds records the evaluated
// outcome and expected the outcome the claim predicts.
struct Witness {
  std::string claim;
  std::string data;
  bool expected = true;
  bool holds = false;
  bool confirmed() const { return holds == expected; }
};

struct CatalogSpace {
  std::string name;
  std::string description;
  std::optional<DistanceSpace> finite;
  std::optional<FormulaSpace> formula;
  std::vector<Witness> witnesses;
  bool is_finite() const { return finite.has_value(); }
};

const std::vector<std::string>& catalog_names();
// Throws std::out_of_range for unknown names.
CatalogSpace catalog_get(std::string_view name);
std::vector<DistanceSpace> finite_catalog();

// First violating triple among random samples, if any.
std::optional<std::array<Rational, 3>> formula_triangle_violation(const FormulaSpace& f, std::mt19937_64& rng,
                                                                 std::size_t samples = 1000);

enum class Profile { Generic, Hemimetric, Quasimetric, Characteristic };
inline constexpr Profile kAllProfiles[] = {Profile::Generic, Profile::Hemimetric, Profile::Quasimetric,
                                           Profile::Characteristic};
const char* to_string(Profile p);
std::optional<Profile> parse_profile(std::string_view s);

// Entries drawn from {a/b : 0 ≤ a ≤ 8, 1 ≤ b ≤ 4} ∪ {inf} with the profile's
// zero pattern, then closed under min-plus composition.  1 ≤ n ≤ 12.
GRel random_matrix(std::size_t n, std::uint64_t seed, Profile profile);
DistanceSpace random_space(std::size_t n, std::uint64_t seed, Profile profile);
// Pointwise minimum over all paths; the result satisfies the triangle inequality.
GRel minplus_closure(GRel d);

bool matches_profile(const GRel& d, Profile p);

}  // namespace qdt
