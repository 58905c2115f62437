#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdt/catalog.hpp"

namespace qdt {

enum class Verdict { Pass, Fail, Skipped, SampledPass };
const char* to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view s);

struct CheckResult {
  std::string check_id;
  int criterion = 0;
  std::string fingerprint;
  Verdict verdict = Verdict::Skipped;
  std::string reason;                  // skipped only
  std::optional<nlohmann::json> witness;  // fail: always holds "space"
  nlohmann::json info;                 // check-specific counters, may be null
  std::int64_t millis = 0;
};
nlohmann::json to_json(const CheckResult& r);
CheckResult result_from_json(const nlohmann::json& j);

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string reason;
  nlohmann::json detail;  // attached to the witness on failure
  nlohmann::json info;
};

struct SpaceCheck {
  std::string id;
  int criterion = 0;
  std::function<Outcome(const DistanceSpace&, std::mt19937_64&)> run;
};

// Checks over finite spaces, sorted by id.
const std::vector<SpaceCheck>& space_checks();
const SpaceCheck* find_space_check(std::string_view id);
// Triangle inequality with the sign flipped; fails on almost every space.
const SpaceCheck& corrupted_check();

struct RandomScope {
  std::size_t count = 0;
  std::size_t size_lo = 2, size_hi = 5;
  std::vector<Profile> profiles{std::begin(kAllProfiles), std::end(kAllProfiles)};
  std::uint64_t seed = 42;
};
// The i-th space of a random scope.
DistanceSpace scope_space(const RandomScope& scope, std::size_t i);

struct SuiteOptions {
  bool named = false;
  std::optional<RandomScope> random;
  std::size_t jobs = 1;
  // Restrict to these check ids; empty runs all.
  std::vector<std::string> only;
};

// Per-space checks over the selected spaces, plus registered catalog
// witnesses in the named scope.  Sorted by (check_id, fingerprint).
std::vector<CheckResult> run_suite(const SuiteOptions& opts);
CheckResult run_check(const SpaceCheck& check, const DistanceSpace& s, const std::string& fingerprint);

// Rebuilds a space from "catalog:NAME" or "random:PROFILE:n=N:seed=S".
std::optional<DistanceSpace> space_from_fingerprint(const std::string& fingerprint);

// Greedy local minimisation of a failing witness space: drop points, raise
// entries to inf, round rationals, keeping each step only while the
// triangle inequality holds and the check still fails.  Throws
// std::invalid_argument unless the result is a fail.
CheckResult shrink(const CheckResult& failed, const SpaceCheck& check);

// Re-runs the check on the space named by the fingerprint (and, for fails,
// on the witness space) and reports whether the verdicts repeat.
bool replay(const CheckResult& r);

struct SelfTestReport {
  bool found = false;
  std::size_t spaces_tried = 0;
  CheckResult original;
  CheckResult shrunk;
  bool replay_ok = false;
};
SelfTestReport self_test(std::uint64_t seed = 1, std::size_t max_spaces = 100);

nlohmann::json report_json(const std::vector<CheckResult>& results);
bool any_fail(const std::vector<CheckResult>& results);

}  // namespace qdt
