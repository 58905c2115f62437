#include "qdt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "qdt/formalballs.hpp"
#include "qdt/io.hpp"

namespace qdt {

using nlohmann::json;

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Seeded from the check and the space contents, so a serialized witness
// replays with the same random choices.
std::mt19937_64 check_rng(const std::string& id, const DistanceSpace& s) {
  return std::mt19937_64(fnv1a(id) ^ (fnv1a(space_to_json(s)) * 31));
}

Outcome pass_if(bool ok, json detail = {}, Verdict on_pass = Verdict::Pass) {
  Outcome o;
  o.verdict = ok ? on_pass : Verdict::Fail;
  if (!ok) o.detail = std::move(detail);
  return o;
}

Outcome skipped(std::string reason) {
  Outcome o;
  o.verdict = Verdict::Skipped;
  o.reason = std::move(reason);
  return o;
}

json report_json(const SampleReport& r) {
  return {{"instances", r.instances}, {"positive", r.positive}, {"ok", r.ok}, {"witness", r.witness}};
}

GRel zero_rel(std::size_t n) { return GRel(n, n, kZero); }

Outcome check_triangle(const DistanceSpace& s, std::mt19937_64&) {
  auto v = find_triangle_violation(s.d());
  json detail;
  if (v) detail = {{"x", s.label((*v)[0])}, {"y", s.label((*v)[1])}, {"z", s.label((*v)[2])}};
  return pass_if(!v, detail);
}

Outcome check_fd_continuity(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  const bool c1 = smyth_continuous_by_clusters(d);
  const bool c1_criterion = smyth_continuous(d);
  const bool c2 = interpolation_check(d, Interpolation::SetPhi);
  const bool c25 = interpolation_check(d, Interpolation::SetUniform) && interpolation_check(d, Interpolation::PhiSelf);
  Outcome o = pass_if(c1 == c1_criterion && c1 == c2 && c1 == c25,
                      {{"continuous_by_clusters", c1}, {"criterion", c1_criterion}, {"set_phi", c2}, {"set_uniform_and_phi_self", c25}});
  o.info = {{"continuous", c1}};
  return o;
}

Outcome check_fd_continuity_sequences(const DistanceSpace& s, std::mt19937_64& rng) {
  const GRel& d = s.d();
  const std::size_t n = s.size();
  bool all = true;
  json failing;
  auto attempt = [&](const UPSeq& q) {
    if (!all) return;
    if (!lower_cauchy_replacement(d, q)) {
      all = false;
      failing = {{"prefix", q.prefix}, {"cycle", q.cycle}};
    }
  };
  for (std::size_t x = 0; x < n; ++x) attempt(UPSeq{{}, {x}});
  for (int i = 0; i < 200; ++i) attempt(random_upseq(n, rng));
  const bool continuous = smyth_continuous_by_clusters(d);
  return pass_if(all == continuous, {{"replacements_exist", all}, {"continuous", continuous}, {"sequence", failing}},
                 Verdict::SampledPass);
}

Outcome check_max_continuity(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  if (s.size() > 8) return skipped("size above 8");
  const bool c1 = max_continuous(d);
  const bool c2 = interpolation_check(d, Interpolation::SetLeq);
  const bool c3 = interpolation_check(d, Interpolation::LeqSelf) && interpolation_check(d, Interpolation::LeqSetInPhi);
  const bool c4 = interpolation_check(d, Interpolation::LeqSelfUniform) && smyth_continuous(d);
  const bool c5 = lower_directed_replacement(d);
  const bool ok = c1 == c2 && c1 == c3 && c1 == c4 && c1 == c5;
  Outcome o = pass_if(ok, {{"max_continuous", c1}, {"set_leq", c2}, {"leq_self_and_set_in_phi", c3},
                           {"leq_self_uniform_and_smyth", c4}, {"lower_directed_replacement", c5}});
  o.info = {{"continuous", c1}};
  return o;
}

Outcome check_corollaries(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  if (!smyth_continuous(d)) return skipped("not Smyth-continuous");
  json detail;
  bool ok = true;
  const bool lower_set = interpolation_check(d, Interpolation::LowerSetUniform);
  const bool leq_self = interpolation_check(d, Interpolation::LeqSelfUniform);
  if (lower_set && !relation_max_continuous(strict_rel(d), d)) {
    ok = false;
    detail["strict_max_continuity"] = "hypothesis holds, conclusion fails";
  }
  if (leq_self && !max_continuous(d)) {
    ok = false;
    detail["max_continuity"] = "hypothesis holds, conclusion fails";
  }
  const bool any_hypothesis = lower_set || interpolation_check(d, Interpolation::LowerSymPhiUniform) ||
                              (leq_self && interpolation_check(d, Interpolation::SetUpperLeq));
  if (any_hypothesis) {
    const bool smyth_domain = is_domain(d, ContinuityKind::Smyth);
    const bool max_side = is_complete(sym(lower_hemimetric(d)), ContinuityKind::Yoneda) && is_domain(d, ContinuityKind::Max);
    if (smyth_domain != max_side) {
      ok = false;
      detail["domain_equivalence"] = {{"smyth_domain", smyth_domain}, {"complete_max_domain", max_side}};
    }
  }
  return pass_if(ok, detail);
}

Outcome check_collapse(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  if (!d.is_characteristic()) return skipped("not a 0/inf relation");
  const bool smyth = smyth_continuous_by_clusters(d);
  const bool max = max_continuous(d);
  const bool interp = interpolation_check(d, Interpolation::SetSelf);
  Outcome o = pass_if(smyth == max && max == interp, {{"smyth", smyth}, {"max", max}, {"interpolation", interp}});
  o.info = {{"continuous", smyth}};
  return o;
}

Outcome check_way_below_props(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& e = s.d();
  if (!is_hemimetric(e)) return skipped("not hemimetric");
  for (WayBelowKind k : {WayBelowKind::Yoneda, WayBelowKind::Smyth, WayBelowKind::Sup, WayBelowKind::Max}) {
    GRel w = way_below(e, k);
    const bool below = leq(pointwise_max(lower_hemimetric(w), upper_hemimetric(w)), e);
    const bool above = leq(e, w);
    const bool triangle = leq(w, compose(w, w));
    if (!(below && above && triangle))
      return pass_if(false, {{"kind", to_string(k)}, {"way_below", grel_json(w)}, {"hemimetrics_below", below},
                             {"above", above}, {"triangle", triangle}});
  }
  return pass_if(true);
}

Outcome check_way_below_upper(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  if (!smyth_continuous(d)) return skipped("not continuous");
  const GRel up = upper_hemimetric(d);
  GRel smyth = way_below(d, WayBelowKind::Smyth), max = way_below(d, WayBelowKind::Max);
  return pass_if(smyth == up && max == up,
                 {{"upper", grel_json(up)}, {"smyth_way_below", grel_json(smyth)}, {"max_way_below", grel_json(max)}});
}

Outcome check_duality(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  const std::pair<const char*, GRel> partners[] = {
      {"lower", lower_hemimetric(d)}, {"self", d}, {"zero", zero_rel(s.size())}};
  json info = json::object();
  for (const auto& [name, e] : partners) {
    DualityReport r = duality_check(d, e);
    info[name] = {{"topological", r.topological_side1}, {"relational", r.relational_side1}};
    if (!r.consistent())
      return pass_if(false, {{"partner", name},
                             {"e", grel_json(e)},
                             {"topological", {r.topological_side1, r.topological_side2}},
                             {"relational", {r.relational_side1, r.relational_side2}}});
  }
  Outcome o = pass_if(true);
  o.info = info;
  return o;
}

Outcome check_hausdorff_composition(const DistanceSpace& s, std::mt19937_64&) {
  if (s.size() > 8) return skipped("size above 8");
  const GRel& d = s.d();
  for (const auto& [name, e] : {std::pair<const char*, GRel>{"self", d}, {"upper", upper_hemimetric(d)}}) {
    HausdorffCompositionReport r = hausdorff_composition_check(d, e);
    if (!r.all())
      return pass_if(false, {{"partner", name},
                             {"classical_below_reverse", r.classical_below_reverse},
                             {"classical_composition", r.classical_composition},
                             {"mixed_composition", r.mixed_composition},
                             {"reverse_composition", r.reverse_composition}});
  }
  return pass_if(true);
}

Outcome check_union(const DistanceSpace& s, std::mt19937_64&) {
  if (s.size() > 8) return skipped("size above 8");
  UnionReport r = union_completeness_check(s.d(), 4);
  Outcome o = pass_if(r.reverse_ok && r.classical_ok,
                      {{"reverse_ok", r.reverse_ok}, {"classical_ok", r.classical_ok}, {"family", r.witness}});
  o.info = {{"reverse_families", r.reverse_families}, {"classical_families", r.classical_families}};
  return o;
}

Outcome check_noetherian(const DistanceSpace& s, std::mt19937_64& rng) {
  const GRel& d = s.d();
  const bool criterion = is_noetherian(d);
  const bool sampled = noetherian_sampled(d, rng, 1000);
  const bool hemi = s.size() > 10 || dHrev_hemimetric_check(d);
  return pass_if(criterion && sampled && hemi, {{"criterion", criterion}, {"sampled", sampled}, {"reverse_hemimetric", hemi}},
                 Verdict::SampledPass);
}

Outcome check_relational_completion(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  if (s.size() > 10) return skipped("size above 10");
  if (!max_continuous_criterion(d)) return skipped("not max-continuous");
  RelationalCompletion c = relational_completion(s);
  const bool predomain = is_predomain(d, ContinuityKind::Max);
  const bool complete = is_complete(d, ContinuityKind::Max);
  ExtensionReport ext = completion_extension(s);
  UniversalityReport u = universality_check(s, full_mask(s.size()));
  json detail = {{"lower_is_classical", c.lower_is_classical},
                 {"domain", c.is_domain()},
                 {"basis", c.basis},
                 {"contracting", c.contracting},
                 {"isometric", c.isometric},
                 {"predomain", predomain},
                 {"extension", ext.valid()},
                 {"universality", {{"hypotheses", u.hypotheses}, {"isometric", u.isometric}, {"surjective", u.surjective}, {"complete", complete}}}};
  bool ok = c.lower_is_classical && c.is_domain() && c.basis && c.contracting && c.isometric == predomain &&
            ext.valid() == predomain;
  if (u.hypotheses) ok = ok && u.images_are_ideals && u.isometric && u.surjective == complete;
  Outcome o = pass_if(ok, detail, Verdict::SampledPass);
  o.info = {{"predomain", predomain}, {"complete", complete}};
  return o;
}

Outcome check_ball_composition(const DistanceSpace& s, std::mt19937_64& rng) {
  SampleReport r = ball_composition_check(s.d(), rng, 500);
  return pass_if(r.ok, report_json(r), Verdict::SampledPass);
}

Outcome check_underline(const DistanceSpace& s, std::mt19937_64& rng) {
  SampleReport r = hemimetric_comparison(s.d(), rng, 200);
  Outcome o = pass_if(r.ok, report_json(r), Verdict::SampledPass);
  o.info = {{"criterion", underline_agreement(s.d()).criterion}};
  return o;
}

Outcome check_recovery(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  const bool criterion = underline_agreement(d).criterion;
  const SignedMatrix L = lower_signed(d);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) {
      ExtVal weak = recover_weak(d, x, y);
      if (weak != d(x, y))
        return pass_if(false, {{"x", s.label(x)}, {"y", s.label(y)}, {"weak", weak.str()}, {"d", d(x, y).str()}});
      if (criterion) {
        ExtVal strict = recover_strict(d, L, x, y);
        if (strict != d(x, y))
          return pass_if(false, {{"x", s.label(x)}, {"y", s.label(y)}, {"strict", strict.str()}, {"d", d(x, y).str()}});
      }
    }
  return pass_if(true);
}

Outcome check_interpolation_maxima(const DistanceSpace& s, std::mt19937_64& rng) {
  if (!underline_agreement(s.d()).criterion) return skipped("lower agreement criterion fails");
  InterpolationReport ip = interpolation_laws(s.d(), rng, 200);
  MaximaReport mx = ball_maxima_check(s.d(), rng, 200);
  const bool ok = ip.set_law.ok && ip.strict_law.ok && mx.finite_forward.ok && mx.open_agree.ok;
  return pass_if(ok,
                 {{"set_law", report_json(ip.set_law)},
                  {"strict_law", report_json(ip.strict_law)},
                  {"finite_forward", report_json(mx.finite_forward)},
                  {"open_agree", report_json(mx.open_agree)}},
                 Verdict::SampledPass);
}

Outcome check_ball_domains(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  if (s.size() > 6) return skipped("size above 6");
  const std::pair<const char*, GRel> partners[] = {
      {"lower", lower_hemimetric(d)}, {"self", d}, {"zero", zero_rel(s.size())}};
  json info = json::object();
  for (const auto& [name, e] : partners) {
    BallDomainReport r = ball_domain_check(d, e);
    info[name] = r.left;
    const bool ok = r.consistent() && r.transfer.completeness_ok() && r.transfer.continuity_ok();
    if (!ok)
      return pass_if(false, {{"partner", name},
                             {"left", r.left},
                             {"right", r.right},
                             {"completeness", r.transfer.completeness_ok()},
                             {"continuity", r.transfer.continuity_ok()},
                             {"plus_predomain", r.plus_predomain},
                             {"order_identity", r.order_identity}},
                     Verdict::SampledPass);
  }
  if (is_hemimetric(d)) {
    BallDomainReport r = ball_domain_check(d, d);
    info["classical"] = r.left && r.right;
    if (!(r.left && r.right)) return pass_if(false, {{"classical_reduction", {r.left, r.right}}}, Verdict::SampledPass);
  }
  Outcome o = pass_if(true, {}, Verdict::SampledPass);
  o.info = info;
  return o;
}

Outcome check_smyth_completion(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  if (!smyth_continuous(d)) return skipped("not Smyth-continuous");
  SmythCompletion c = smyth_completion(s);
  const bool predomain = is_predomain(d, ContinuityKind::Smyth);
  const bool complete = is_complete(d, ContinuityKind::Smyth);
  SmythUniversality u = smyth_universality_check(s, full_mask(s.size()));
  bool ok = c.lower_is_classical && c.domain && c.basis && c.contracting && c.isometric == predomain &&
            c.surjective == complete;
  if (u.hypotheses) ok = ok && u.isometric && u.surjective == u.complete;
  Outcome o = pass_if(ok, {{"lower_is_classical", c.lower_is_classical},
                           {"domain", c.domain},
                           {"basis", c.basis},
                           {"contracting", c.contracting},
                           {"isometric", c.isometric},
                           {"surjective", c.surjective},
                           {"predomain", predomain},
                           {"complete", complete},
                           {"universality", {u.hypotheses, u.isometric, u.surjective, u.complete}}});
  o.info = {{"predomain", predomain}};
  return o;
}

Outcome check_smyth_completeness(const DistanceSpace& s, std::mt19937_64&) {
  if (!is_hemimetric(s.d())) return skipped("not hemimetric");
  SmythCompletenessReport r = smyth_completeness_check(s);
  return pass_if(r.all(),
                 {{"noetherian", r.noetherian},
                  {"classical_smyth_complete", r.classical_smyth_complete},
                  {"reverse_hemimetric", r.reverse_hemimetric},
                  {"hemimetric_completion", r.hemimetric_completion}},
                 Verdict::SampledPass);
}

Outcome check_flipped_triangle(const DistanceSpace& s, std::mt19937_64&) {
  const GRel& d = s.d();
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      for (std::size_t z = 0; z < s.size(); ++z)
        if (d(x, y) < d(x, z) + d(z, y))
          return pass_if(false, {{"x", s.label(x)}, {"y", s.label(y)}, {"z", s.label(z)}});
  return pass_if(true);
}

std::vector<SpaceCheck> build_checks() {
  std::vector<SpaceCheck> v = {
      {"triangle", 1, check_triangle},
      {"fd-continuity-conditions", 2, check_fd_continuity},
      {"fd-continuity-sequences", 2, check_fd_continuity_sequences},
      {"max-continuity-conditions", 3, check_max_continuity},
      {"interpolation-hypotheses", 3, check_corollaries},
      {"characteristic-continuity-collapse", 4, check_collapse},
      {"way-below-bounds", 5, check_way_below_props},
      {"way-below-is-upper", 6, check_way_below_upper},
      {"domain-duality", 7, check_duality},
      {"hausdorff-composition", 8, check_hausdorff_composition},
      {"union-is-hausdorff-max", 9, check_union},
      {"noetherian", 10, check_noetherian},
      {"relational-completion", 11, check_relational_completion},
      {"ball-composition", 12, check_ball_composition},
      {"lower-agreement", 13, check_underline},
      {"distance-recovery", 14, check_recovery},
      {"ball-interpolation-maxima", 15, check_interpolation_maxima},
      {"ball-domain-transfer", 16, check_ball_domains},
      {"smyth-completion", 17, check_smyth_completion},
      {"smyth-completeness-items", 18, check_smyth_completeness},
  };
  std::sort(v.begin(), v.end(), [](const SpaceCheck& a, const SpaceCheck& b) { return a.id < b.id; });
  return v;
}

CheckResult new_result(std::string id, int criterion, std::string fingerprint) {
  CheckResult r;
  r.check_id = std::move(id);
  r.criterion = criterion;
  r.fingerprint = std::move(fingerprint);
  return r;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

std::string slug(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else if (!out.empty() && out.back() != '-')
      out += '-';
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

int witness_criterion(const std::string& space, const std::string& claim) {
  if (space == "right-projection") return 13;
  if (claim.find("reverse self-distance") != std::string::npos) return 18;
  return 10;
}

// Results for the formula spaces of the catalog: a sampled triangle check
// and one result per registered witness.
std::vector<CheckResult> formula_results(const std::string& name) {
  std::vector<CheckResult> out;
  auto t0 = std::chrono::steady_clock::now();
  CatalogSpace c = catalog_get(name);
  if (!c.formula) return out;
  const std::string fp = "catalog:" + name;
  {
    std::mt19937_64 rng(fnv1a(fp));
    auto v = formula_triangle_violation(*c.formula, rng, 1000);
    CheckResult r = new_result("formula-triangle", 1, fp);
    r.verdict = v ? Verdict::Fail : Verdict::SampledPass;
    if (v) r.witness = json{{"x", (*v)[0].str()}, {"y", (*v)[1].str()}, {"z", (*v)[2].str()}};
    r.info = {{"samples", 1000}};
    r.millis = elapsed_ms(t0);
    out.push_back(r);
  }
  for (const Witness& w : c.witnesses) {
    CheckResult r = new_result("witness/" + slug(w.claim), witness_criterion(name, w.claim), fp);
    r.verdict = w.confirmed() ? Verdict::Pass : Verdict::Fail;
    r.info = {{"claim", w.claim}, {"data", w.data}, {"expected", w.expected}, {"holds", w.holds}};
    if (!w.confirmed()) r.witness = r.info;
    r.millis = elapsed_ms(t0);
    out.push_back(r);
  }
  return out;
}

bool still_fails(const SpaceCheck& check, const DistanceSpace& s) {
  std::mt19937_64 rng = check_rng(check.id, s);
  try {
    return check.run(s, rng).verdict == Verdict::Fail;
  } catch (const std::exception&) {
    return false;
  }
}

std::optional<DistanceSpace> try_space(std::vector<std::string> labels, GRel d, const std::string& name) {
  if (find_triangle_violation(d)) return std::nullopt;
  return DistanceSpace(std::move(labels), std::move(d), name);
}

std::vector<ExtVal> simpler_values(const ExtVal& v) {
  std::vector<ExtVal> out;
  if (v.is_inf() || v.is_zero()) return out;
  const Rational& q = v.value();
  const std::int64_t fl = q.num() / q.den();
  out.push_back(kZero);
  if (!q.is_integer()) {
    out.push_back(ExtVal(fl));
    out.push_back(ExtVal(fl + 1));
  } else if (fl > 1) {
    out.push_back(ExtVal(1));
  }
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::SampledPass: return "sampled-pass";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Skipped, Verdict::SampledPass})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

json to_json(const CheckResult& r) {
  json j = {{"check_id", r.check_id},
            {"criterion", r.criterion},
            {"fingerprint", r.fingerprint},
            {"verdict", to_string(r.verdict)},
            {"millis", r.millis}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.witness) j["witness"] = *r.witness;
  if (!r.info.is_null()) j["info"] = r.info;
  return j;
}

CheckResult result_from_json(const json& j) {
  CheckResult r;
  r.check_id = j.at("check_id").get<std::string>();
  r.criterion = j.value("criterion", 0);
  r.fingerprint = j.at("fingerprint").get<std::string>();
  auto v = parse_verdict(j.at("verdict").get<std::string>());
  if (!v) throw ParseError("unknown verdict");
  r.verdict = *v;
  r.reason = j.value("reason", "");
  if (j.contains("witness")) r.witness = j["witness"];
  if (j.contains("info")) r.info = j["info"];
  r.millis = j.value("millis", std::int64_t{0});
  return r;
}

const std::vector<SpaceCheck>& space_checks() {
  static const std::vector<SpaceCheck> checks = build_checks();
  return checks;
}

const SpaceCheck& corrupted_check() {
  static const SpaceCheck c{"selftest-flipped-triangle", 19, check_flipped_triangle};
  return c;
}

const SpaceCheck* find_space_check(std::string_view id) {
  for (const SpaceCheck& c : space_checks())
    if (c.id == id) return &c;
  if (id == corrupted_check().id) return &corrupted_check();
  return nullptr;
}

DistanceSpace scope_space(const RandomScope& scope, std::size_t i) {
  const std::size_t span = scope.size_hi - scope.size_lo + 1;
  return random_space(scope.size_lo + i % span, scope.seed + i, scope.profiles[i % scope.profiles.size()]);
}

CheckResult run_check(const SpaceCheck& check, const DistanceSpace& s, const std::string& fingerprint) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r = new_result(check.id, check.criterion, fingerprint);
  std::mt19937_64 rng = check_rng(check.id, s);
  try {
    Outcome o = check.run(s, rng);
    r.verdict = o.verdict;
    r.reason = o.reason;
    r.info = o.info;
    if (o.verdict == Verdict::Fail) {
      json w = {{"space", space_json(s)}};
      if (!o.detail.is_null()) w["detail"] = o.detail;
      r.witness = w;
    }
  } catch (const SizeBoundError& e) {
    r.verdict = Verdict::Skipped;
    r.reason = e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::Fail;
    r.witness = json{{"space", space_json(s)}, {"error", e.what()}};
  }
  r.millis = elapsed_ms(t0);
  return r;
}

std::vector<CheckResult> run_suite(const SuiteOptions& opts) {
  struct Job {
    const SpaceCheck* check;
    std::size_t space;
  };
  std::vector<std::pair<std::string, DistanceSpace>> spaces;
  std::vector<CheckResult> results;
  if (opts.named) {
    for (const std::string& name : catalog_names()) {
      CatalogSpace c = catalog_get(name);
      if (c.finite) spaces.emplace_back("catalog:" + name, *c.finite);
      for (CheckResult& r : formula_results(name)) results.push_back(std::move(r));
    }
  }
  if (opts.random)
    for (std::size_t i = 0; i < opts.random->count; ++i) {
      DistanceSpace s = scope_space(*opts.random, i);
      spaces.emplace_back(s.name(), s);
    }
  auto selected = [&](const std::string& id) {
    return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), id) != opts.only.end();
  };
  if (!opts.only.empty())
    std::erase_if(results, [&](const CheckResult& r) { return !selected(r.check_id); });
  std::vector<Job> jobs;
  for (const SpaceCheck& c : space_checks())
    if (selected(c.id))
      for (std::size_t i = 0; i < spaces.size(); ++i) jobs.push_back({&c, i});

  std::vector<CheckResult> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();)
      out[k] = run_check(*jobs[k].check, spaces[jobs[k].space].second, spaces[jobs[k].space].first);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(opts.jobs, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (CheckResult& r : out) results.push_back(std::move(r));
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.check_id, a.fingerprint) < std::tie(b.check_id, b.fingerprint);
  });
  return results;
}

std::optional<DistanceSpace> space_from_fingerprint(const std::string& fp) {
  if (fp.rfind("catalog:", 0) == 0) {
    CatalogSpace c = catalog_get(fp.substr(8));
    if (c.finite) return *c.finite;
    return std::nullopt;
  }
  if (fp.rfind("random:", 0) == 0) {
    // random:PROFILE:n=N:seed=S
    auto p1 = fp.find(':', 7);
    auto p2 = fp.find(":seed=", p1);
    if (p1 == std::string::npos || p2 == std::string::npos || fp.compare(p1, 3, ":n=") != 0) return std::nullopt;
    auto profile = parse_profile(fp.substr(7, p1 - 7));
    if (!profile) return std::nullopt;
    std::size_t n = std::stoul(fp.substr(p1 + 3, p2 - p1 - 3));
    std::uint64_t seed = std::stoull(fp.substr(p2 + 6));
    return random_space(n, seed, *profile);
  }
  return std::nullopt;
}

CheckResult shrink(const CheckResult& failed, const SpaceCheck& check) {
  if (failed.verdict != Verdict::Fail || !failed.witness || !failed.witness->contains("space"))
    throw std::invalid_argument("nothing to shrink: result is not a fail with a witness space");
  DistanceSpace cur = parse_space_json((*failed.witness)["space"].dump());
  if (!still_fails(check, cur)) throw std::invalid_argument("witness space does not reproduce the failure");
  const std::string name = cur.name();
  for (bool changed = true; changed;) {
    changed = false;
    // Drop a point.
    for (std::size_t drop = 0; drop < cur.size() && cur.size() > 1 && !changed; ++drop) {
      Subset keep;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (i != drop) keep.push_back(i);
      std::vector<std::string> labels;
      for (std::size_t i : keep) labels.push_back(cur.label(i));
      auto cand = try_space(labels, submatrix(cur.d(), keep, keep), name);
      if (cand && still_fails(check, *cand)) {
        cur = *cand;
        changed = true;
      }
    }
    // Raise one entry to inf, then try simpler rationals.
    for (std::size_t i = 0; i < cur.size() && !changed; ++i)
      for (std::size_t j = 0; j < cur.size() && !changed; ++j) {
        std::vector<ExtVal> options;
        if (!cur.d()(i, j).is_inf()) options.push_back(kInf);
        for (const ExtVal& v : simpler_values(cur.d()(i, j))) options.push_back(v);
        for (const ExtVal& v : options) {
          GRel d = cur.d();
          d(i, j) = v;
          auto cand = try_space(cur.labels(), d, name);
          if (cand && still_fails(check, *cand)) {
            cur = *cand;
            changed = true;
            break;
          }
        }
      }
  }
  CheckResult r = run_check(check, cur, failed.fingerprint);
  if (r.witness) (*r.witness)["shrunk_from"] = (*failed.witness)["space"];
  return r;
}

bool replay(const CheckResult& r) {
  if (r.check_id == "formula-triangle" || r.check_id.rfind("witness/", 0) == 0) {
    const std::string name = r.fingerprint.substr(8);
    for (const CheckResult& again : formula_results(name))
      if (again.check_id == r.check_id) return again.verdict == r.verdict;
    return false;
  }
  const SpaceCheck* check = find_space_check(r.check_id);
  if (!check) return false;
  if (auto s = space_from_fingerprint(r.fingerprint)) {
    if (run_check(*check, *s, r.fingerprint).verdict != r.verdict) return false;
  }
  if (r.verdict == Verdict::Fail) {
    if (!r.witness || !r.witness->contains("space")) return false;
    DistanceSpace w = parse_space_json((*r.witness)["space"].dump());
    return run_check(*check, w, r.fingerprint).verdict == Verdict::Fail;
  }
  return true;
}

SelfTestReport self_test(std::uint64_t seed, std::size_t max_spaces) {
  SelfTestReport rep;
  RandomScope scope;
  scope.count = max_spaces;
  scope.seed = seed;
  for (std::size_t i = 0; i < max_spaces; ++i) {
    DistanceSpace s = scope_space(scope, i);
    ++rep.spaces_tried;
    CheckResult r = run_check(corrupted_check(), s, s.name());
    if (r.verdict != Verdict::Fail) continue;
    rep.found = true;
    rep.original = r;
    rep.shrunk = shrink(r, corrupted_check());
    rep.replay_ok = replay(rep.original) && replay(rep.shrunk);
    break;
  }
  return rep;
}

json report_json(const std::vector<CheckResult>& results) {
  std::map<std::string, std::size_t> counts = {{"pass", 0}, {"fail", 0}, {"skipped", 0}, {"sampled-pass", 0}};
  json arr = json::array();
  for (const CheckResult& r : results) {
    ++counts[to_string(r.verdict)];
    arr.push_back(to_json(r));
  }
  return {{"results", arr}, {"summary", counts}};
}

bool any_fail(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.verdict == Verdict::Fail; });
}

}  // namespace qdt
