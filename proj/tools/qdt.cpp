#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdt/formalballs.hpp"
#include "qdt/harness.hpp"
#include "qdt/io.hpp"

using nlohmann::json;
using namespace qdt;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json labels_of(const DistanceSpace& s, Mask m) {
  json out = json::array();
  for (std::size_t i : to_subset(m)) out.push_back(s.label(i));
  return out;
}

std::string set_label(const DistanceSpace& s, Mask m) {
  std::string out = "{";
  for (std::size_t i : to_subset(m)) out += (out.size() > 1 ? "," : "") + s.label(i);
  return out + "}";
}

json opens_json(const DistanceSpace& s, const FiniteTopology& t) {
  json out = json::array();
  for (Mask m : t.opens()) out.push_back(labels_of(s, m));
  return out;
}

GRel specialization(const FiniteTopology& t) {
  return GRel::characteristic(t.size(), t.size(), [&](std::size_t p, std::size_t q) { return t.specializes(p, q); });
}

json radius_json(const DistanceSpace& s, const RadiusFn& f) {
  json out = json::object();
  for (std::size_t i = 0; i < s.size(); ++i) out[s.label(i)] = f.rho[i].str();
  return out;
}

std::vector<Rational> radius_grid(const std::string& step_text, const std::string& max_text) {
  Rational step = Rational::parse(step_text), top = Rational::parse(max_text);
  if (step <= Rational(0)) throw UsageError("--grid-step must be positive");
  if (top < Rational(0)) throw UsageError("--grid-max must be nonnegative");
  std::vector<Rational> grid;
  for (Rational r(0); r <= top; r += step) {
    grid.push_back(r);
    if (grid.size() > 64) throw UsageError("radius grid has more than 64 values");
  }
  return grid;
}

struct Output {
  std::optional<std::string> dot;
  json body;
};

Output derive(const DistanceSpace& s, const std::string& what, const std::string& kind, bool want_dot,
              const std::string& grid_step, const std::string& grid_max) {
  const GRel& d = s.d();
  Output out;
  out.body["space"] = s.name();
  out.body["points"] = s.labels();
  if (what == "hemimetrics") {
    out.body["upper"] = grel_json(upper_hemimetric(d));
    out.body["lower"] = grel_json(lower_hemimetric(d));
  } else if (what == "orders") {
    GRel le = leq_rel(d), lt = strict_rel(d);
    out.body["leq"] = pairs_json(le, s.labels());
    out.body["strict"] = pairs_json(lt, s.labels());
    if (want_dot) out.dot = dot_relation(s.name().empty() ? "leq" : s.name(), s.labels(), le);
  } else if (what == "topologies") {
    require_enumerable(s.size(), "derive topologies");
    std::vector<TopologyKind> kinds;
    if (kind.empty()) {
      for (TopologyKind k : {TopologyKind::Alexandroff, TopologyKind::LowerBall, TopologyKind::Lower, TopologyKind::Smyth,
                             TopologyKind::Upper, TopologyKind::Yoneda, TopologyKind::Symmetric})
        kinds.push_back(k);
    } else if (auto k = parse_topology_kind(kind)) {
      kinds.push_back(*k);
    } else {
      throw UsageError("unknown topology kind '" + kind + "'");
    }
    json tops = json::object();
    for (TopologyKind k : kinds) {
      FiniteTopology t = generate(d, k);
      tops[to_string(k)] = {{"opens", opens_json(s, t)}, {"specialization", pairs_json(specialization(t), s.labels())}};
      if (want_dot && kinds.size() == 1) out.dot = dot_relation(to_string(k), s.labels(), specialization(t));
    }
    out.body["topologies"] = tops;
    if (want_dot && kinds.size() != 1) throw UsageError("--dot with topologies needs a single --kind");
  } else if (what == "way-below") {
    require_enumerable(s.size(), "derive way-below");
    std::vector<WayBelowKind> kinds;
    if (kind.empty()) {
      kinds = {WayBelowKind::Yoneda, WayBelowKind::Smyth, WayBelowKind::Sup, WayBelowKind::Max};
    } else if (auto k = parse_way_below_kind(kind)) {
      kinds.push_back(*k);
    } else {
      throw UsageError("unknown way-below kind '" + kind + "'");
    }
    json wb = json::object();
    for (WayBelowKind k : kinds) {
      GRel w = way_below(d, k);
      wb[to_string(k)] = grel_json(w);
      if (want_dot && kinds.size() == 1) out.dot = dot_relation(to_string(k), s.labels(), w);
    }
    out.body["way_below"] = wb;
    if (want_dot && kinds.size() != 1) throw UsageError("--dot with way-below needs a single --kind");
  } else if (what == "balls") {
    std::vector<Rational> grid = radius_grid(grid_step, grid_max);
    std::vector<FormalBall> balls;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < s.size(); ++x)
      for (const Rational& r : grid) {
        balls.push_back(make_ball(x, r));
        names.push_back(balls.back().str(&s));
      }
    GRel weak = GRel::characteristic(balls.size(), balls.size(),
                                     [&](std::size_t i, std::size_t j) { return ball_leq(d, balls[i], balls[j]); });
    GRel strict = GRel::characteristic(balls.size(), balls.size(),
                                       [&](std::size_t i, std::size_t j) { return ball_lt(d, balls[i], balls[j]); });
    out.body["balls"] = names;
    out.body["leq"] = pairs_json(weak, names);
    out.body["strict"] = pairs_json(strict, names);
    out.body["lower_agreement"] = underline_agreement(d).criterion;
    if (want_dot) out.dot = dot_relation("balls", names, weak);
  } else {
    throw UsageError("--what must be hemimetrics, orders, topologies, way-below or balls");
  }
  return out;
}

Output complete(const DistanceSpace& s, const std::string& mode, bool want_dot) {
  const GRel& d = s.d();
  Output out;
  out.body["space"] = s.name();
  out.body["mode"] = mode;
  if (mode == "relational") {
    if (!max_continuous_criterion(d)) throw UsageError("space is not max-continuous; the relational completion needs it");
    RelationalCompletion c = relational_completion(s);
    std::vector<Mask> ideals = ideals_of(d, full_mask(s.size()));
    GRel dist = hausdorff_matrix(d, ideals, HausdorffKind::Reverse);
    json list = json::array(), embed = json::object();
    std::vector<std::string> names;
    for (Mask m : ideals) {
      list.push_back(labels_of(s, m));
      names.push_back(set_label(s, m));
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
      Mask below = 0;
      for (std::size_t y = 0; y < s.size(); ++y)
        if (d(y, x).is_zero()) below |= Mask(1) << y;
      auto it = std::find(ideals.begin(), ideals.end(), below);
      embed[s.label(x)] = it == ideals.end() ? json(nullptr) : json(set_label(s, below));
    }
    out.body["ideals"] = list;
    out.body["matrix"] = grel_json(dist);
    out.body["embedding"] = embed;
    out.body["directed_subsets"] = c.ideals.size();
    out.body["report"] = {{"lower_is_classical", c.lower_is_classical}, {"domain", c.is_domain()},
                          {"basis", c.basis},       {"contracting", c.contracting},
                          {"isometric", c.isometric}};
    if (want_dot) out.dot = dot_relation("relational-completion", names, zero_set(dist));
  } else if (mode == "smyth" || mode == "yoneda") {
    if (!smyth_continuous(d)) throw UsageError("space is not Smyth-continuous; the " + mode + " completion needs it");
    SmythCompletion c = smyth_completion(s);
    json fns = json::array(), embed = json::object();
    std::vector<std::string> names(c.family.size());
    for (std::size_t k = 0; k < c.family.size(); ++k) {
      fns.push_back(radius_json(s, c.family[k]));
      names[k] = "I" + std::to_string(k);
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
      embed[s.label(x)] = c.embedding[x];
      if (names[c.embedding[x]][0] == 'I') names[c.embedding[x]] = s.label(x);
    }
    const GRel& dist = mode == "smyth" ? c.reverse : c.classical;
    out.body["radius_functions"] = fns;
    out.body["matrix"] = grel_json(dist);
    out.body["embedding"] = embed;
    out.body["report"] = {{"lower_is_classical", c.lower_is_classical}, {"domain", c.domain},
                          {"basis", c.basis},       {"contracting", c.contracting},
                          {"isometric", c.isometric}, {"surjective", c.surjective}};
    if (want_dot) out.dot = dot_relation(mode + "-completion", names, zero_set(dist));
  } else {
    throw UsageError("--mode must be relational, smyth or yoneda");
  }
  return out;
}

void emit(const Output& out, bool want_dot) {
  if (want_dot && out.dot)
    std::cout << *out.dot;
  else
    std::cout << out.body.dump(2) << "\n";
}

void write_report(const json& report, const std::string& path) {
  if (path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << report.dump(2) << "\n";
}

std::pair<std::size_t, std::size_t> parse_sizes(const std::string& text) {
  auto p = text.find("..");
  try {
    if (p == std::string::npos) {
      std::size_t n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, p)), std::stoul(text.substr(p + 2))};
  } catch (const std::exception&) {
    throw UsageError("--sizes expects a..b");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact deciders for finite generalized distance spaces"};
  app.require_subcommand(1);

  std::string file, what, kind, grid_step = "1", grid_max = "2", mode;
  bool dot = false;
  auto* derive_cmd = app.add_subcommand("derive", "Emit derived structure of a space");
  derive_cmd->add_option("file", file, "Space file (JSON or line format) or catalog:NAME")->required();
  derive_cmd->add_option("--what", what, "hemimetrics | orders | topologies | way-below | balls")->required();
  derive_cmd->add_option("--kind", kind, "Topology or way-below kind");
  derive_cmd->add_option("--grid-step", grid_step, "Radius grid step for balls");
  derive_cmd->add_option("--grid-max", grid_max, "Largest radius for balls");
  derive_cmd->add_flag("--dot", dot, "Emit Graphviz DOT instead of JSON");

  auto* complete_cmd = app.add_subcommand("complete", "Build a completion");
  complete_cmd->add_option("file", file, "Space file or catalog:NAME")->required();
  complete_cmd->add_option("--mode", mode, "relational | smyth | yoneda")->required();
  complete_cmd->add_flag("--dot", dot, "Emit the specialization order of the completion as DOT");

  bool named = false, self_test_flag = false;
  std::size_t random_count = 0, jobs = 1;
  std::string sizes = "2..5", out_path;
  std::uint64_t seed = 42;
  std::vector<std::string> profiles, only;
  auto* check_cmd = app.add_subcommand("check", "Run the check suite");
  check_cmd->add_flag("--named", named, "Run on the finite catalog and its witnesses");
  auto* random_opt = check_cmd->add_option("--random", random_count, "Number of random spaces");
  check_cmd->add_option("--sizes", sizes, "Size range a..b");
  check_cmd->add_option("--seed", seed, "Base seed");
  check_cmd->add_option("--profiles", profiles, "generic, hemimetric, quasimetric, characteristic")->delimiter(',');
  check_cmd->add_option("--only", only, "Restrict to these check ids")->delimiter(',');
  check_cmd->add_option("--out", out_path, "Write the JSON report here");
  check_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  check_cmd->add_flag("--self-test", self_test_flag, "Run the corrupted check and shrink its witness");

  std::string catalog_action = "list", catalog_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "List or show catalog spaces");
  catalog_cmd->add_option("action", catalog_action, "list | show")->check(CLI::IsMember({"list", "show"}));
  catalog_cmd->add_option("name", catalog_name, "Space name for show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*derive_cmd) {
      emit(derive(load_space(file), what, kind, dot, grid_step, grid_max), dot);
      return kExitPass;
    }
    if (*complete_cmd) {
      emit(complete(load_space(file), mode, dot), dot);
      return kExitPass;
    }
    if (*check_cmd) {
      if (self_test_flag) {
        SelfTestReport r = self_test(seed, 100);
        json j = {{"found", r.found}, {"spaces_tried", r.spaces_tried}, {"replay", r.replay_ok}};
        if (r.found) {
          j["original"] = to_json(r.original);
          j["shrunk"] = to_json(r.shrunk);
        }
        write_report(j, out_path);
        return r.found && r.replay_ok ? kExitPass : kExitFail;
      }
      if (!named && random_opt->count() == 0) throw UsageError("check needs --named, --random N or --self-test");
      SuiteOptions opts;
      opts.named = named;
      opts.jobs = jobs;
      opts.only = only;
      if (random_opt->count() > 0) {
        RandomScope scope;
        scope.count = random_count;
        std::tie(scope.size_lo, scope.size_hi) = parse_sizes(sizes);
        if (scope.size_lo < 1 || scope.size_lo > scope.size_hi || scope.size_hi > kEnumerationBound)
          throw UsageError("--sizes must satisfy 1 <= a <= b <= 12");
        scope.seed = seed;
        if (!profiles.empty()) {
          scope.profiles.clear();
          for (const std::string& p : profiles) {
            auto parsed = parse_profile(p);
            if (!parsed) throw UsageError("unknown profile '" + p + "'");
            scope.profiles.push_back(*parsed);
          }
        }
        opts.random = scope;
      }
      for (const std::string& id : only)
        if (!find_space_check(id) && id != "formula-triangle" && id.rfind("witness/", 0) != 0)
          throw UsageError("unknown check id '" + id + "'");
      std::vector<CheckResult> results = run_suite(opts);
      write_report(report_json(results), out_path);
      return any_fail(results) ? kExitFail : kExitPass;
    }
    if (*catalog_cmd) {
      if (catalog_action == "list") {
        for (const std::string& n : catalog_names()) {
          CatalogSpace c = catalog_get(n);
          std::cout << n << "\t" << (c.is_finite() ? "finite" : "formula") << "\t" << c.description << "\n";
        }
        return kExitPass;
      }
      if (catalog_name.empty()) throw UsageError("catalog show needs a name");
      CatalogSpace c = catalog_get(catalog_name);
      json j = {{"name", c.name}, {"description", c.description}};
      if (c.finite) j["space"] = space_json(*c.finite);
      json ws = json::array();
      for (const Witness& w : c.witnesses)
        ws.push_back({{"claim", w.claim}, {"data", w.data}, {"expected", w.expected}, {"holds", w.holds}});
      j["witnesses"] = ws;
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
