#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "biasedcube/budget.hpp"
#include "biasedcube/families.hpp"
#include "biasedcube/hc_verify.hpp"
#include "biasedcube/influence.hpp"
#include "biasedcube/noise.hpp"
#include "biasedcube/parallel.hpp"
#include "biasedcube/rv_poly.hpp"
#include "biasedcube/suites.hpp"
#include "biasedcube/threshold.hpp"
#include "io.hpp"

namespace bcube::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool has(const RunConfig& c, const std::string& name) { return c.params.count(name) > 0; }

double param(const RunConfig& c, const std::string& name, double fallback) {
  auto it = c.params.find(name);
  return it == c.params.end() ? fallback : it->second;
}

double require_param(const RunConfig& c, const std::string& name) {
  auto it = c.params.find(name);
  if (it == c.params.end()) throw UsageError("missing required parameter --" + name);
  return it->second;
}

int int_param(const RunConfig& c, const std::string& name, int fallback) {
  const double v = param(c, name, fallback);
  if (v != std::floor(v)) throw UsageError("--" + name + " must be an integer");
  return static_cast<int>(v);
}

int require_int(const RunConfig& c, const std::string& name) {
  require_param(c, name);
  return int_param(c, name, 0);
}

std::string input(const RunConfig& c, const std::string& name) {
  auto it = c.inputs.find(name);
  if (it == c.inputs.end() || it->second.empty()) throw UsageError("missing required input --" + name);
  return it->second;
}

std::uint64_t require_seed(const RunConfig& c) {
  if (!c.seed) throw UsageError(c.command + " runs a seeded batch: --seed is required");
  return *c.seed;
}

json one_based(Mask m) {
  json out = json::array();
  for (int v : mask_to_indices(m)) out.push_back(v + 1);
  return out;
}

json one_based_vertices(VertexSet s) {
  json out = json::array();
  for (int v : vertex_list(s)) out.push_back(v + 1);
  return out;
}

json family_json(const SetFamily& f) {
  json edges = json::array();
  for (Mask e : f.edges()) edges.push_back(one_based(e));
  return {{"n", f.n()}, {"k", f.k()}, {"size", f.size()}, {"edges", edges}};
}

json hypergraph_json(const Hypergraph& g) {
  json edges = json::array();
  for (VertexSet e : g.edges()) edges.push_back(one_based_vertices(e));
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

BiasedFunction load_function(const RunConfig& c) {
  BiasedFunction f = parse_function(read_file(input(c, "input")));
  if (has(c, "p")) f = f.with_bias(Bias(param(c, "p", 0.5)));
  return f;
}

SetFamily load_family(const RunConfig& c) { return parse_family(read_file(input(c, "input"))); }

Hypergraph load_graph(const RunConfig& c) {
  auto spec = c.inputs.find("graph_spec");
  if (spec != c.inputs.end() && !spec->second.empty()) return named_graph(spec->second);
  return parse_hypergraph(read_file(input(c, "graph")));
}

Corpus default_corpus(const RunConfig& c) {
  CorpusSpec spec;
  if (has(c, "max-n")) {
    const int max_n = int_param(c, "max-n", 12);
    std::erase_if(spec.ns, [&](int n) { return n > max_n; });
  }
  return generate_corpus(require_seed(c), spec);
}

// Collects suite summaries, attaching replay instructions to each witness.
class Collector {
 public:
  explicit Collector(const RunConfig& c) : config_(c) {}

  void add(const std::string& suite, const Summary& s) {
    total_.absorb(s);
    for (json w : s.violations()) {
      json replay = {{"command", config_.command}, {"suite", suite}, {"tol", config_.tol}, {"params", config_.params},
                     {"inputs", config_.inputs}};
      if (!config_.subcommand.empty()) replay["subcommand"] = config_.subcommand;
      if (config_.seed) replay["seed"] = *config_.seed;
      if (w.contains("context") && w["context"].contains("entry")) replay["case"] = w["context"]["entry"];
      w["suite"] = suite;
      w["replay"] = std::move(replay);
      violations_.push_back(std::move(w));
    }
  }

  void add(const std::string& suite, const Report& r) {
    Summary s;
    s.absorb(r);
    add(suite, s);
    for (const auto& n : r.notices()) notices_.push_back(n);
  }

  bool wants(const std::string& suite) const { return !config_.suite || *config_.suite == suite; }

  SuiteOptions suite_options() const {
    SuiteOptions o;
    o.tol = config_.tol;
    if (config_.only_case) o.only = *config_.only_case;
    return o;
  }

  const Summary& total() const { return total_; }
  const json& violations() const { return violations_; }
  const std::vector<std::string>& notices() const { return notices_; }
  json result = json::object();

 private:
  const RunConfig& config_;
  Summary total_;
  json violations_ = json::array();
  std::vector<std::string> notices_;
};

Summary hc_corpus(const Corpus& corpus, const HcSuiteOptions& opts, const SuiteOptions& so) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i)
    if (so.only == kAllEntries || so.only == i) idx.push_back(i);
  const auto reports = parallel_map<Report>(idx.size(), [&](std::size_t k) { return hc_checks(corpus.entries[idx[k]].f, opts); });
  Summary s;
  for (std::size_t k = 0; k < idx.size(); ++k)
    s.absorb(reports[k], {{"entry", idx[k]}, {"label", corpus.entries[idx[k]].label}});
  return s;
}

void cmd_transform(const RunConfig& c, Collector& out) {
  const BiasedFunction f = load_function(c);
  const Spectrum s = forward_transform(f);
  json spectrum = json::array();
  for (std::size_t t = 0; t < s.size(); ++t)
    if (std::abs(s[static_cast<Mask>(t)]) > 1e-15)
      spectrum.push_back({{"set", one_based(static_cast<Mask>(t))}, {"coefficient", s[static_cast<Mask>(t)]}});
  Report rep;
  rep.identity("transform.parseval", s.squared_sum(), biased_norm(f, 2.0) * biased_norm(f, 2.0), c.tol);
  out.add("transform", rep);
  out.result = {{"n", f.n()}, {"p", f.p()}, {"sigma", f.bias().sigma()}, {"spectrum", spectrum}};
}

void cmd_influence(const RunConfig& c, Collector& out) {
  const BiasedFunction f = load_function(c);
  const InfluenceTable table = influence_table(f);
  json gen = json::array();
  for (std::size_t t = 1; t < table.gen_inf.size(); ++t)
    if (table.gen_inf[t] > 1e-15) gen.push_back({{"set", one_based(static_cast<Mask>(t))}, {"influence", table.gen_inf[t]}});
  out.result = {{"n", f.n()},
                {"p", f.p()},
                {"coordinate_influences", coordinate_influences(f)},
                {"total_influence", total_influence(f)},
                {"generalized_influences", gen},
                {"energy", table.gen_inf[0]}};
  if (table.gen_inf[0] > 0.0) out.result["beta"] = beta_smallness(f, false);
  if (has(c, "delta")) {
    const int r = int_param(c, "r", 1);
    const double delta = param(c, "delta", 0.1);
    if (f.is_ternary()) out.add("concentration", verify_concentration(f, r, delta, c.tol));
    if (f.is_boolean()) out.add("equivalence", verify_equivalence_lemmas(f, r, delta, c.tol));
  }
}

void cmd_verify_hc(const RunConfig& c, Collector& out) {
  HcSuiteOptions opts;
  opts.tol = c.tol;
  if (c.inputs.count("input")) {
    const BiasedFunction f = load_function(c);
    out.add("hc", hc_checks(f, opts));
    if (f.n() <= 8) {
      Corpus single{0, {{f, "input", "input"}}};
      out.add("replacement", replacement_suite(single, 8, out.suite_options()));
    }
    out.result = {{"n", f.n()}, {"p", f.p()}};
    return;
  }
  const Corpus corpus = default_corpus(c);
  if (out.wants("hc")) out.add("hc", hc_corpus(corpus, opts, out.suite_options()));
  if (out.wants("replacement")) out.add("replacement", replacement_suite(corpus, 8, out.suite_options()));
  out.result = {{"corpus_size", corpus.entries.size()}};
}

void cmd_verify_es(const RunConfig& c, Collector& out) {
  const std::uint64_t seed = require_seed(c);
  const int count = int_param(c, "count", 100);
  const int q = int_param(c, "qnorm", 4);
  const double rho = param(c, "rho", 1.0 / 64.0);
  if (out.wants("efron_stein")) out.add("efron_stein", efron_stein_suite(seed, count, q, rho, out.suite_options()));
  if (out.wants("q_moment"))
    out.add("q_moment", q_moment_suite(seed, count, {3.0, 4.0, 6.0}, out.suite_options()));
  out.result = {{"count", count}, {"q", q}, {"rho", rho}};
}

void cmd_verify_inv(const RunConfig& c, Collector& out) {
  const std::uint64_t seed = require_seed(c);
  const int count = int_param(c, "count", 50);
  if (c.inputs.count("x") && c.inputs.count("y")) {
    const auto x = parse_rvset(read_file(input(c, "x")));
    const auto y = parse_rvset(read_file(input(c, "y")));
    if (x.size() != y.size()) throw UsageError("--x and --y must describe the same number of variables");
    const int degree = int_param(c, "degree", 2);
    Summary s;
    for (int i = 0; i < count; ++i) {
      if (c.only_case && *c.only_case != static_cast<std::size_t>(i)) continue;
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i), 23));
      const int n = static_cast<int>(x.size());
      const MultilinearPoly f = MultilinearPoly::random(n, std::min(degree, n), rng);
      Report rep = invariance_gap(f, x, y, cubic_test(), std::nullopt, c.tol);
      rep.append(invariance_gap(f, x, y, sine_test(1.0), std::nullopt, c.tol));
      s.absorb(rep, {{"entry", i}});
    }
    out.add("invariance", s);
  } else {
    out.add("invariance", invariance_suite(seed, count, out.suite_options()));
  }
  out.result = {{"count", count}};
}

void cmd_verify_threshold(const RunConfig& c, Collector& out) {
  if (c.inputs.count("input")) {
    const BiasedFunction f = load_function(c);
    const double p = require_param(c, "p"), q = require_param(c, "q");
    ThresholdOptions opts;
    opts.tol = c.tol;
    if (has(c, "C")) opts.quasirandom_c = param(c, "C", 1.0);
    if (has(c, "eps")) opts.eps = {param(c, "eps", 0.5)};
    out.add("threshold", threshold_checks(f, p, q, opts));
    const MeasureCurve curve = measure_curve(f);
    out.add("curve", curve_sanity(curve));
    out.result = {{"mu_p", mean_at(f, p)}, {"mu_q", mean_at(f, q)}, {"critical_probability", critical_probability(curve)}};
    return;
  }
  const std::uint64_t seed = require_seed(c);
  const int pairs = int_param(c, "pairs", 20);
  const int max_n = int_param(c, "max-n", 10);
  if (out.wants("threshold")) out.add("threshold", threshold_suite(seed, pairs, max_n, out.suite_options()));
  if (out.wants("russo")) out.add("russo", russo_suite(seed, param(c, "step", 1e-3), out.suite_options()));
  if (out.wants("binomial_tail")) out.add("binomial_tail", binomial_tail_check(60, c.tol));
  json pq = json::array();
  for (auto [p, q] : threshold_pairs(seed, pairs)) pq.push_back({p, q});
  out.result = {{"pairs", pq}, {"max_n", max_n}};
}

void cmd_families(const RunConfig& c, Collector& out) {
  const std::string& sub = c.subcommand;
  if (sub == "expand") {
    const Hypergraph g = load_graph(c);
    out.result = hypergraph_json(expand(g, require_int(c, "k")));
  } else if (sub == "cover") {
    const Hypergraph g = load_graph(c);
    const CoverNumbers cn = cover_numbers(g, int_param(c, "k", -1));
    Report rep;
    rep.inequality("cover_numbers.order", true, cn.tau, cn.cc, 0.0);
    out.add("cover", rep);
    out.result = {{"tau", cn.tau},
                  {"cc", cn.cc},
                  {"transversal", one_based_vertices(cn.tau_witness)},
                  {"crosscut", one_based_vertices(cn.cc_witness)},
                  {"expansion_uniformity", cn.expansion_uniformity}};
  } else if (sub == "compress") {
    const SetFamily f = load_family(c);
    const SetFamily g = compress(f, require_int(c, "i") - 1, require_int(c, "j") - 1);
    out.result = family_json(g);
  } else if (sub == "shadow") {
    const SetFamily f = load_family(c);
    const int ell = require_int(c, "ell");
    const SetFamily s = has(c, "c") ? fat_shadow(f, ell, param(c, "c", 0.0)) : shadow(f, ell);
    out.add("shadow", kruskal_katona_check(f, c.tol));
    out.result = family_json(s);
    out.result["measure"] = s.measure();
  } else if (sub == "pseudo") {
    const SetFamily f = load_family(c);
    PseudorandomnessParams pr;
    pr.a = int_param(c, "a", 1);
    pr.eps = param(c, "eps", 0.1);
    pr.r = int_param(c, "r", 1);
    pr.delta = param(c, "delta", 0.1);
    pr.p = param(c, "p", -1.0);
    const Report rep = pseudorandomness_report(f, pr);
    out.add("pseudorandomness", rep);
    if (f.k() > 0) out.add("global_uncapturable", global_uncapturable_check(f, pr.a, c.tol));
    out.result = rep.data;
  } else if (sub == "turan") {
    const Hypergraph g = load_graph(c);
    const TuranResult t = turan_exact(g, require_int(c, "k"), require_int(c, "n"));
    out.result = {{"value", t.value},
                  {"candidates", t.candidates},
                  {"copies", t.copies},
                  {"incumbent", t.incumbent},
                  {"nodes", t.nodes},
                  {"witness", family_json(t.witness)}};
  } else if (sub == "junta") {
    const SetFamily f = load_family(c);
    const JuntaSplit split = junta_extract(f, require_param(c, "beta"), c.tol);
    out.add("junta", split.report);
    out.result = split.report.data;
    out.result["J"] = one_based(split.j);
    out.result["residual"] = family_json(split.residual);
  } else if (sub == "critical") {
    const Hypergraph g = load_graph(c);
    const Report rep = criticality_classify(g);
    out.add("criticality", rep);
    out.result = rep.data;
    if (has(c, "n") && has(c, "k") && !rep.data["critical_pairs"].empty()) {
      const auto& pair = rep.data["critical_pairs"][0];
      const SetFamily fam = fjs_family(g, pair[0].get<int>(), pair[1].get<int>(), require_int(c, "n"), require_int(c, "k"));
      out.result["construction_size"] = fam.size();
    }
  } else {
    throw UsageError("unknown families subcommand '" + sub +
                     "' (expand, cover, compress, shadow, pseudo, turan, junta, critical)");
  }
}

void cmd_explore_boost(const RunConfig& c, Collector& out) {
  const BiasedFunction f = load_function(c);
  const Report rep = boost_search(f, int_param(c, "max-size", 3));
  out.add("boost", rep);
  out.result = rep.data;
}

void cmd_corpus_suite(const RunConfig& c, Collector& out) {
  const std::uint64_t seed = require_seed(c);
  const Corpus corpus = default_corpus(c);
  const SuiteOptions so = out.suite_options();
  HcSuiteOptions hc;
  hc.tol = c.tol;
  if (out.wants("hc")) out.add("hc", hc_corpus(corpus, hc, so));
  if (out.wants("replacement")) out.add("replacement", replacement_suite(corpus, 8, so));
  if (out.wants("conditional")) out.add("conditional", conditional_suite(corpus, 10, so));
  if (out.wants("q_moment")) out.add("q_moment", q_moment_suite(seed, 100, {3.0, 4.0, 6.0}, so));
  if (out.wants("efron_stein")) out.add("efron_stein", efron_stein_suite(seed, 100, 4, 1.0 / 64.0, so));
  if (out.wants("invariance")) out.add("invariance", invariance_suite(seed, 50, so));
  if (out.wants("threshold")) out.add("threshold", threshold_suite(seed, 20, 10, so));
  if (out.wants("russo")) out.add("russo", russo_suite(seed, 1e-3, so));
  out.result = {{"corpus_size", corpus.entries.size()}};
}

json assemble(const RunConfig& c, const Collector& out, double seconds) {
  json params = c.params;
  for (const auto& [k, v] : c.inputs) params[k] = v;
  params["tol"] = c.tol;
  if (!c.subcommand.empty()) params["subcommand"] = c.subcommand;
  if (c.only_case) params["case"] = *c.only_case;
  if (c.suite) params["suite"] = *c.suite;
  json report = {{"command", c.command},
                 {"params", params},
                 {"seed", c.seed ? json(*c.seed) : json(nullptr)},
                 {"cases_run", out.total().cases()},
                 {"hypothesis_satisfied", out.total().hypothesis_satisfied()},
                 {"violations", out.violations()},
                 {"checks", out.total().tallies_json()},
                 {"result", out.result},
                 {"wall_time", seconds}};
  if (!out.notices().empty()) report["notices"] = out.notices();
  return report;
}

json error_report(const RunConfig& c, const std::string& kind, const std::string& message) {
  return {{"command", c.command},
          {"params", c.params},
          {"seed", c.seed ? json(*c.seed) : json(nullptr)},
          {"cases_run", 0},
          {"hypothesis_satisfied", 0},
          {"violations", json::array()},
          {"error", {{"kind", kind}, {"message", message}}},
          {"wall_time", 0.0}};
}

}  // namespace

RunResult run_report(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Collector out(config);
  try {
    const std::string& cmd = config.command;
    if (cmd == "transform")
      cmd_transform(config, out);
    else if (cmd == "influence")
      cmd_influence(config, out);
    else if (cmd == "verify-hc")
      cmd_verify_hc(config, out);
    else if (cmd == "verify-es")
      cmd_verify_es(config, out);
    else if (cmd == "verify-inv")
      cmd_verify_inv(config, out);
    else if (cmd == "verify-threshold")
      cmd_verify_threshold(config, out);
    else if (cmd == "families")
      cmd_families(config, out);
    else if (cmd == "explore-boost")
      cmd_explore_boost(config, out);
    else if (cmd == "corpus-suite")
      cmd_corpus_suite(config, out);
    else
      return {kUsage, error_report(config, "unknown_command", "unknown command '" + cmd + "'")};
  } catch (const BudgetExceeded& e) {
    return {kBudget, error_report(config, "budget_exceeded", e.what())};
  } catch (const std::invalid_argument& e) {
    return {kUsage, error_report(config, "invalid_input", e.what())};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json report = assemble(config, out, seconds);
  return {out.total().violation_count() == 0 ? kOk : kViolation, std::move(report)};
}

RunResult replay(const json& saved) {
  json witnesses = json::array();
  if (saved.is_array())
    witnesses = saved;
  else if (saved.is_object() && saved.contains("violations"))
    witnesses = saved["violations"];
  else if (saved.is_object() && saved.contains("replay"))
    witnesses.push_back(saved);
  else
    return {kUsage, {{"command", "replay"}, {"error", {{"kind", "invalid_input"}, {"message", "no witnesses to replay"}}}}};

  json runs = json::array();
  std::size_t cases = 0, satisfied = 0;
  json violations = json::array();
  int code = kOk;
  for (const auto& w : witnesses) {
    if (!w.contains("replay")) continue;
    const json& r = w["replay"];
    RunConfig c;
    c.command = r.value("command", "");
    c.subcommand = r.value("subcommand", "");
    c.inputs = r.value("inputs", std::map<std::string, std::string>{});
    c.params = r.value("params", std::map<std::string, double>{});
    if (r.contains("seed")) c.seed = r["seed"].get<std::uint64_t>();
    c.tol = r.value("tol", 1e-9);
    if (r.contains("case")) c.only_case = r["case"].get<std::size_t>();
    if (r.contains("suite")) c.suite = r["suite"].get<std::string>();
    RunResult res = run_report(c);
    if (res.exit_code > code) code = res.exit_code;
    cases += res.report.value("cases_run", std::size_t{0});
    satisfied += res.report.value("hypothesis_satisfied", std::size_t{0});
    for (const auto& v : res.report.value("violations", json::array())) violations.push_back(v);
    res.report.erase("wall_time");
    runs.push_back(std::move(res.report));
  }
  json report = {{"command", "replay"},  {"params", json::object()}, {"seed", nullptr},
                 {"cases_run", cases},   {"hypothesis_satisfied", satisfied},
                 {"violations", violations}, {"result", {{"runs", runs}}}, {"wall_time", 0.0}};
  return {code, std::move(report)};
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << "command: " << report.value("command", "") << '\n';
  if (report.contains("seed") && !report["seed"].is_null()) out << "seed: " << report["seed"] << '\n';
  if (report.contains("error")) {
    out << "error (" << report["error"].value("kind", "") << "): " << report["error"].value("message", "") << '\n';
    return out.str();
  }
  out << "cases run: " << report.value("cases_run", 0) << ", hypothesis satisfied: "
      << report.value("hypothesis_satisfied", 0) << ", violations: " << report["violations"].size() << '\n';
  if (report.contains("checks"))
    for (const auto& [name, t] : report["checks"].items())
      out << "  " << name << ": " << t.value("cases", 0) << " cases, " << t.value("hypothesis_satisfied", 0)
          << " with hypothesis, " << t.value("violations", 0) << " violations\n";
  std::size_t shown = 0;
  for (const auto& v : report["violations"]) {
    if (shown++ == 10) {
      out << "  ...\n";
      break;
    }
    out << "  violation: " << v.dump() << '\n';
  }
  if (report.contains("notices"))
    for (const auto& n : report["notices"]) out << "note: " << n.get<std::string>() << '\n';
  if (report.contains("result") && !report["result"].empty()) {
    const std::string body = report["result"].dump(2);
    if (body.size() <= 6000)
      out << "result: " << body << '\n';
    else
      out << "result: " << body.size() << " bytes, use --format json\n";
  }
  out << "wall time: " << report.value("wall_time", 0.0) << " s\n";
  return out.str();
}

json without_wall_time(json report) {
  report.erase("wall_time");
  return report;
}

}  // namespace bcube::cli
