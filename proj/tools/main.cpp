#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "io.hpp"

int main(int argc, char** argv) {
  using bcube::cli::RunConfig;
  CLI::App app{"Verification suites and explorers for functions on the p-biased cube"};
  app.set_help_all_flag("--help-all");

  RunConfig config;
  std::string format = "json", output, replay_path;
  std::uint64_t seed = 0;
  std::size_t only_case = 0;
  std::string suite;

  app.add_option("command", config.command,
                 "transform | influence | verify-hc | verify-es | verify-inv | verify-threshold | families | "
                 "explore-boost | corpus-suite");
  app.add_option("subcommand", config.subcommand,
                 "families: expand | cover | compress | shadow | pseudo | turan | junta | critical");

  const std::map<std::string, std::string> input_help = {
      {"input", "function or family file"}, {"graph", "hypergraph file"}, {"graph-spec", "named graph, e.g. matching:2"},
      {"x", "random-variable file (X side)"}, {"y", "random-variable file (Y side)"}};
  std::map<std::string, std::string> inputs;
  for (const auto& [name, help] : input_help) app.add_option("--" + name, inputs[name], help);

  const std::map<std::string, std::string> numeric_help = {
      {"p", "bias p"}, {"q", "second bias q"}, {"rho", "noise rate"}, {"r", "degree / restriction size"},
      {"qnorm", "moment order q"}, {"k", "uniformity"}, {"n", "ground set size"}, {"a", "capture size"},
      {"eps", "epsilon"}, {"delta", "delta"}, {"beta", "degree threshold"}, {"ell", "shadow level"},
      {"c", "fat-shadow threshold"}, {"i", "compression target (1-based)"}, {"j", "compression source (1-based)"},
      {"count", "batch size"}, {"max-size", "largest restriction size"}, {"max-n", "largest corpus dimension"},
      {"pairs", "number of (p,q) pairs"}, {"step", "finite-difference step"}, {"degree", "polynomial degree"},
      {"C", "quasirandom threshold constant"}};
  std::map<std::string, double> numbers;
  std::map<std::string, CLI::Option*> numeric_opts;
  for (const auto& [name, help] : numeric_help) numeric_opts[name] = app.add_option("--" + name, numbers[name], help);

  auto* seed_opt = app.add_option("--seed", seed, "seed for corpus and batch commands");
  app.add_option("--tol", config.tol, "relative slack for inequalities (negative demands a strict margin)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output, "write the report here instead of stdout");
  auto* replay_opt = app.add_option("--replay", replay_path, "rerun the witnesses stored in a saved report");
  auto* case_opt = app.add_option("--case", only_case, "run a single case of a batch");
  auto* suite_opt = app.add_option("--suite", suite, "run a single named suite of a batch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : bcube::cli::kUsage;
  }

  for (const auto& [name, value] : inputs)
    if (!value.empty()) config.inputs[name == "graph-spec" ? "graph_spec" : name] = value;
  for (const auto& [name, opt] : numeric_opts)
    if (opt->count() > 0) config.params[name] = numbers[name];
  if (seed_opt->count() > 0) config.seed = seed;
  if (case_opt->count() > 0) config.only_case = only_case;
  if (suite_opt->count() > 0) config.suite = suite;

  bcube::cli::RunResult result;
  if (replay_opt->count() > 0) {
    try {
      result = bcube::cli::replay(nlohmann::json::parse(bcube::cli::read_file(replay_path)));
    } catch (const std::exception& e) {
      std::cerr << "cannot replay '" << replay_path << "': " << e.what() << '\n';
      return bcube::cli::kUsage;
    }
  } else {
    if (config.command.empty()) {
      std::cerr << app.help();
      return bcube::cli::kUsage;
    }
    result = bcube::cli::run_report(config);
  }

  const std::string text = format == "json" ? result.report.dump(2) + "\n" : bcube::cli::render_text(result.report);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << output << "'\n";
      return bcube::cli::kUsage;
    }
    out << text;
  }
  if (result.report.contains("error"))
    std::cerr << result.report["error"].value("message", "") << '\n';
  return result.exit_code;
}
