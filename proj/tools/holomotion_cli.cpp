#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "holomotion/report.hpp"
#include "holomotion/svg.hpp"

namespace fs = std::filesystem;
using holomotion::RunConfig;
using nlohmann::json;

namespace {

constexpr int kExitUncertified = 1;
constexpr int kExitStageError = 2;
constexpr int kExitUsage = 3;
constexpr const char* kOutDirEnv = "HOLOMOTION_OUT_DIR";

// Flag values as given on the command line; empty optionals were not passed.
struct CommandLine {
  std::optional<int> n;
  std::optional<double> R;
  std::optional<double> r;
  std::optional<double> z0;
  std::optional<int> samples;
  std::optional<int> max_depth;
  std::optional<double> rtol;
  std::optional<std::string> out;
  std::optional<std::string> config_file;
  std::string pair;
};

void add_run_options(CLI::App* cmd, CommandLine& cl) {
  cmd->add_option("--n", cl.n, "Blaschke power n (>= 2)");
  cmd->add_option("--R", cl.R, "Outer radius of the annulus A");
  cmd->add_option("--r", cl.r, "Radius of the disk D");
  cmd->add_option("--z0", cl.z0, "Shift z0 of h = g - z0");
  cmd->add_option("--samples", cl.samples, "Initial samples per contour (power of two)");
  cmd->add_option("--max-depth", cl.max_depth, "Maximum refinement passes");
  cmd->add_option("--rtol", cl.rtol, "Relative tolerance for modulus extrema");
  cmd->add_option("--out", cl.out, std::string("Output directory (overrides $") + kOutDirEnv + ")");
  cmd->add_option("--config", cl.config_file, "JSON config file with the report's config keys")
      ->check(CLI::ExistingFile);
}

// Precedence: flags, then the config file, then defaults. The output
// directory additionally consults the environment between flag and file.
RunConfig resolve_config(const CommandLine& cl) {
  RunConfig config;
  if (cl.config_file) {
    std::ifstream in(*cl.config_file);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw holomotion::DomainError("cannot parse " + *cl.config_file + ": " + e.what());
    }
    config = holomotion::config_from_json(j, config);
  }
  if (cl.n) config.n = *cl.n;
  if (cl.R) config.R = cl.R;
  if (cl.r) config.r = cl.r;
  if (cl.z0) config.z0 = cl.z0;
  if (cl.samples) config.samples = *cl.samples;
  if (cl.max_depth) config.max_depth = *cl.max_depth;
  if (cl.rtol) config.rtol = *cl.rtol;
  if (cl.out) {
    config.out = *cl.out;
  } else if (const char* env = std::getenv(kOutDirEnv); env && *env) {
    config.out = env;
  }
  config.validate();
  return config;
}

std::vector<std::string> write_figures(const RunConfig& config,
                                       const holomotion::ConstructionParams& params) {
  std::vector<std::string> paths;
  for (const auto& doc : holomotion::render_figures(params, config.samples < 512 ? 512 : config.samples)) {
    const fs::path path = fs::path(config.out) / doc.file_name;
    holomotion::write_file_atomic(path, doc.svg);
    paths.push_back(path.string());
  }
  return paths;
}

int cmd_construct(const RunConfig& config) {
  holomotion::Report report = holomotion::run_construct(config);
  report.figures = write_figures(config, holomotion::construct_params(config));
  const std::string text = holomotion::emit_report(report);
  holomotion::write_file_atomic(fs::path(config.out) / "report.json", text);
  std::cout << text;
  if (!report.all_certified()) {
    std::cerr << "holomotion: report contains uncertified checks\n";
    for (const auto& c : report.certificates.checks) {
      if (!c.certified) std::cerr << "  failed: " << c.name << "\n";
    }
    for (const auto& [key, w] : report.windings) {
      if (!w.certified) std::cerr << "  uncertified winding: " << key << "\n";
    }
    return kExitUncertified;
  }
  return 0;
}

int cmd_figures(const RunConfig& config) {
  const auto params = holomotion::construct_params(config);
  std::cout << json{{"figures", write_figures(config, params)}}.dump(2) << "\n";
  return 0;
}

int cmd_word(const RunConfig& config) {
  const holomotion::HomotopyClass loop = holomotion::run_word(config);
  const json out{{"word", loop.word.to_string()},
                 {"reduced_word", loop.reduced.to_string()},
                 {"cyclic_word", loop.cyclic.to_string()},
                 {"normal_form", loop.normal_form.to_string()},
                 {"abelianization", {loop.abelianization.first, loop.abelianization.second}},
                 {"agrees_with_lemma_pr", loop.nontrivial()}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_winding(const RunConfig& config, const std::string& key) {
  const auto pair = holomotion::parse_pair_key(key);
  if (!pair) {
    std::cerr << "holomotion: unknown pair label '" << key
              << "' (expected xi_0, xi_1, xi_inf, 0_1, 0_inf, 1_inf)\n";
    return kExitUsage;
  }
  const holomotion::WindingReport w = holomotion::run_winding(config, *pair);
  const json out{{"pair", holomotion::pair_key(*pair)},
                 {"value", w.winding},
                 {"certified", w.certified},
                 {"samples", w.samples_used},
                 {"min_distance", w.min_distance_to_point}};
  std::cout << out.dump(2) << "\n";
  return w.certified ? 0 : kExitUncertified;
}

int cmd_solve_a(int n) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", holomotion::solve_a(n));
  std::cout << json{{"n", n}, {"a_n", json::parse(buf)}}.dump() << "\n";
  return 0;
}

void report_stage_error(const holomotion::StageError& e) {
  const json out{{"error", {{"stage", e.stage()}, {"predicate", e.predicate()}, {"message", e.what()}}}};
  std::cout << out.dump(2) << "\n";
  std::cerr << "holomotion: stage '" << e.stage() << "' failed";
  if (!e.predicate().empty()) std::cerr << " (predicate '" << e.predicate() << "')";
  std::cerr << ": " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction and certification of a non-extendable holomorphic motion"};
  app.require_subcommand(1);

  CommandLine cl;
  auto* construct = app.add_subcommand("construct", "Run the full pipeline and write report.json");
  auto* figures = app.add_subcommand("figures", "Write fig1.svg, fig2.svg, fig3.svg");
  auto* word = app.add_subcommand("word", "Free homotopy word of g(gamma) in C minus {0, z0}");
  auto* winding = app.add_subcommand("winding", "Winding number of one pair over the generator");
  auto* solve = app.add_subcommand("solve-a", "Print a_n");
  for (auto* cmd : {construct, figures, word, winding}) add_run_options(cmd, cl);
  winding->add_option("--pair", cl.pair, "Pair label, e.g. xi_0")->required();
  int solve_n = 2;
  solve->add_option("--n", solve_n, "Blaschke power n (>= 2)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve_a(solve_n);
    const RunConfig config = resolve_config(cl);
    if (construct->parsed()) return cmd_construct(config);
    if (figures->parsed()) return cmd_figures(config);
    if (word->parsed()) return cmd_word(config);
    return cmd_winding(config, cl.pair);
  } catch (const holomotion::StageError& e) {
    report_stage_error(e);
    return kExitStageError;
  } catch (const holomotion::Error& e) {
    std::cerr << "holomotion: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "holomotion: " << e.what() << "\n";
    return kExitUsage;
  }
}
