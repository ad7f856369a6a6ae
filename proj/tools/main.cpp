#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "lpterm/cli.hpp"

namespace {

const std::map<std::string, lpterm::HeuristicKind> kHeuristics = {
    {"im", lpterm::HeuristicKind::Im},
    {"om", lpterm::HeuristicKind::Om},
    {"om2", lpterm::HeuristicKind::OmImproved},
    {"tb", lpterm::HeuristicKind::TypeBased},
    {"tb2", lpterm::HeuristicKind::TypeBasedImproved},
};

void add_common_flags(CLI::App* app, lpterm::Config& config, std::string& heuristic,
                      std::string& mode_splitting) {
  app->add_option("--heuristic", heuristic, "refinement heuristic (im|om|om2|tb|tb2)")
      ->envname("LPTERM_HEURISTIC")
      ->check(CLI::IsMember({"im", "om", "om2", "tb", "tb2"}))
      ->default_val("tb2");
  app->add_option("--mode-splitting", mode_splitting, "labelled mode-splitting copies (on|off)")
      ->envname("LPTERM_MODE_SPLITTING")
      ->check(CLI::IsMember({"on", "off"}))
      ->default_val("on");
  app->add_option("--max-coeff", config.max_coeff,
                  "max polynomial coefficient for reduction pairs (1..5)")
      ->envname("LPTERM_MAX_COEFF")
      ->check(CLI::Range(1, 5))
      ->default_val(2);
  app->add_option("--timeout", config.timeout_seconds, "timeout in seconds")
      ->envname("LPTERM_TIMEOUT")
      ->check(CLI::PositiveNumber)
      ->default_val(60.0);
  app->add_option("--proof-format", config.proof_format, "proof output format (text|json)")
      ->envname("LPTERM_PROOF_FORMAT")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  app->add_flag("--emit-trs", config.emit_trs, "print the transformed TRS");
  app->add_flag("--classical", config.classical,
                "classical moded transformation + ordinary rewriting");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"termination prover for definite logic programs"};
  app.require_subcommand(0, 1);

  lpterm::Config config;
  std::string heuristic = "tb2", mode_splitting = "on";
  std::string path;
  app.add_option("path", path, "program file (.pl) or directory");
  add_common_flags(&app, config, heuristic, mode_splitting);

  CLI::App* check = app.add_subcommand("check", "cross-validate a verdict with bounded SLD");
  lpterm::Config check_config;
  std::string check_heuristic = "tb2", check_splitting = "on", check_path;
  int samples = 25, depth = 10000;
  unsigned seed = 12345;
  check->add_option("path", check_path, "program file (.pl)")->required();
  add_common_flags(check, check_config, check_heuristic, check_splitting);
  check->add_option("--samples", samples, "number of sampled queries")->default_val(25);
  check->add_option("--depth", depth, "SLD resolution step bound")->default_val(10000);
  check->add_option("--seed", seed, "sampling seed")->default_val(12345u);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      check_config.heuristic = kHeuristics.at(check_heuristic);
      check_config.mode_splitting = check_splitting == "on";
      return lpterm::run_check(check_path, check_config, samples, depth, seed, std::cout,
                               std::cerr);
    }
    if (path.empty()) {
      std::cerr << "error: missing program path (see --help)\n";
      return 2;
    }
    config.heuristic = kHeuristics.at(heuristic);
    config.mode_splitting = mode_splitting == "on";
    return lpterm::run(path, config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
