#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "monorel/cli.hpp"
#include "monorel/errors.hpp"
#include "monorel/io.hpp"

namespace {

std::optional<monorel::Tolerance> make_tolerance(const std::optional<double>& rank,
                                                 const std::optional<double>& psd) {
  if (!rank && !psd) return std::nullopt;
  monorel::Tolerance base;
  return monorel::Tolerance(rank.value_or(base.rel_rank_tol), psd.value_or(base.psd_tol));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculus of monotone linear relations: analysis, adjoints, "
               "decomposition and a randomized invariant battery"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_path;
  bool analyze_json = false;
  std::optional<double> tol_rank, tol_psd;
  auto* analyze = app.add_subcommand("analyze", "full criteria report for a relation file");
  analyze->add_option("file", analyze_path, "relation file (JSON)")->required();
  analyze->add_flag("--json", analyze_json, "emit JSON");
  analyze->add_option("--tol-rank", tol_rank, "override rank tolerance");
  analyze->add_option("--tol-psd", tol_psd, "override PSD tolerance");

  // adjoint
  std::string adjoint_path;
  bool adjoint_json = false;
  auto* adjoint = app.add_subcommand("adjoint", "adjoint relation of a relation file");
  adjoint->add_option("file", adjoint_path, "relation file (JSON)")->required();
  adjoint->add_flag("--json", adjoint_json, "emit JSON (relation file format)");

  // decompose
  std::string decompose_path;
  bool decompose_json = false;
  auto* decompose =
      app.add_subcommand("decompose", "symmetric/skew decomposition of a relation file");
  decompose->add_option("file", decompose_path, "relation file (JSON)")->required();
  decompose->add_flag("--json", decompose_json, "emit JSON");

  // battery
  monorel::cli::BatteryCliOptions battery_opts;
  bool battery_json = false;
  std::string battery_profile;
  std::optional<double> battery_tol_rank, battery_tol_psd;
  auto* battery = app.add_subcommand("battery", "randomized invariant battery");
  battery->add_option("--seed", battery_opts.battery.seed, "generator seed");
  battery->add_option("--dim", battery_opts.battery.dim, "space dimension (1..32)");
  battery->add_option("--count", battery_opts.battery.count, "instances per profile");
  battery->add_option("--profile", battery_profile,
                      "restrict to one profile (maximal, monotone_nonmaximal, skew, "
                      "symmetric, multivalued_maximal, nonmonotone)");
  battery_opts.counterexample_dir = "monorel_counterexamples";
  battery->add_option("--counterexample-dir", battery_opts.counterexample_dir,
                      "directory for counterexample files on failure");
  battery->add_option("--tol-rank", battery_tol_rank, "override rank tolerance");
  battery->add_option("--tol-psd", battery_tol_psd, "override PSD tolerance");
  battery->add_flag("--json", battery_json, "emit JSON");

  // examples
  std::string example_name;
  bool examples_json = false;
  auto* examples = app.add_subcommand(
      "examples", "named fixtures: r2, shift:N, gossez:N, ncone, zerocone");
  examples->add_option("name", example_name, "example name")->required();
  examples->add_flag("--json", examples_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : monorel::cli::kInputError;
  }

  try {
    if (analyze->parsed()) {
      return monorel::cli::run_analyze(
          {analyze_path, analyze_json, make_tolerance(tol_rank, tol_psd)}, std::cout,
          std::cerr);
    }
    if (adjoint->parsed()) {
      return monorel::cli::run_adjoint({adjoint_path, adjoint_json}, std::cout, std::cerr);
    }
    if (decompose->parsed()) {
      return monorel::cli::run_decompose({decompose_path, decompose_json}, std::cout,
                                         std::cerr);
    }
    if (battery->parsed()) {
      if (!battery_profile.empty())
        battery_opts.battery.profile = monorel::profile_from_name(battery_profile);
      if (battery_tol_rank || battery_tol_psd) {
        monorel::Tolerance base;
        battery_opts.battery.tol = monorel::Tolerance(
            battery_tol_rank.value_or(base.rel_rank_tol), battery_tol_psd.value_or(base.psd_tol));
      }
      battery_opts.json = battery_json;
      return monorel::cli::run_battery_cmd(battery_opts, std::cout, std::cerr);
    }
    if (examples->parsed()) {
      return monorel::cli::run_examples({example_name, examples_json}, std::cout, std::cerr);
    }
  } catch (const monorel::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return monorel::cli::kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return monorel::cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return monorel::cli::kPropertyFailure;
  }
  return monorel::cli::kInputError;
}
