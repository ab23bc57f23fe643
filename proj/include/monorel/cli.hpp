#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "monorel/battery.hpp"
#include "monorel/tolerance.hpp"

namespace monorel::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kInputError = 2;

struct AnalyzeOptions {
  std::string path;
  bool json = false;
  std::optional<Tolerance> tol_override;
};

struct AdjointOptions {
  std::string path;
  bool json = false;
};

struct DecomposeOptions {
  std::string path;
  bool json = false;
};

struct BatteryCliOptions {
  BatteryOptions battery;
  bool json = false;
  /// Directory for counterexample files; empty disables emission.
  std::string counterexample_dir;
};

struct ExamplesOptions {
  std::string name;
  bool json = false;
};

int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int run_adjoint(const AdjointOptions& opts, std::ostream& out, std::ostream& err);
int run_decompose(const DecomposeOptions& opts, std::ostream& out, std::ostream& err);
int run_battery_cmd(const BatteryCliOptions& opts, std::ostream& out, std::ostream& err);
int run_examples(const ExamplesOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace monorel::cli
