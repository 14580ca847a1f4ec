#pragma once

// Command-line surface. Subcommands:
//
//   dist     --state S --method radial|operator|pb|closed-form [--cutoff N]
//            [--theta0 T] [--grid M] [--out FILE] [--eps-tail E] [--force-method]
//   figure1  --variant a1|a2|b|all --out DIR
//   check    --cutoff N [--method operator --force-method]
//   dump-op  rho_w|Q|phi_s --cutoff N [--theta0 T] --out FILE
//
// Any flag can also come from a key=value file passed with --config.

#include <filesystem>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "phasekit/fock.hpp"
#include "phasekit/wigner_phase_op.hpp"

namespace phasekit::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kPathUnavailable = 3,  // also cutoff too small
  kValidationFailed = 4,
};

inline constexpr double kDefaultTheta0 = -std::numbers::pi;
inline constexpr int kDefaultGrid = 720;
inline constexpr double kNormalizationTolerance = 1e-6;

struct DistOptions {
  std::string state;
  std::string method = "radial";
  std::optional<int> cutoff;
  double theta0 = kDefaultTheta0;
  int grid = kDefaultGrid;
  std::filesystem::path out;  // empty or "-" writes to stdout
  double eps_tail = kDefaultEpsTail;
  bool force_method = false;
};

struct CheckOptions {
  int cutoff = 20;
  std::string method;  // "operator" together with force_method lifts the cap
  bool force_method = false;
};

struct DumpOptions {
  std::string op;  // rho_w | Q | phi_s
  int cutoff = 10;
  double theta0 = kDefaultTheta0;
  std::filesystem::path out;
  bool force_method = false;
};

int cmd_dist(const DistOptions& opts, std::ostream& out, std::ostream& err);
int cmd_figure1(const std::string& variant, const std::filesystem::path& out_dir,
                std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_dump_op(const DumpOptions& opts, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (args[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phasekit::cli
