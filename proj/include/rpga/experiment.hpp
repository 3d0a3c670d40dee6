#pragma once

#include "rpga/algorithms.hpp"
#include "rpga/analysis.hpp"
#include "rpga/core.hpp"
#include "rpga/dictionaries.hpp"
#include "rpga/objectives.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpga {

/// Malformed or unresolvable experiment input (exit code 2).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

struct ObjectiveSource {
  /// quad1d | quadratic | gaussian_quadratic | logistic | linear | power, or empty when `file` is set.
  std::string builtin = "quadratic";
  std::filesystem::path file;
  /// quadratic | logistic; how to read `file`.
  std::string file_type = "quadratic";
  std::size_t n = 10;
  std::size_t m = 50;
  double condition = 10.0;
  double p = 1.5;
  std::optional<std::uint64_t> seed;
};

struct DictionarySource {
  /// canonical | random_unit | union, or empty when `file` is set.
  std::string builtin = "canonical";
  std::filesystem::path file;
  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
};

/// Parsed experiment description. `auto` constants are resolved from the
/// objective's analytic constants in `build_problem`.
struct ExperimentSpec {
  ObjectiveSource objective;
  DictionarySource dictionary;
  RunConfig run_config;
  bool alpha_auto = true;
  bool m_zero_auto = true;
  bool us_radius_auto = true;
  bool q_auto = true;
  std::string selector = "argmax";
  std::filesystem::path outputs = "out";
  std::vector<Variant> variants{Variant::rescaled};
  std::vector<double> mu_grid;
  std::uint64_t seed = 1;
  std::size_t k_max = 200;
  std::size_t estimate_samples = 10000;
  bool svg = false;
};

/// Reads the INI-style spec (sections [objective], [dictionary], [run],
/// [experiment]). Relative file paths resolve against `base_dir`.
ExperimentSpec parse_experiment_spec(std::istream& in, const std::filesystem::path& base_dir);
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

struct Problem {
  std::unique_ptr<Objective> objective;
  Dictionary dictionary;
  RunConfig config;
  Selector selector;
  std::optional<MinimumInfo> minimum;
  /// ||x_bar||_1 with respect to the dictionary, when the minimizer is known.
  std::optional<double> xbar_l1;
};

/// Loads or generates the objective and dictionary and resolves constants.
/// Throws SpecError on unreadable inputs.
Problem build_problem(const ExperimentSpec& spec);

/// Runs every requested variant and writes trace_<variant>.csv and
/// summary_<variant>.json. Returns 0 iff every applicable bound check passes.
int cmd_run(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);
/// Writes bound.csv (k, observed_error, rpga_bound, wrpga_bound).
int cmd_bound(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);
/// Prints smoothness-constant estimates and the modulus table.
int cmd_estimate(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);
/// Writes mu_scan.csv (mu, final_error, fitted_slope, best).
int cmd_mu_scan(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace rpga
