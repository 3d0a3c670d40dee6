#pragma once

#include "rpga/analysis.hpp"
#include "rpga/core.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rpga {

/// Columns: k, atom_index, inner_product, lambda_k, t_k, objective_value, error_k.
/// Reals use 17 significant digits; unknown errors are written as `unknown`.
std::string trace_csv(const RunTrace& trace);

struct RunSummary {
  Variant variant = Variant::rescaled;
  std::string termination;
  std::string message;
  std::size_t steps = 0;
  double initial_value = 0.0;
  double final_value = 0.0;
  std::optional<double> final_error;
  std::optional<double> fitted_slope;
  std::string slope_note;
  /// pass | fail | skipped | not_applicable
  std::string bound_check = "skipped";
  std::string first_failure;
};

std::string summary_json(const RunSummary& summary);

struct PlotSeries {
  std::string label;
  std::string color;
  /// (k, value) points; nonpositive values are dropped on the log scale.
  std::vector<std::pair<double, double>> points;
  bool dashed = false;
};

/// Self-contained SVG line chart on log-log axes.
std::string loglog_svg(const std::string& title, const std::vector<PlotSeries>& series);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace rpga
