#include "rpga/report_io.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <system_error>

namespace rpga {

namespace {

std::string real(double v) { return fmt::format("{:.17g}", v); }

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string trace_csv(const RunTrace& trace) {
  std::string out = "k,atom_index,inner_product,lambda_k,t_k,objective_value,error_k\n";
  for (const auto& r : trace.records) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.k, r.atom_index, real(r.inner_product), real(r.lambda_k),
                       real(r.t_k), real(r.objective_value), r.error_k ? real(*r.error_k) : "unknown");
  }
  return out;
}

std::string summary_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["variant"] = std::string(to_string(s.variant));
  j["termination"] = s.termination;
  if (!s.message.empty()) j["message"] = s.message;
  j["steps"] = s.steps;
  j["initial_value"] = s.initial_value;
  j["final_value"] = s.final_value;
  j["final_error"] = s.final_error ? nlohmann::ordered_json(*s.final_error) : nlohmann::ordered_json(nullptr);
  j["fitted_slope"] = s.fitted_slope ? nlohmann::ordered_json(*s.fitted_slope) : nlohmann::ordered_json(nullptr);
  if (!s.slope_note.empty()) j["slope_note"] = s.slope_note;
  j["bound_check"] = s.bound_check;
  if (!s.first_failure.empty()) j["first_failure"] = s.first_failure;
  return j.dump(2) + "\n";
}

std::string loglog_svg(const std::string& title, const std::vector<PlotSeries>& series) {
  constexpr double kWidth = 640.0, kHeight = 420.0, kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (auto [x, y] : s.points) {
      if (!(x > 0.0 && y > 0.0)) continue;
      xmin = std::min(xmin, std::log10(x));
      xmax = std::max(xmax, std::log10(x));
      ymin = std::min(ymin, std::log10(y));
      ymax = std::max(ymax, std::log10(y));
    }
  }
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-12) ymax = ymin + 1.0;
  auto px = [&](double lx) { return kLeft + (lx - xmin) / (xmax - xmin) * (kWidth - kLeft - kRight); };
  auto py = [&](double ly) { return kHeight - kBottom - (ly - ymin) / (ymax - ymin) * (kHeight - kTop - kBottom); };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\">{3}</text>\n",
      kWidth, kHeight, kLeft, xml_escape(title));
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", kLeft,
                     kHeight - kBottom, kWidth - kRight);
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", kLeft, kTop,
                     kHeight - kBottom);
  for (int e = static_cast<int>(std::ceil(xmin)); e <= static_cast<int>(std::floor(xmax)); ++e)
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\" "
                       "text-anchor=\"middle\">1e{}</text>\n",
                       px(e), kHeight - kBottom + 16.0, e);
  for (int e = static_cast<int>(std::ceil(ymin)); e <= static_cast<int>(std::floor(ymax)); ++e)
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\" "
                       "text-anchor=\"end\">1e{}</text>\n",
                       kLeft - 6.0, py(e) + 4.0, e);
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"12\" "
                     "text-anchor=\"middle\">k</text>\n",
                     0.5 * (kLeft + kWidth - kRight), kHeight - 12.0);

  double legend_y = kTop + 6.0;
  for (const auto& s : series) {
    std::string pts;
    for (auto [x, y] : s.points) {
      if (!(x > 0.0 && y > 0.0)) continue;
      pts += fmt::format("{:.2f},{:.2f} ", px(std::log10(x)), py(std::log10(y)));
    }
    svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"{}\"/>\n", xml_escape(s.color),
                       s.dashed ? " stroke-dasharray=\"6,4\"" : "", pts);
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\" "
                       "fill=\"{}\" text-anchor=\"end\">{}</text>\n",
                       kWidth - kRight - 4.0, legend_y, xml_escape(s.color), xml_escape(s.label));
    legend_y += 14.0;
  }
  svg += "</svg>\n";
  return svg;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace rpga
