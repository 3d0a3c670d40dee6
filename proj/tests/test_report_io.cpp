#include "rpga/report_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rpga;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Minimal tag balance check: every <tag> is closed in order, self-closing tags count as both.
bool tags_balanced(const std::string& xml) {
  std::vector<std::string> stack;
  for (std::size_t i = xml.find('<'); i != std::string::npos; i = xml.find('<', i + 1)) {
    const std::size_t end = xml.find('>', i);
    if (end == std::string::npos) return false;
    std::string tag = xml.substr(i + 1, end - i - 1);
    if (tag.empty()) return false;
    if (tag.back() == '/') continue;
    if (tag.front() == '/') {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else {
      stack.push_back(tag.substr(0, tag.find(' ')));
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("trace csv layout") {
  RunTrace trace;
  IterationRecord a;
  a.k = 1;
  a.atom_index = 3;
  a.inner_product = -0.1;
  a.lambda_k = 0.05;
  a.t_k = 2.0;
  a.objective_value = 1.0 / 3.0;
  a.error_k = 0.25;
  IterationRecord b = a;
  b.k = 2;
  b.error_k.reset();
  trace.records = {a, b};

  const auto lines = lines_of(trace_csv(trace));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "k,atom_index,inner_product,lambda_k,t_k,objective_value,error_k");
  CHECK(lines[1] == "1,3,-0.10000000000000001,0.050000000000000003,2,0.33333333333333331,0.25");
  CHECK(lines[2].substr(lines[2].rfind(',') + 1) == "unknown");
  // 17 significant digits round-trip exactly.
  CHECK(std::stod("0.33333333333333331") == 1.0 / 3.0);
}

TEST_CASE("empty trace is header only") {
  CHECK(trace_csv(RunTrace{}) == "k,atom_index,inner_product,lambda_k,t_k,objective_value,error_k\n");
}

TEST_CASE("summary json fields") {
  RunSummary s;
  s.variant = Variant::weak_rescaled;
  s.termination = "max_iterations";
  s.steps = 12;
  s.initial_value = 2.0;
  s.final_value = 0.5;
  s.final_error = 0.25;
  s.bound_check = "pass";
  s.slope_note = "too few steps";

  const auto j = nlohmann::json::parse(summary_json(s));
  CHECK(j["variant"] == "weak_rescaled");
  CHECK(j["termination"] == "max_iterations");
  CHECK(j["steps"] == 12);
  CHECK(j["initial_value"] == 2.0);
  CHECK(j["final_value"] == 0.5);
  CHECK(j["final_error"] == 0.25);
  CHECK(j["fitted_slope"].is_null());
  CHECK(j["slope_note"] == "too few steps");
  CHECK(j["bound_check"] == "pass");
  CHECK_FALSE(j.contains("message"));
  CHECK_FALSE(j.contains("first_failure"));

  s.final_error.reset();
  s.message = "line search: objective decreases along the whole ray";
  s.first_failure = "k = 4: bound";
  const auto k = nlohmann::json::parse(summary_json(s));
  CHECK(k["final_error"].is_null());
  CHECK(k["message"] == s.message);
  CHECK(k["first_failure"] == s.first_failure);
}

TEST_CASE("svg is well formed and escapes text") {
  std::vector<PlotSeries> series{
      {"a & b", "#1f77b4", {{1.0, 1.0}, {2.0, 0.5}, {4.0, 0.25}, {8.0, 0.0}}, false},
      {"<bound>", "#555555", {{1.0, 2.0}, {8.0, 0.1}}, true},
  };
  const std::string svg = loglog_svg("e_k < 1", series);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("a &amp; b") != std::string::npos);
  CHECK(svg.find("&lt;bound&gt;") != std::string::npos);
  CHECK(svg.find("e_k &lt; 1") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);
  CHECK(tags_balanced(svg));

  // No plottable points at all still yields a valid document.
  const std::string empty = loglog_svg("nothing", {{"zero", "#000000", {{0.0, 0.0}}, false}});
  CHECK(tags_balanced(empty));
  CHECK(empty.find("nan") == std::string::npos);
}

TEST_CASE("atomic write replaces content and leaves no temporary") {
  const auto dir = std::filesystem::temp_directory_path() / "rpga_report_io_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";

  write_file_atomic(path, "first\n");
  CHECK(slurp(path) == "first\n");
  write_file_atomic(path, "second\n");
  CHECK(slurp(path) == "second\n");
  CHECK_FALSE(std::filesystem::exists(dir / "out.csv.tmp"));

  CHECK_THROWS(write_file_atomic(dir / "missing" / "x.csv", "x"));
  std::filesystem::remove_all(dir);
}
