#include "rpga/experiment.hpp"

#include "rpga/instances.hpp"
#include "rpga/report_io.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

namespace rpga {

namespace pt = boost::property_tree;

namespace {

std::string lower_trim(std::string s) {
  boost::algorithm::trim(s);
  boost::algorithm::to_lower(s);
  return s;
}

double parse_real(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw SpecError(fmt::format("{}: '{}' is not a number", key, text));
  }
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  const double v = parse_real(key, text);
  if (v < 0.0 || v != std::floor(v)) throw SpecError(fmt::format("{}: '{}' is not a nonnegative integer", key, text));
  return static_cast<std::size_t>(v);
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(", "), boost::algorithm::token_compress_on);
  std::vector<double> out;
  for (auto& p : parts) {
    boost::algorithm::trim(p);
    if (!p.empty()) out.push_back(parse_real(key, p));
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string v = lower_trim(text);
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw SpecError(fmt::format("{}: '{}' is not a boolean", key, text));
}

class SpecReader {
 public:
  explicit SpecReader(const pt::ptree& tree) : tree_(tree) {}

  std::optional<std::string> get(const std::string& path) const {
    auto v = tree_.get_optional<std::string>(pt::ptree::path_type(path, '.'));
    if (!v) return std::nullopt;
    std::string s = *v;
    // Inline comments.
    if (auto pos = s.find_first_of(";#"); pos != std::string::npos) s.erase(pos);
    boost::algorithm::trim(s);
    return s;
  }

 private:
  const pt::ptree& tree_;
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

}  // namespace

ExperimentSpec parse_experiment_spec(std::istream& in, const std::filesystem::path& base_dir) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw SpecError(fmt::format("spec: {}", e.message()));
  }
  const SpecReader r(tree);
  ExperimentSpec spec;

  // [objective]
  if (auto f = r.get("objective.file")) {
    spec.objective.builtin.clear();
    spec.objective.file = resolve(base_dir, *f);
    if (auto t = r.get("objective.type")) spec.objective.file_type = lower_trim(*t);
    if (spec.objective.file_type != "quadratic" && spec.objective.file_type != "logistic")
      throw SpecError(fmt::format("objective.type: unknown file type '{}'", spec.objective.file_type));
  } else if (auto b = r.get("objective.builtin")) {
    spec.objective.builtin = lower_trim(*b);
  }
  if (auto v = r.get("objective.n")) spec.objective.n = parse_count("objective.n", *v);
  if (auto v = r.get("objective.m")) spec.objective.m = parse_count("objective.m", *v);
  if (auto v = r.get("objective.condition")) spec.objective.condition = parse_real("objective.condition", *v);
  if (auto v = r.get("objective.p")) spec.objective.p = parse_real("objective.p", *v);
  if (auto v = r.get("objective.seed")) spec.objective.seed = parse_count("objective.seed", *v);

  // [dictionary]
  if (auto f = r.get("dictionary.file")) {
    spec.dictionary.builtin.clear();
    spec.dictionary.file = resolve(base_dir, *f);
  } else if (auto b = r.get("dictionary.builtin")) {
    spec.dictionary.builtin = lower_trim(*b);
  }
  if (auto v = r.get("dictionary.count")) spec.dictionary.count = parse_count("dictionary.count", *v);
  if (auto v = r.get("dictionary.seed")) spec.dictionary.seed = parse_count("dictionary.seed", *v);

  // [run]
  RunConfig& cfg = spec.run_config;
  if (auto v = r.get("run.q"); v && lower_trim(*v) != "auto") {
    cfg.q = parse_real("run.q", *v);
    spec.q_auto = false;
  }
  if (auto v = r.get("run.alpha"); v && lower_trim(*v) != "auto") {
    cfg.alpha = parse_real("run.alpha", *v);
    spec.alpha_auto = false;
  }
  if (auto v = r.get("run.m_zero"); v && lower_trim(*v) != "auto") {
    spec.m_zero_auto = false;
    if (lower_trim(*v) == "unknown") cfg.m_zero.reset();
    else cfg.m_zero = parse_real("run.m_zero", *v);
  }
  if (auto v = r.get("run.us_radius"); v && lower_trim(*v) != "auto") {
    spec.us_radius_auto = false;
    if (lower_trim(*v) == "infinite") cfg.us_radius.reset();
    else cfg.us_radius = parse_real("run.us_radius", *v);
  }
  if (auto v = r.get("run.mu")) cfg.mu_sequence = parse_list("run.mu", *v);
  if (auto v = r.get("run.weakness")) cfg.weakness_sequence = parse_list("run.weakness", *v);
  if (auto v = r.get("run.max_iterations")) cfg.max_iterations = parse_count("run.max_iterations", *v);
  if (auto v = r.get("run.gradient_tolerance"); v && lower_trim(*v) != "auto")
    cfg.gradient_tolerance = parse_real("run.gradient_tolerance", *v);
  if (auto v = r.get("run.linesearch_tolerance"))
    cfg.linesearch_tolerance = parse_real("run.linesearch_tolerance", *v);
  if (auto v = r.get("run.selector")) {
    spec.selector = lower_trim(*v);
    if (spec.selector != "argmax" && spec.selector != "first_admissible")
      throw SpecError(fmt::format("run.selector: unknown selector '{}'", spec.selector));
  }

  // [experiment]
  if (auto v = r.get("experiment.variants")) {
    std::vector<std::string> names;
    boost::algorithm::split(names, *v, boost::algorithm::is_any_of(", "), boost::algorithm::token_compress_on);
    spec.variants.clear();
    for (auto& n : names) {
      boost::algorithm::trim(n);
      if (n.empty()) continue;
      try {
        spec.variants.push_back(parse_variant(n));
      } catch (const std::invalid_argument& e) {
        throw SpecError(fmt::format("experiment.variants: {}", e.what()));
      }
    }
    if (spec.variants.empty()) throw SpecError("experiment.variants: no variants listed");
  }
  if (auto v = r.get("experiment.mu_grid")) spec.mu_grid = parse_list("experiment.mu_grid", *v);
  if (auto v = r.get("experiment.outputs")) spec.outputs = resolve(base_dir, *v);
  if (auto v = r.get("experiment.seed")) spec.seed = parse_count("experiment.seed", *v);
  if (auto v = r.get("experiment.k_max")) spec.k_max = parse_count("experiment.k_max", *v);
  if (auto v = r.get("experiment.estimate_samples"))
    spec.estimate_samples = parse_count("experiment.estimate_samples", *v);
  if (auto v = r.get("experiment.svg")) spec.svg = parse_bool("experiment.svg", *v);
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(fmt::format("cannot open spec file '{}'", path.string()));
  return parse_experiment_spec(in, path.parent_path());
}

namespace {

std::unique_ptr<Objective> make_objective(const ExperimentSpec& spec) {
  const ObjectiveSource& src = spec.objective;
  const std::uint64_t seed = src.seed.value_or(spec.seed);
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw SpecError(fmt::format("cannot open objective file '{}'", src.file.string()));
    try {
      if (src.file_type == "logistic") return std::make_unique<LogisticObjective>(load_logistic(in));
      return std::make_unique<QuadraticObjective>(load_quadratic(in));
    } catch (const std::exception& e) {
      throw SpecError(fmt::format("objective file '{}': {}", src.file.string(), e.what()));
    }
  }
  try {
    if (src.builtin == "quad1d")
      return std::make_unique<QuadraticObjective>(Eigen::MatrixXd::Ones(1, 1), Eigen::VectorXd::Ones(1));
    if (src.builtin == "quadratic")
      return std::make_unique<QuadraticObjective>(make_conditioned_quadratic(src.n, src.condition, seed));
    if (src.builtin == "gaussian_quadratic")
      return std::make_unique<QuadraticObjective>(make_gaussian_quadratic(src.n, seed));
    if (src.builtin == "logistic") return std::make_unique<LogisticObjective>(make_logistic(src.m, src.n, seed));
    if (src.builtin == "linear") return std::make_unique<LinearObjective>(make_linear(src.n, seed));
    if (src.builtin == "power") return std::make_unique<PowerObjective>(make_power(src.n, src.p, seed));
  } catch (const std::invalid_argument& e) {
    throw SpecError(fmt::format("objective '{}': {}", src.builtin, e.what()));
  }
  throw SpecError(fmt::format("unknown builtin objective '{}'", src.builtin));
}

Dictionary make_dictionary(const ExperimentSpec& spec, std::size_t n) {
  const DictionarySource& src = spec.dictionary;
  const std::uint64_t seed = src.seed.value_or(spec.seed + 1);
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw SpecError(fmt::format("cannot open dictionary file '{}'", src.file.string()));
    try {
      return load_dictionary(in);
    } catch (const std::exception& e) {
      throw SpecError(fmt::format("dictionary file '{}': {}", src.file.string(), e.what()));
    }
  }
  try {
    if (src.builtin == "canonical") return canonical_basis(n);
    if (src.builtin == "random_unit") return random_unit(n, src.count ? src.count : 2 * n, seed);
    if (src.builtin == "union") {
      const std::vector<Dictionary> parts{canonical_basis(n), random_orthonormal_basis(n, seed)};
      return union_of_bases(parts);
    }
  } catch (const std::exception& e) {
    throw SpecError(fmt::format("dictionary '{}': {}", src.builtin, e.what()));
  }
  throw SpecError(fmt::format("unknown builtin dictionary '{}'", src.builtin));
}

}  // namespace

Problem build_problem(const ExperimentSpec& spec) {
  auto objective = make_objective(spec);
  Dictionary dictionary = make_dictionary(spec, objective->dimension());
  if (dictionary.dimension() != objective->dimension())
    throw SpecError(fmt::format("dictionary dimension {} does not match objective dimension {}",
                                dictionary.dimension(), objective->dimension()));

  RunConfig cfg = spec.run_config;
  const auto constants = objective->analytic_constants();
  if (spec.q_auto) cfg.q = constants ? constants->q : 2.0;
  if (spec.alpha_auto && constants && constants->alpha > 0.0) cfg.alpha = constants->alpha;
  if (spec.alpha_auto && (!constants || !(constants->alpha > 0.0))) cfg.alpha = 0.0;  // unresolved
  if (spec.m_zero_auto) cfg.m_zero = constants ? constants->m_zero : std::nullopt;
  if (spec.us_radius_auto) cfg.us_radius = constants ? constants->radius : std::nullopt;

  Problem p{std::move(objective), std::move(dictionary), cfg,
            spec.selector == "first_admissible" ? first_admissible_selector() : argmax_selector(), std::nullopt,
            std::nullopt};
  p.minimum = p.objective->minimum();
  if (p.minimum) {
    try {
      p.xbar_l1 = l1_seminorm_upper_bound(p.dictionary, p.minimum->point);
    } catch (const std::domain_error&) {
      p.xbar_l1.reset();
    }
  }
  return p;
}

namespace {

RunConfig config_for(const Problem& p, Variant v) {
  RunConfig cfg = p.config;
  cfg.variant = v;
  return cfg;
}

std::optional<BoundInputs> bound_inputs(const Problem& p, const RunConfig& cfg, double initial_value) {
  if (!p.minimum || !p.xbar_l1) return std::nullopt;
  const double gap = initial_value - p.minimum->value;
  if (!(*p.xbar_l1 > 0.0) || !(gap > 0.0)) return std::nullopt;
  return bound_inputs_for(cfg, *p.xbar_l1, gap);
}

std::optional<double> slope_of(const RunTrace& trace, std::string& note) {
  const std::size_t steps = trace.records.size();
  if (steps < 3 || !trace.minimum_value) {
    note = steps < 3 ? "too few steps" : "minimum unknown";
    return std::nullopt;
  }
  const std::size_t k_min = std::max<std::size_t>(2, steps / 10);
  try {
    return fit_rate(trace, k_min, steps);
  } catch (const RateFitError& e) {
    note = e.what();
  } catch (const std::invalid_argument& e) {
    note = e.what();
  }
  return std::nullopt;
}

std::string real(double v) { return fmt::format("{:.17g}", v); }

int report_input_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  return kInputError;
}

void write_outputs(const std::filesystem::path& dir, const std::vector<std::pair<std::string, std::string>>& files) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, content] : files) write_file_atomic(dir / name, content);
}

}  // namespace

namespace {

int cmd_run_impl(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  Problem problem = build_problem(spec);
  for (Variant v : spec.variants) {
    try {
      config_for(problem, v).validate();
    } catch (const ConfigError& e) {
      return report_input_error(err, e);
    }
  }

  std::vector<std::pair<std::string, std::string>> files;
  std::vector<PlotSeries> plot;
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  bool all_pass = true;
  std::size_t longest = 0;

  for (std::size_t vi = 0; vi < spec.variants.size(); ++vi) {
    const Variant v = spec.variants[vi];
    const RunConfig cfg = config_for(problem, v);
    const RunTrace trace = run(*problem.objective, problem.dictionary, cfg,
                               v == Variant::weak_rescaled ? problem.selector : argmax_selector());
    const std::string name(to_string(v));

    RunSummary s;
    s.variant = v;
    s.termination = std::string(to_string(trace.termination));
    s.message = trace.message;
    s.steps = trace.records.size();
    s.initial_value = trace.initial_value;
    s.final_value = trace.records.empty() ? trace.initial_value : trace.records.back().objective_value;
    if (trace.minimum_value) s.final_error = s.final_value - *trace.minimum_value;
    s.fitted_slope = slope_of(trace, s.slope_note);

    if (v == Variant::no_rescale_baseline) {
      s.bound_check = "not_applicable";
    } else if (auto inputs = bound_inputs(problem, cfg, trace.initial_value)) {
      const TraceReport report = verify_trace(trace, *inputs, cfg, problem.minimum->value);
      s.bound_check = report.passed ? "pass" : "fail";
      s.first_failure = report.first_failure;
      all_pass = all_pass && report.passed;
    } else {
      s.bound_check = "skipped";
    }

    files.emplace_back("trace_" + name + ".csv", trace_csv(trace));
    files.emplace_back("summary_" + name + ".json", summary_json(s));
    if (!trace.message.empty()) err << name << ": " << trace.message << '\n';
    out << fmt::format("{}: termination={} steps={} final_value={} final_error={} bound_check={}\n", name,
                       s.termination, s.steps, real(s.final_value), s.final_error ? real(*s.final_error) : "unknown",
                       s.bound_check);

    PlotSeries series{name, colors[vi % 4], {}, false};
    for (const auto& r : trace.records)
      if (r.error_k) series.points.emplace_back(static_cast<double>(r.k), *r.error_k);
    plot.push_back(std::move(series));
    longest = std::max(longest, trace.records.size());
  }

  if (spec.svg && problem.minimum) {
    RunConfig cfg = config_for(problem, Variant::rescaled);
    if (auto inputs = bound_inputs(problem, cfg, problem.objective->value(Vector::zeros(problem.objective->dimension())));
        inputs && longest >= 2) {
      PlotSeries bound{"rescaled bound", "#555555", {}, true};
      for (std::size_t k = 2; k <= longest; ++k)
        bound.points.emplace_back(static_cast<double>(k), theoretical_bound_rpga(*inputs, k));
      plot.push_back(std::move(bound));
    }
    files.emplace_back("convergence.svg", loglog_svg("error e_k versus k", plot));
  }

  write_outputs(spec.outputs, files);
  return all_pass ? kSuccess : kVerificationFailure;
}

int cmd_bound_impl(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  Problem problem = build_problem(spec);
  Variant variant = Variant::rescaled;
  for (Variant v : spec.variants) {
    if (v != Variant::no_rescale_baseline) {
      variant = v;
      break;
    }
  }
  RunConfig cfg = config_for(problem, variant);
  cfg.max_iterations = spec.k_max;
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    return report_input_error(err, e);
  }

  const std::string header = "k,observed_error,rpga_bound,wrpga_bound\n";
  if (spec.k_max < 2) {
    write_outputs(spec.outputs, {{"bound.csv", header}});
    out << "status: skipped (bounds are defined for k >= 2)\n";
    return kSuccess;
  }

  const RunTrace trace = run(*problem.objective, problem.dictionary, cfg,
                             variant == Variant::weak_rescaled ? problem.selector : argmax_selector());
  const auto inputs = bound_inputs(problem, cfg, trace.initial_value);
  if (!inputs) {
    write_outputs(spec.outputs, {{"bound.csv", header}});
    out << "status: skipped (minimizer or its l1 semi-norm unknown)\n";
    return kSuccess;
  }

  const std::size_t rows = trace.records.size();
  const bool constant_mu = std::all_of(inputs->mu.begin(), inputs->mu.end(),
                                       [&](double m) { return m == inputs->mu.front(); });
  const std::vector<double> weak_bounds = rows >= 2 ? theoretical_bound_wrpga_series(*inputs, rows) : std::vector<double>{};
  std::string csv = header;
  bool pass = true;
  std::size_t violations = 0;
  for (std::size_t k = 2; k <= rows; ++k) {
    const double observed = *trace.records[k - 1].error_k;
    const double weak_bound = weak_bounds[k - 2];
    std::optional<double> rpga_bound;
    if (constant_mu) rpga_bound = theoretical_bound_rpga(*inputs, k);
    const double own = variant == Variant::weak_rescaled ? weak_bound : *rpga_bound;
    if (observed > own * (1.0 + 1e-9)) {
      pass = false;
      ++violations;
    }
    csv += fmt::format("{},{},{},{}\n", k, real(observed), rpga_bound ? real(*rpga_bound) : "n/a", real(weak_bound));
  }
  write_outputs(spec.outputs, {{"bound.csv", csv}});
  out << fmt::format("variant: {}\nrows: {}\nstatus: {}\n", to_string(variant), rows >= 2 ? rows - 1 : 0,
                     pass ? "pass" : fmt::format("fail ({} violations)", violations));
  return pass ? kSuccess : kVerificationFailure;
}

int cmd_estimate_impl(const ExperimentSpec& spec, std::ostream& out, std::ostream& /*err*/) {
  Problem problem = build_problem(spec);
  const Objective& obj = *problem.objective;
  const double q = problem.config.q;
  const double radius = problem.config.us_radius.value_or(1.0);
  const std::size_t samples = spec.estimate_samples;
  const Vector origin = Vector::zeros(obj.dimension());
  const Vector top = dominant_curvature_direction(obj, origin, 200, spec.seed);
  const std::vector<Vector> extra{top};

  out << fmt::format("objective: {} (n = {})\n", obj.name(), obj.dimension());
  if (auto c = obj.analytic_constants()) {
    out << fmt::format("analytic: alpha = {} q = {} M0 = {}\n", real(c->alpha), real(c->q),
                       c->m_zero ? real(*c->m_zero) : "unknown");
  }
  const double alpha_hat = estimate_alpha(obj, q, samples, radius, spec.seed, extra);
  out << fmt::format("alpha_estimate(q = {}, radius = {}): {}\n", real(q), real(radius), real(alpha_hat));
  const auto m0 = estimate_m_zero(obj, std::min<std::size_t>(samples, 2000), spec.seed);
  if (m0) out << fmt::format("m_zero_estimate: {}\n", real(*m0));
  else out << "m_zero_estimate: unknown (level set unbounded)\n";

  bool ok = true;
  out << "u,rho_estimate,rho_uniform_estimate,rho_analytic,lower_sandwich,upper_sandwich\n";
  for (double u : {1e-2, 1e-1, 1.0}) {
    const ModulusSandwich s = check_modulus_sandwich(obj, u, samples, spec.seed, extra);
    ok = ok && s.lower_holds && s.upper_holds.value_or(true);
    out << fmt::format("{},{},{},{},{},{}\n", real(u), real(s.rho), real(s.rho_uniform),
                       s.rho_analytic ? real(*s.rho_analytic) : "unknown", s.lower_holds ? "pass" : "fail",
                       s.upper_holds ? (*s.upper_holds ? "pass" : "fail") : "skipped");
  }
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_mu_scan_impl(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.mu_grid.empty()) {
    err << "error: experiment.mu_grid is empty\n";
    return kInputError;
  }
  Problem problem = build_problem(spec);
  RunConfig base = config_for(problem, Variant::rescaled);
  base.max_iterations = spec.k_max;

  bool admissible = true;
  for (double mu : spec.mu_grid) {
    RunConfig cfg = base;
    cfg.mu_sequence = {mu};
    try {
      cfg.validate();
    } catch (const ConfigError& e) {
      err << fmt::format("error: mu grid entry {}: {}\n", real(mu), e.what());
      admissible = false;
    }
  }
  if (!admissible) return kInputError;

  struct Row {
    double mu;
    double final_value;
    std::optional<double> final_error;
    std::optional<double> slope;
  };
  std::vector<Row> rows;
  for (double mu : spec.mu_grid) {
    RunConfig cfg = base;
    cfg.mu_sequence = {mu};
    const RunTrace trace = run(*problem.objective, problem.dictionary, cfg);
    Row row{mu, trace.records.empty() ? trace.initial_value : trace.records.back().objective_value, std::nullopt,
            std::nullopt};
    if (trace.minimum_value) row.final_error = row.final_value - *trace.minimum_value;
    std::string note;
    row.slope = slope_of(trace, note);
    rows.push_back(row);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].final_value < rows[best].final_value) best = i;

  std::string csv = "mu,final_error,fitted_slope,best\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    csv += fmt::format("{},{},{},{}\n", real(rows[i].mu), rows[i].final_error ? real(*rows[i].final_error) : "unknown",
                       rows[i].slope ? real(*rows[i].slope) : "n/a", i == best ? 1 : 0);
  }
  write_outputs(spec.outputs, {{"mu_scan.csv", csv}});
  out << fmt::format("best mu: {} (final value {})\n", real(rows[best].mu), real(rows[best].final_value));
  return kSuccess;
}

template <typename Impl>
int guarded(Impl impl, const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    return impl(spec, out, err);
  } catch (const SpecError& e) {
    return report_input_error(err, e);
  } catch (const ConfigError& e) {
    return report_input_error(err, e);
  }
}

}  // namespace

int cmd_run(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(cmd_run_impl, spec, out, err);
}

int cmd_bound(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(cmd_bound_impl, spec, out, err);
}

int cmd_estimate(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(cmd_estimate_impl, spec, out, err);
}

int cmd_mu_scan(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(cmd_mu_scan_impl, spec, out, err);
}

}  // namespace rpga
