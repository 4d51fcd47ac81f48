// evtool: peaks-over-threshold extreme value analysis of arrival streams.
//
// Subcommands: fit, compare, gof, bootstrap, predict, select-threshold.
// Every report is a line-oriented key/value block with embedded CSV tables,
// written so a run is byte-reproducible from its recorded parameters.

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evt/bootstrap.hpp"
#include "evt/distributions.hpp"
#include "evt/errors.hpp"
#include "evt/estimation.hpp"
#include "evt/gof.hpp"
#include "evt/risk.hpp"
#include "evt/rng.hpp"
#include "evt/series.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string join_nums(const std::vector<double>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += fmt_num(vs[i]);
  }
  return out;
}

// Notes may carry commas; keep embedded CSV tables one-field-per-comma.
std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

class Report {
 public:
  void kv(const std::string& key, const std::string& value) {
    text_ += key + ": " + value + "\n";
  }
  void kv(const std::string& key, const char* value) {
    kv(key, std::string(value));
  }
  void kv(const std::string& key, double value) { kv(key, fmt_num(value)); }
  template <typename T>
    requires std::is_integral_v<T>
  void kv(const std::string& key, T value) {
    kv(key, std::to_string(value));
  }
  void table(const std::string& name, const std::string& header,
             const std::vector<std::string>& rows) {
    text_ += "[table " + name + "]\n" + header + "\n";
    for (const auto& row : rows) text_ += row + "\n";
    text_ += "[end]\n";
  }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

std::string digest_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw evt::ArgumentError("cannot open '" + path.string() + "'");
  }
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016" PRIx64, h);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw evt::ArgumentError("cannot write '" + path.string() + "'");
  }
  out << text;
}

void deliver_report(const Report& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.text();
  } else {
    write_file(out_path, report.text());
  }
}

// Sidecar table path: report stem + suffix, or the suffix alone when the
// report goes to stdout.
std::string sidecar_path(const std::string& out_path, const char* suffix) {
  if (out_path.empty()) return std::string(suffix + 1);  // drop the dot
  return std::filesystem::path(out_path).replace_extension().string() + suffix;
}

// ------------------------------------------------------------ shared options

struct CommonArgs {
  std::string input;
  std::string format = "plain";
  std::string out;
  std::optional<double> threshold;
  bool auto_threshold = false;
  std::string method = "pwm";
};

void add_input_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--input", args.input, "input data file")->required();
  cmd->add_option("--format", args.format, "input format: plain|csv")
      ->check(CLI::IsMember({"plain", "csv"}));
  cmd->add_option("--out", args.out,
                  "report file (stdout when omitted; sidecar tables derive "
                  "their names from this path)");
}

void add_threshold_flags(CLI::App* cmd, CommonArgs& args) {
  auto* t = cmd->add_option("--threshold", args.threshold,
                            "fixed POT threshold u");
  cmd->add_flag("--auto-threshold", args.auto_threshold,
                "select u by shape stability over the default quantile grid");
  t->excludes("--auto-threshold");
  cmd->add_option("--method", args.method, "GPD estimator: pwm|mle")
      ->check(CLI::IsMember({"pwm", "mle"}));
}

struct LoadedInput {
  evt::ArrivalSeries series;
  std::string digest;
};

LoadedInput load_input(const CommonArgs& args) {
  LoadedInput in;
  in.digest = digest_file(args.input);
  in.series = evt::load_series(args.input, evt::parse_series_format(args.format));
  return in;
}

void emit_input_block(Report& r, const CommonArgs& args, const LoadedInput& in,
                      const std::string& command) {
  r.kv("report", "evtool/" + command);
  r.kv("tool_version", kVersion);
  r.kv("command", command);
  r.kv("input", args.input);
  r.kv("format", args.format);
  r.kv("input_digest", in.digest);
  r.kv("n_values", in.series.size());
}

struct ResolvedThreshold {
  double value = 0.0;
  bool auto_mode = false;
  std::optional<double> selected_probability;
};

ResolvedThreshold resolve_threshold(const CommonArgs& args,
                                    const evt::ArrivalSeries& series) {
  if (args.threshold.has_value() == args.auto_threshold) {
    throw evt::ArgumentError(
        "exactly one of --threshold or --auto-threshold is required");
  }
  ResolvedThreshold out;
  if (args.threshold) {
    out.value = *args.threshold;
    return out;
  }
  auto grid = evt::default_threshold_grid();
  auto report = evt::select_threshold(series, grid);
  const auto& chosen = report.selected_candidate();
  out.value = chosen.threshold;
  out.auto_mode = true;
  out.selected_probability = chosen.probability;
  return out;
}

void emit_threshold_block(Report& r, const ResolvedThreshold& u) {
  r.kv("threshold_mode", u.auto_mode ? "auto" : "fixed");
  if (u.selected_probability) {
    r.kv("selected_probability", *u.selected_probability);
  }
  r.kv("threshold", u.value);
}

void emit_fit_block(Report& r, const evt::GpdFit& fit,
                    double empirical_mean_excess) {
  r.kv("method", evt::to_string(fit.method));
  r.kv("n_exceed", fit.n_exceed);
  r.kv("zeta_u", fit.zeta);
  r.kv("xi", fit.params.shape);
  r.kv("beta", fit.params.scale);
  r.kv("fitted_mean_excess", fit.fitted_mean());
  r.kv("empirical_mean_excess", empirical_mean_excess);
  if (fit.log_likelihood) r.kv("log_likelihood", *fit.log_likelihood);
}

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

// ------------------------------------------------------------- subcommands

int cmd_fit(const CommonArgs& args) {
  LoadedInput in = load_input(args);
  ResolvedThreshold u = resolve_threshold(args, in.series);
  evt::ExcessSample excess = evt::excesses_over(in.series, u.value);
  evt::GpdFit fit = evt::fit_gpd(excess, evt::parse_fit_method(args.method));

  Report r;
  emit_input_block(r, args, in, "fit");
  emit_threshold_block(r, u);
  r.kv("n_total", excess.n_total);
  emit_fit_block(r, fit, mean_of(excess.excesses));
  deliver_report(r, args.out);
  return 0;
}

struct CompareArgs {
  CommonArgs common;
  std::size_t block_len = 3;
  std::size_t grid_points = 200;
  std::string curves;
};

int cmd_compare(const CompareArgs& args) {
  LoadedInput in = load_input(args.common);
  ResolvedThreshold u = resolve_threshold(args.common, in.series);
  evt::ExcessSample excess = evt::excesses_over(in.series, u.value);

  // The common comparison sample: the exceedance values themselves. Each
  // model's CDF is laid over their ECDF, which is where the models disagree.
  std::vector<double> tail_obs;
  for (double y : excess.excesses) tail_obs.push_back(u.value + y);
  std::sort(tail_obs.begin(), tail_obs.end());
  evt::StepFunction tail_ecdf = evt::ecdf(tail_obs);

  Report r;
  emit_input_block(r, args.common, in, "compare");
  emit_threshold_block(r, u);
  r.kv("n_total", excess.n_total);
  r.kv("block_len", args.block_len);
  r.kv("grid_points", args.grid_points);

  std::optional<evt::GpdFit> gpd;
  std::optional<evt::GevFit> gev;
  std::optional<evt::NormalParams> normal;
  try {
    gpd = evt::fit_gpd(excess, evt::parse_fit_method(args.common.method));
    emit_fit_block(r, *gpd, mean_of(excess.excesses));
  } catch (const evt::Error& e) {
    r.kv("gpd_error", e.what());
  }
  try {
    auto maxima = evt::block_maxima(in.series, args.block_len);
    gev = evt::fit_gev_pwm(maxima, args.block_len);
    r.kv("n_blocks", gev->n_blocks);
    r.kv("gev_mu", gev->params.location);
    r.kv("gev_sigma", gev->params.scale);
    r.kv("gev_xi", gev->params.shape);
  } catch (const evt::Error& e) {
    r.kv("gev_error", e.what());
  }
  try {
    normal = evt::fit_normal(in.series.values);
    r.kv("normal_mean", normal->mean);
    r.kv("normal_sd", normal->stddev);
  } catch (const evt::Error& e) {
    r.kv("normal_error", e.what());
  }
  if (!gpd && !gev && !normal) {
    deliver_report(r, args.common.out);
    throw evt::EstimationError("compare: every model arm failed");
  }

  auto gpd_curve = [&](double x) { return evt::gpd_cdf(gpd->params, x - u.value); };
  auto gev_curve = [&](double x) { return evt::gev_cdf(gev->params, x); };
  auto normal_curve = [&](double x) { return evt::normal_cdf(*normal, x); };

  if (gpd) r.kv("gpd_gap", evt::supnorm_gap(gpd_curve, tail_obs));
  if (gev) r.kv("gev_gap", evt::supnorm_gap(gev_curve, tail_obs));
  if (normal) r.kv("normal_gap", evt::supnorm_gap(normal_curve, tail_obs));

  // Curve table from min(sample) to the 0.999 quantile of the GPD model
  // (sample max when the GPD arm is down).
  double lo = tail_obs.front();
  double hi = gpd ? u.value + evt::gpd_quantile(gpd->params, 0.999)
                  : tail_obs.back();
  hi = std::max(hi, lo);
  std::string header = "x,ecdf";
  if (gpd) header += ",gpd";
  if (gev) header += ",gev";
  if (normal) header += ",normal";
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < args.grid_points; ++i) {
    double x = lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(args.grid_points - 1);
    std::string row = fmt_num(x) + "," + fmt_num(tail_ecdf(x));
    if (gpd) row += "," + fmt_num(gpd_curve(x));
    if (gev) row += "," + fmt_num(gev_curve(x));
    if (normal) row += "," + fmt_num(normal_curve(x));
    rows.push_back(std::move(row));
  }

  std::string curves_path = args.curves.empty()
                                ? sidecar_path(args.common.out, ".curves.csv")
                                : args.curves;
  std::string curves_text = header + "\n";
  for (const auto& row : rows) curves_text += row + "\n";
  write_file(curves_path, curves_text);
  r.kv("curves_file", curves_path);

  deliver_report(r, args.common.out);
  return 0;
}

struct GofArgs {
  CommonArgs common;
  std::size_t replicates = evt::kDefaultGofReplicates;
  std::uint64_t seed = 0;
};

int cmd_gof(const GofArgs& args) {
  LoadedInput in = load_input(args.common);
  ResolvedThreshold u = resolve_threshold(args.common, in.series);
  evt::ExcessSample excess = evt::excesses_over(in.series, u.value);
  evt::GpdFit fit = evt::fit_gpd(excess, evt::parse_fit_method(args.common.method));
  evt::GofReport gof =
      evt::ad_pvalue_bootstrap(fit, excess, args.replicates, args.seed);

  Report r;
  emit_input_block(r, args.common, in, "gof");
  emit_threshold_block(r, u);
  r.kv("n_total", excess.n_total);
  emit_fit_block(r, fit, mean_of(excess.excesses));
  r.kv("rng", evt::kRngTag);
  r.kv("seed", args.seed);
  r.kv("replicates", gof.b_requested);
  r.kv("b_used", gof.b_used);
  r.kv("model", gof.model);
  r.kv("ad_statistic", gof.ad_statistic);
  r.kv("p_value", gof.p_value);
  r.kv("supnorm_gap", gof.supnorm_gap);
  deliver_report(r, args.common.out);
  return 0;
}

struct BootstrapArgs {
  CommonArgs common;
  std::size_t replicates = evt::kDefaultBootstrapReplicates;
  std::size_t grid_points = evt::kDefaultGridPoints;
  std::uint64_t seed = 0;
  std::vector<double> levels;
  std::string envelope;
  std::string accuracy;
};

int cmd_bootstrap(const BootstrapArgs& args) {
  LoadedInput in = load_input(args.common);
  ResolvedThreshold u = resolve_threshold(args.common, in.series);
  evt::ExcessSample excess = evt::excesses_over(in.series, u.value);
  evt::GpdFit fit = evt::fit_gpd(excess, evt::parse_fit_method(args.common.method));

  evt::BootstrapResult boot =
      evt::parametric_bootstrap(fit, args.replicates, args.seed, args.grid_points);
  evt::EnvelopePair env = evt::envelopes(boot);

  // Default radar levels: nine evenly spaced arrivals from u to the fitted
  // 0.99 excess quantile above it.
  std::vector<double> levels = args.levels;
  if (levels.empty()) {
    double top = evt::gpd_quantile(fit.params, 0.99);
    for (int j = 0; j <= 8; ++j) {
      levels.push_back(u.value + top * static_cast<double>(j) / 8.0);
    }
  }
  evt::AccuracyGrid grid = evt::accuracy_grid(fit, env, excess, levels);

  Report r;
  emit_input_block(r, args.common, in, "bootstrap");
  emit_threshold_block(r, u);
  r.kv("n_total", excess.n_total);
  emit_fit_block(r, fit, mean_of(excess.excesses));
  r.kv("rng", evt::kRngTag);
  r.kv("seed", args.seed);
  r.kv("replicates", args.replicates);
  r.kv("replicates_used", boot.replicates.size());
  r.kv("redraws", boot.redraws);
  r.kv("grid_points", boot.grid.size());
  r.kv("degenerate_envelopes", env.degenerate ? "yes" : "no");
  r.kv("conservative_index", env.conservative_index);
  r.kv("conservative_xi", env.conservative_params.shape);
  r.kv("conservative_beta", env.conservative_params.scale);
  r.kv("nonconservative_index", env.nonconservative_index);
  r.kv("nonconservative_xi", env.nonconservative_params.shape);
  r.kv("nonconservative_beta", env.nonconservative_params.scale);
  r.kv("levels", join_nums(levels));

  std::string env_path = args.envelope.empty()
                             ? sidecar_path(args.common.out, ".envelope.csv")
                             : args.envelope;
  std::string env_text = "x,original,conservative,nonconservative\n";
  for (std::size_t g = 0; g < boot.grid.size(); ++g) {
    env_text += fmt_num(u.value + boot.grid[g]) + "," +
                fmt_num(evt::gpd_cdf(fit.params, boot.grid[g])) + "," +
                fmt_num(env.conservative[g]) + "," +
                fmt_num(env.nonconservative[g]) + "\n";
  }
  write_file(env_path, env_text);
  r.kv("envelope_file", env_path);

  std::string acc_path = args.accuracy.empty()
                             ? sidecar_path(args.common.out, ".accuracy.csv")
                             : args.accuracy;
  std::string acc_text =
      "level,ecdf,gpd,conservative,nonconservative,"
      "ecdf_exceed,gpd_exceed,conservative_exceed,nonconservative_exceed\n";
  for (std::size_t i = 0; i < grid.levels.size(); ++i) {
    acc_text += fmt_num(grid.levels[i]) + "," + fmt_num(grid.ecdf[i]) + "," +
                fmt_num(grid.original[i]) + "," + fmt_num(grid.conservative[i]) +
                "," + fmt_num(grid.nonconservative[i]) + "," +
                fmt_num(1.0 - grid.ecdf[i]) + "," + fmt_num(1.0 - grid.original[i]) +
                "," + fmt_num(1.0 - grid.conservative[i]) + "," +
                fmt_num(1.0 - grid.nonconservative[i]) + "\n";
  }
  write_file(acc_path, acc_text);
  r.kv("accuracy_file", acc_path);

  deliver_report(r, args.common.out);
  return 0;
}

struct PredictArgs {
  CommonArgs common;
  std::vector<double> levels;
  std::optional<double> capacity;
};

int cmd_predict(const PredictArgs& args) {
  if (args.levels.empty() && !args.capacity) {
    throw evt::ArgumentError("predict: give --capacity and/or --level");
  }
  LoadedInput in = load_input(args.common);
  ResolvedThreshold u = resolve_threshold(args.common, in.series);
  evt::ExcessSample excess = evt::excesses_over(in.series, u.value);
  evt::GpdFit fit = evt::fit_gpd(excess, evt::parse_fit_method(args.common.method));
  evt::TailModel model = evt::make_tail_model(in.series, fit);

  Report r;
  emit_input_block(r, args.common, in, "predict");
  emit_threshold_block(r, u);
  r.kv("n_total", excess.n_total);
  emit_fit_block(r, fit, mean_of(excess.excesses));
  r.kv("units_note",
       "probabilities are per observation of the loaded series");

  double capacity = args.capacity.value_or(u.value);
  std::vector<std::string> rows;
  if (args.capacity) {
    auto advice = evt::triage_flag(model, *args.capacity, capacity);
    r.kv("capacity", *args.capacity);
    r.kv("capacity_probability", advice.capacity_exceedance.probability);
    r.kv("capacity_source", evt::to_string(advice.capacity_exceedance.source));
    rows.push_back("capacity," + fmt_num(*args.capacity) + "," +
                   evt::to_string(advice.mode) + "," +
                   fmt_num(advice.capacity_exceedance.probability) + "," +
                   evt::to_string(advice.capacity_exceedance.source));
  }
  for (double level : args.levels) {
    auto advice = evt::triage_flag(model, level, capacity);
    rows.push_back("level," + fmt_num(level) + "," + evt::to_string(advice.mode) +
                   "," + fmt_num(advice.arrival_exceedance.probability) + "," +
                   evt::to_string(advice.arrival_exceedance.source));
  }
  r.table("predictions", "kind,level,mode,prob_exceed,source", rows);
  deliver_report(r, args.common.out);
  return 0;
}

struct SelectArgs {
  CommonArgs common;
  std::vector<double> grid;
  std::size_t n_min = evt::kDefaultMinExceedances;
  double stability_tol = evt::kDefaultStabilityTol;
};

void emit_threshold_report(Report& r, const evt::ThresholdReport& report) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const auto& c = report.candidates[i];
    std::string row = fmt_num(c.probability) + "," + fmt_num(c.threshold) + "," +
                      std::to_string(c.n_exceed) + ",";
    if (c.fit) {
      row += fmt_num(c.fit->params.shape) + "," + fmt_num(c.fit->params.scale) +
             "," + fmt_num(c.fit->fitted_mean());
    } else {
      row += ",,";
    }
    row += "," + fmt_num(c.empirical_mean_excess);
    row += report.selected && *report.selected == i ? ",yes" : ",no";
    row += "," + csv_safe(c.note);
    rows.push_back(std::move(row));
  }
  r.table("candidates",
          "probability,threshold,n_exceed,xi,beta,fitted_mean_excess,"
          "empirical_mean_excess,selected,note",
          rows);
  if (!report.rejected.empty()) {
    std::vector<std::string> rej;
    for (const auto& [p, reason] : report.rejected) {
      rej.push_back(fmt_num(p) + "," + csv_safe(reason));
    }
    r.table("rejected", "probability,reason", rej);
  }
}

int cmd_select_threshold(const SelectArgs& args) {
  LoadedInput in = load_input(args.common);
  std::vector<double> grid =
      args.grid.empty() ? evt::default_threshold_grid() : args.grid;

  Report r;
  emit_input_block(r, args.common, in, "select-threshold");
  r.kv("grid", join_nums(grid));
  r.kv("n_min", args.n_min);
  r.kv("stability_tol", args.stability_tol);

  try {
    auto report =
        evt::select_threshold(in.series, grid, args.n_min, args.stability_tol);
    const auto& chosen = report.selected_candidate();
    r.kv("selected_probability", chosen.probability);
    r.kv("selected_threshold", chosen.threshold);
    r.kv("selected_xi", chosen.fit->params.shape);
    r.kv("selected_beta", chosen.fit->params.scale);
    emit_threshold_report(r, report);
    deliver_report(r, args.common.out);
    return 0;
  } catch (const evt::NoStableThresholdError& e) {
    r.kv("selected_threshold", "none");
    emit_threshold_report(r, e.report());
    deliver_report(r, args.common.out);
    throw;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"peaks-over-threshold extreme value analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonArgs fit_args;
  auto* fit_cmd = app.add_subcommand("fit", "fit a GPD excess model");
  add_input_flags(fit_cmd, fit_args);
  add_threshold_flags(fit_cmd, fit_args);

  CompareArgs cmp_args;
  auto* cmp_cmd = app.add_subcommand(
      "compare", "fit GPD, block-maxima GEV and Normal models; emit curves");
  add_input_flags(cmp_cmd, cmp_args.common);
  add_threshold_flags(cmp_cmd, cmp_args.common);
  cmp_cmd->add_option("--block-len", cmp_args.block_len,
                      "block length for the GEV arm");
  cmp_cmd->add_option("--grid-points", cmp_args.grid_points, "curve table rows")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  cmp_cmd->add_option("--curves", cmp_args.curves, "curve table file");

  GofArgs gof_args;
  auto* gof_cmd = app.add_subcommand(
      "gof", "Anderson-Darling statistic with Monte-Carlo p-value");
  add_input_flags(gof_cmd, gof_args.common);
  add_threshold_flags(gof_cmd, gof_args.common);
  gof_cmd->add_option("--replicates", gof_args.replicates,
                      "null replicates for the p-value");
  gof_cmd->add_option("--seed", gof_args.seed, "random seed");

  BootstrapArgs boot_args;
  auto* boot_cmd = app.add_subcommand(
      "bootstrap", "parametric bootstrap envelopes and accuracy grid");
  add_input_flags(boot_cmd, boot_args.common);
  add_threshold_flags(boot_cmd, boot_args.common);
  boot_cmd->add_option("--replicates", boot_args.replicates,
                       "bootstrap replicates");
  boot_cmd->add_option("--grid-points", boot_args.grid_points,
                       "envelope grid points");
  boot_cmd->add_option("--seed", boot_args.seed, "random seed");
  boot_cmd->add_option("--levels", boot_args.levels,
                       "comma-separated arrival levels for the accuracy grid")
      ->delimiter(',');
  boot_cmd->add_option("--envelope", boot_args.envelope, "envelope table file");
  boot_cmd->add_option("--accuracy", boot_args.accuracy, "accuracy table file");

  PredictArgs pred_args;
  auto* pred_cmd = app.add_subcommand(
      "predict", "exceedance probabilities at capacities and levels");
  add_input_flags(pred_cmd, pred_args.common);
  add_threshold_flags(pred_cmd, pred_args.common);
  pred_cmd->add_option("--level", pred_args.levels,
                       "arrival level to query (repeatable)");
  pred_cmd->add_option("--capacity", pred_args.capacity,
                       "shop capacity per observation unit");

  SelectArgs sel_args;
  auto* sel_cmd = app.add_subcommand(
      "select-threshold", "per-candidate fits and shape-stability selection");
  add_input_flags(sel_cmd, sel_args.common);
  sel_cmd->add_option("--grid", sel_args.grid,
                      "comma-separated candidate quantile probabilities")
      ->delimiter(',');
  sel_cmd->add_option("--n-min", sel_args.n_min,
                      "minimum exceedances a candidate must keep");
  sel_cmd->add_option("--stability-tol", sel_args.stability_tol,
                      "shape-stability tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (fit_cmd->parsed()) return cmd_fit(fit_args);
    if (cmp_cmd->parsed()) return cmd_compare(cmp_args);
    if (gof_cmd->parsed()) return cmd_gof(gof_args);
    if (boot_cmd->parsed()) return cmd_bootstrap(boot_args);
    if (pred_cmd->parsed()) return cmd_predict(pred_args);
    if (sel_cmd->parsed()) return cmd_select_threshold(sel_args);
  } catch (const evt::ArgumentError& e) {
    std::cerr << "evtool: error: " << e.what() << "\n";
    return 2;
  } catch (const evt::EstimationError& e) {
    std::cerr << "evtool: statistical failure: " << e.what() << "\n";
    return 3;
  } catch (const evt::BootstrapError& e) {
    std::cerr << "evtool: statistical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "evtool: internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
