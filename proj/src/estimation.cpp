#include "evt/estimation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

namespace evt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double mean_of(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

bool all_equal(std::span<const double> xs) {
  return std::all_of(xs.begin(), xs.end(),
                     [&](double x) { return x == xs.front(); });
}

}  // namespace

const char* to_string(FitMethod method) {
  return method == FitMethod::pwm ? "pwm" : "mle";
}

FitMethod parse_fit_method(const std::string& name) {
  if (name == "pwm") return FitMethod::pwm;
  if (name == "mle") return FitMethod::mle;
  throw ArgumentError("unknown fit method '" + name + "'");
}

double GpdFit::fitted_mean() const {
  return params.shape < 1.0 ? params.scale / (1.0 - params.shape) : kInf;
}

const ThresholdCandidate& ThresholdReport::selected_candidate() const {
  if (!selected) {
    throw EstimationError("ThresholdReport: no threshold was selected");
  }
  return candidates[*selected];
}

GpdFit fit_gpd_pwm(const ExcessSample& sample) {
  const auto& y = sample.excesses;
  std::size_t n = y.size();
  if (n < 2) {
    throw ArgumentError("fit_gpd_pwm: need at least 2 excesses");
  }
  if (all_equal(y)) {
    throw EstimationError("fit_gpd_pwm: degenerate sample, all excesses equal");
  }

  std::vector<double> sorted(y.begin(), y.end());
  std::sort(sorted.begin(), sorted.end());

  // a0 is the plain mean; a1 weights the ascending order statistics by
  // 1 - p_i with plotting positions p_i = (i - 0.35)/n.
  double a0 = 0.0, a1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double p = (static_cast<double>(i + 1) - 0.35) / static_cast<double>(n);
    a0 += sorted[i];
    a1 += sorted[i] * (1.0 - p);
  }
  a0 /= static_cast<double>(n);
  a1 /= static_cast<double>(n);

  double d = a0 - 2.0 * a1;
  if (!(d > 0.0)) {
    throw EstimationError(
        "fit_gpd_pwm: degenerate moments, a0 - 2*a1 <= 0 (tail too heavy for "
        "the estimator)");
  }
  double shape = -(a0 / d - 2.0);
  double scale = 2.0 * a0 * a1 / d;

  GpdFit fit;
  fit.params = GpdParams(shape, scale);
  fit.threshold = sample.threshold;
  fit.zeta = sample.exceedance_fraction();
  fit.method = FitMethod::pwm;
  fit.n_exceed = n;
  return fit;
}

double gpd_log_likelihood(const GpdParams& p, std::span<const double> excesses) {
  double n = static_cast<double>(excesses.size());
  if (std::abs(p.shape) < kShapeEpsilon) {
    double sum = 0.0;
    for (double y : excesses) sum += y;
    return -n * std::log(p.scale) - sum / p.scale;
  }
  double sum = 0.0;
  for (double y : excesses) {
    double t = p.shape * y / p.scale;
    if (t <= -1.0) return -kInf;  // outside the feasible region
    sum += std::log1p(t);
  }
  return -n * std::log(p.scale) - (1.0 + 1.0 / p.shape) * sum;
}

namespace {

// Negative log-likelihood over (shape, log scale); +inf when infeasible.
double mle_objective(const std::array<double, 2>& v,
                     std::span<const double> excesses) {
  double ll = gpd_log_likelihood(GpdParams(v[0], std::exp(v[1])), excesses);
  return std::isfinite(ll) ? -ll : kInf;
}

struct SimplexResult {
  std::array<double, 2> best;
  double value;
  bool converged;
};

// Nelder-Mead in two dimensions: reflection 1, expansion 2, contraction 0.5,
// shrink 0.5. Stops when the simplex diameter falls below `tol`.
SimplexResult nelder_mead(std::array<double, 2> start,
                          std::span<const double> excesses, double tol,
                          std::size_t max_iter) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> xs{start, Point{start[0] + 0.1, start[1]},
                          Point{start[0], start[1] + 0.1}};
  std::array<double, 3> fs;
  for (std::size_t i = 0; i < 3; ++i) fs[i] = mle_objective(xs[i], excesses);

  auto order = [&] {
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    std::array<Point, 3> x2{xs[idx[0]], xs[idx[1]], xs[idx[2]]};
    std::array<double, 3> f2{fs[idx[0]], fs[idx[1]], fs[idx[2]]};
    xs = x2;
    fs = f2;
  };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        d = std::max(d, std::hypot(xs[i][0] - xs[j][0], xs[i][1] - xs[j][1]));
      }
    }
    return d;
  };

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    order();
    if (diameter() < tol) {
      return {xs[0], fs[0], true};
    }
    Point centroid{(xs[0][0] + xs[1][0]) / 2.0, (xs[0][1] + xs[1][1]) / 2.0};
    auto at = [&](double coef) {
      return Point{centroid[0] + coef * (centroid[0] - xs[2][0]),
                   centroid[1] + coef * (centroid[1] - xs[2][1])};
    };

    Point refl = at(1.0);
    double f_refl = mle_objective(refl, excesses);
    if (f_refl < fs[0]) {
      Point expa = at(2.0);
      double f_expa = mle_objective(expa, excesses);
      if (f_expa < f_refl) {
        xs[2] = expa;
        fs[2] = f_expa;
      } else {
        xs[2] = refl;
        fs[2] = f_refl;
      }
      continue;
    }
    if (f_refl < fs[1]) {
      xs[2] = refl;
      fs[2] = f_refl;
      continue;
    }
    Point contr = at(f_refl < fs[2] ? 0.5 : -0.5);
    double f_contr = mle_objective(contr, excesses);
    if (f_contr < std::min(f_refl, fs[2])) {
      xs[2] = contr;
      fs[2] = f_contr;
      continue;
    }
    for (std::size_t i = 1; i < 3; ++i) {  // shrink toward the best vertex
      xs[i] = Point{xs[0][0] + 0.5 * (xs[i][0] - xs[0][0]),
                    xs[0][1] + 0.5 * (xs[i][1] - xs[0][1])};
      fs[i] = mle_objective(xs[i], excesses);
    }
  }
  order();
  return {xs[0], fs[0], false};
}

}  // namespace

GpdFit fit_gpd_mle(const ExcessSample& sample, std::optional<GpdParams> init) {
  const auto& y = sample.excesses;
  if (y.size() < 5) {
    throw ArgumentError(
        "fit_gpd_mle: need at least 5 excesses (use pwm for smaller samples)");
  }
  if (all_equal(y)) {
    throw EstimationError("fit_gpd_mle: degenerate sample, all excesses equal");
  }

  GpdParams start = [&] {
    if (init) return *init;
    try {
      return fit_gpd_pwm(sample).params;
    } catch (const EstimationError&) {
      return GpdParams(0.0, mean_of(y));  // always feasible
    }
  }();
  if (!std::isfinite(gpd_log_likelihood(start, y))) {
    start = GpdParams(0.0, mean_of(y));
  }

  auto result = nelder_mead({start.shape, std::log(start.scale)}, y, 1e-10, 2000);
  if (!std::isfinite(result.value) || !std::isfinite(std::exp(result.best[1]))) {
    throw EstimationError("fit_gpd_mle: no feasible likelihood value found");
  }
  GpdFit fit;
  fit.params = GpdParams(result.best[0], std::exp(result.best[1]));
  fit.threshold = sample.threshold;
  fit.zeta = sample.exceedance_fraction();
  fit.method = FitMethod::mle;
  fit.n_exceed = y.size();
  fit.log_likelihood = -result.value;
  if (!result.converged) {
    throw ConvergenceError(
        "fit_gpd_mle: simplex did not reach tolerance within 2000 iterations",
        fit);
  }
  return fit;
}

GpdFit fit_gpd(const ExcessSample& sample, FitMethod method) {
  return method == FitMethod::pwm ? fit_gpd_pwm(sample) : fit_gpd_mle(sample);
}

GevFit fit_gev_pwm(std::span<const double> maxima, std::size_t block_len) {
  if (maxima.size() < 3) {
    throw ArgumentError("fit_gev_pwm: need at least 3 block maxima");
  }
  if (block_len == 0) {
    throw ArgumentError("fit_gev_pwm: block_len must be positive");
  }
  std::size_t n = maxima.size();
  std::vector<double> x(maxima.begin(), maxima.end());
  std::sort(x.begin(), x.end());

  // Sample probability-weighted moments b0, b1, b2 on ascending order
  // statistics: b_r = (1/n) sum_i x_(i) * prod_{j=1..r} (i-j)/(n-j).
  double b0 = 0.0, b1 = 0.0, b2 = 0.0;
  double dn = static_cast<double>(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    double i = static_cast<double>(idx + 1);
    b0 += x[idx];
    b1 += x[idx] * (i - 1.0) / (dn - 1.0);
    b2 += x[idx] * (i - 1.0) * (i - 2.0) / ((dn - 1.0) * (dn - 2.0));
  }
  b0 /= dn;
  b1 /= dn;
  b2 /= dn;

  double denom = 3.0 * b2 - b0;
  if (denom == 0.0) {
    throw EstimationError("fit_gev_pwm: degenerate moments, 3*b2 - b0 = 0");
  }
  double c = (2.0 * b1 - b0) / denom - std::log(2.0) / std::log(3.0);
  double k = 7.8590 * c + 2.9554 * c * c;

  double alpha, mu;
  if (std::abs(k) < kShapeEpsilon) {
    // Gumbel limit of the k-parameterized formulas.
    alpha = (2.0 * b1 - b0) / std::log(2.0);
    mu = b0 - 0.57721566490153286 * alpha;
    k = 0.0;
  } else {
    if (k <= -1.0) {
      throw EstimationError("fit_gev_pwm: shape estimate out of range, k <= -1");
    }
    double g = std::tgamma(1.0 + k);
    if (!std::isfinite(g)) {
      throw EstimationError("fit_gev_pwm: gamma overflow at 1 + k");
    }
    alpha = k * (2.0 * b1 - b0) / (g * (1.0 - std::pow(2.0, -k)));
    mu = b0 + alpha * (g - 1.0) / k;
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha) || !std::isfinite(mu)) {
    throw EstimationError("fit_gev_pwm: estimator produced an invalid scale");
  }

  GevFit fit;
  fit.params = GevParams(mu, alpha, -k);
  fit.block_len = block_len;
  fit.n_blocks = n;
  fit.method = FitMethod::pwm;
  return fit;
}

NormalParams fit_normal(std::span<const double> sample) {
  if (sample.size() < 2) {
    throw ArgumentError("fit_normal: need at least 2 observations");
  }
  double m = mean_of(sample);
  double ss = 0.0;
  for (double x : sample) ss += (x - m) * (x - m);
  double var = ss / static_cast<double>(sample.size() - 1);
  if (!(var > 0.0)) {
    throw EstimationError("fit_normal: zero variance");
  }
  return NormalParams(m, std::sqrt(var));
}

std::vector<double> default_threshold_grid() {
  return {0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
}

double sample_quantile(std::span<const double> sample, double probability) {
  if (sample.empty()) {
    throw ArgumentError("sample_quantile: empty sample");
  }
  if (!(probability >= 0.0) || probability > 1.0) {
    throw ArgumentError("sample_quantile: probability must lie in [0, 1]");
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  double h = probability * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  double w = h - static_cast<double>(lo);
  return sorted[lo] + w * (sorted[lo + 1] - sorted[lo]);
}

ThresholdReport select_threshold(const ArrivalSeries& series,
                                 std::span<const double> quantile_grid,
                                 std::size_t n_min, double stability_tol) {
  if (quantile_grid.empty()) {
    throw ArgumentError("select_threshold: empty quantile grid");
  }
  for (std::size_t i = 0; i < quantile_grid.size(); ++i) {
    double p = quantile_grid[i];
    if (!(p > 0.0) || !(p < 1.0)) {
      throw ArgumentError("select_threshold: grid probabilities must lie in (0, 1)");
    }
    if (i > 0 && p <= quantile_grid[i - 1]) {
      throw ArgumentError("select_threshold: grid must be strictly increasing");
    }
  }
  if (!(stability_tol > 0.0)) {
    throw ArgumentError("select_threshold: stability_tol must be > 0");
  }

  ThresholdReport report;
  report.n_min = n_min;
  report.stability_tol = stability_tol;

  for (double p : quantile_grid) {
    double u = sample_quantile(series.values, p);
    if (!report.candidates.empty() && u <= report.candidates.back().threshold) {
      report.rejected.emplace_back(p, "tied sample quantile");
      continue;
    }
    std::size_t n_exceed = static_cast<std::size_t>(std::count_if(
        series.values.begin(), series.values.end(),
        [&](double x) { return x > u; }));
    if (n_exceed < std::max<std::size_t>(n_min, 1)) {
      report.rejected.emplace_back(p, "fewer than n_min exceedances");
      continue;
    }

    ThresholdCandidate cand;
    cand.probability = p;
    cand.threshold = u;
    cand.n_exceed = n_exceed;
    ExcessSample excess = excesses_over(series, u);
    cand.empirical_mean_excess = mean_of(excess.excesses);
    try {
      cand.fit = fit_gpd_pwm(excess);
    } catch (const Error& e) {
      cand.note = e.what();
    }
    report.candidates.push_back(std::move(cand));
  }

  // Smallest candidate whose shape stays within stability_tol of every
  // higher fitted candidate. At least one higher comparator is required;
  // stability cannot be demonstrated from a candidate with nothing above it.
  const auto& cands = report.candidates;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!cands[i].fit) continue;
    bool has_comparator = false;
    bool stable = true;
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (!cands[j].fit) continue;
      has_comparator = true;
      if (std::abs(cands[j].fit->params.shape - cands[i].fit->params.shape) >=
          stability_tol) {
        stable = false;
        break;
      }
    }
    if (has_comparator && stable) {
      report.selected = i;
      break;
    }
  }
  if (!report.selected) {
    throw NoStableThresholdError(
        "select_threshold: no candidate demonstrated shape stability",
        std::move(report));
  }
  return report;
}

}  // namespace evt
