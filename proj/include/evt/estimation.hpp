#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evt/distributions.hpp"
#include "evt/errors.hpp"
#include "evt/series.hpp"

namespace evt {

enum class FitMethod { pwm, mle };

const char* to_string(FitMethod method);
FitMethod parse_fit_method(const std::string& name);

/// Fitted GPD excess model plus the threshold bookkeeping needed to use it.
struct GpdFit {
  GpdParams params{0.0, 1.0};
  double threshold = 0.0;
  double zeta = 0.0;  // empirical exceedance fraction, in (0, 1]
  FitMethod method = FitMethod::pwm;
  std::size_t n_exceed = 0;
  std::optional<double> log_likelihood;  // mle only

  /// Mean of the fitted excess distribution, scale/(1 - shape); +inf when
  /// shape >= 1. For PWM fits this equals the sample mean of the excesses
  /// exactly (first-moment matching).
  double fitted_mean() const;
};

struct GevFit {
  GevParams params{0.0, 1.0, 0.0};
  std::size_t block_len = 0;
  std::size_t n_blocks = 0;
  FitMethod method = FitMethod::pwm;
};

struct ThresholdCandidate {
  double probability = 0.0;  // grid probability the candidate came from
  double threshold = 0.0;    // sample quantile at that probability
  std::size_t n_exceed = 0;
  double empirical_mean_excess = 0.0;
  std::optional<GpdFit> fit;  // empty when the per-candidate fit failed
  std::string note;           // failure reason when fit is empty
};

/// Per-candidate fits over a quantile grid plus the shape-stability
/// selection. `candidates` holds the accepted grid entries (strictly
/// increasing thresholds, each leaving >= n_min exceedances); entries
/// filtered before fitting land in `rejected` with a reason.
struct ThresholdReport {
  std::vector<ThresholdCandidate> candidates;
  std::vector<std::pair<double, std::string>> rejected;
  std::optional<std::size_t> selected;  // index into candidates
  std::size_t n_min = 0;
  double stability_tol = 0.0;

  const ThresholdCandidate& selected_candidate() const;
};

/// The simplex search ran out of iterations before meeting tolerance.
/// Carries the best feasible point found.
class ConvergenceError : public EstimationError {
 public:
  ConvergenceError(const std::string& what, GpdFit best)
      : EstimationError(what), best_(std::move(best)) {}
  const GpdFit& best() const { return best_; }

 private:
  GpdFit best_;
};

/// No grid candidate demonstrated shape stability. Carries the full report.
class NoStableThresholdError : public EstimationError {
 public:
  NoStableThresholdError(const std::string& what, ThresholdReport report)
      : EstimationError(what), report_(std::move(report)) {}
  const ThresholdReport& report() const { return report_; }

 private:
  ThresholdReport report_;
};

/// Probability-weighted-moment fit with plotting positions
/// p_i = (i - 0.35)/n. Matches the first moment exactly: the fitted mean
/// scale/(1 - shape) equals the sample mean of the excesses.
GpdFit fit_gpd_pwm(const ExcessSample& sample);

/// Maximum-likelihood fit by Nelder-Mead over (shape, log scale), feasible
/// region {scale > 0, 1 + shape*y/scale > 0 for all excesses}. Initialized
/// from the PWM fit unless `init` is given. Requires n_exceed >= 5.
GpdFit fit_gpd_mle(const ExcessSample& sample,
                   std::optional<GpdParams> init = std::nullopt);

GpdFit fit_gpd(const ExcessSample& sample, FitMethod method);

/// GPD log-likelihood of a set of excesses; -inf outside the feasible
/// region.
double gpd_log_likelihood(const GpdParams& p, std::span<const double> excesses);

/// Hosking-Wallis-Wood probability-weighted-moment fit for block maxima.
/// Needs at least 3 maxima, not all equal.
GevFit fit_gev_pwm(std::span<const double> maxima, std::size_t block_len);

/// Sample mean and standard deviation (n-1 denominator).
NormalParams fit_normal(std::span<const double> sample);

inline constexpr double kDefaultStabilityTol = 0.1;
inline constexpr std::size_t kDefaultMinExceedances = 30;

/// {0.70, 0.75, ..., 0.95}.
std::vector<double> default_threshold_grid();

/// Linear-interpolation sample quantile (the common "type 7" rule).
double sample_quantile(std::span<const double> sample, double probability);

/// Fit a GPD at each grid quantile of the series and select the smallest
/// candidate whose shape estimate stays within stability_tol of every
/// higher candidate's. A candidate needs at least one higher fitted
/// comparator to qualify; when none qualifies the error carries the report.
ThresholdReport select_threshold(const ArrivalSeries& series,
                                 std::span<const double> quantile_grid,
                                 std::size_t n_min = kDefaultMinExceedances,
                                 double stability_tol = kDefaultStabilityTol);

}  // namespace evt
