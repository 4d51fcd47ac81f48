#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "evt/estimation.hpp"

namespace evt {

using CdfFunction = std::function<double(double)>;

struct GofReport {
  double ad_statistic = 0.0;
  double p_value = 1.0;
  double supnorm_gap = 0.0;
  std::string model;          // e.g. "gpd[pwm]"
  std::size_t b_used = 0;     // null replicates that produced a statistic
  std::size_t b_requested = 0;
  std::uint64_t seed = 0;
};

/// Anderson-Darling statistic of the sample against a model CDF:
///   A^2 = -n - (1/n) * sum_i (2i-1) * [ln z_i + ln(1 - z_{n+1-i})]
/// with z_i the model CDF at the ascending order statistics, clamped to
/// [1e-15, 1 - 1e-15] so misspecified tails cannot produce ln(0).
double ad_statistic(std::span<const double> sample, const CdfFunction& cdf);

/// Exact sup distance between the sample's step ECDF and a continuous CDF
/// (both sides of each step are checked).
double supnorm_gap(const CdfFunction& cdf, std::span<const double> sample);

inline constexpr std::size_t kDefaultGofReplicates = 2000;

/// Monte-Carlo p-value for the fitted GPD: each null replicate draws
/// n_exceed values from the fitted model, refits with the same method, and
/// scores its own AD statistic; p = (1 + #{A_b >= A_obs}) / (b_used + 1).
/// Replicates whose refit fails are skipped; more than 5% of them failing
/// raises BootstrapError. Deterministic given (fit, sample, replicates,
/// seed).
GofReport ad_pvalue_bootstrap(const GpdFit& fit, const ExcessSample& sample,
                              std::size_t replicates, std::uint64_t seed);

}  // namespace evt
