#include "evt/gof.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "evt/distributions.hpp"
#include "evt/rng.hpp"

namespace evt {

namespace {

constexpr double kProbClamp = 1e-15;

double clamp_prob(double z) {
  return std::min(std::max(z, kProbClamp), 1.0 - kProbClamp);
}

std::vector<double> sorted_copy(std::span<const double> sample) {
  std::vector<double> s(sample.begin(), sample.end());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

double ad_statistic(std::span<const double> sample, const CdfFunction& cdf) {
  if (sample.empty()) {
    throw ArgumentError("ad_statistic: empty sample");
  }
  auto s = sorted_copy(sample);
  std::size_t n = s.size();
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = clamp_prob(cdf(s[i]));

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double weight = 2.0 * static_cast<double>(i + 1) - 1.0;
    sum += weight * (std::log(z[i]) + std::log1p(-z[n - 1 - i]));
  }
  return -static_cast<double>(n) - sum / static_cast<double>(n);
}

double supnorm_gap(const CdfFunction& cdf, std::span<const double> sample) {
  if (sample.empty()) {
    throw ArgumentError("supnorm_gap: empty sample");
  }
  auto s = sorted_copy(sample);
  double n = static_cast<double>(s.size());
  double gap = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double f = cdf(s[i]);
    double hi = static_cast<double>(i + 1) / n;  // ECDF at the point
    double lo = static_cast<double>(i) / n;      // ECDF just below it
    gap = std::max(gap, std::max(std::abs(hi - f), std::abs(lo - f)));
  }
  return gap;
}

GofReport ad_pvalue_bootstrap(const GpdFit& fit, const ExcessSample& sample,
                              std::size_t replicates, std::uint64_t seed) {
  if (replicates < 500) {
    throw ArgumentError("ad_pvalue_bootstrap: need at least 500 replicates");
  }

  auto model_cdf = [&fit](double y) { return gpd_cdf(fit.params, y); };
  double observed = ad_statistic(sample.excesses, model_cdf);

  std::size_t at_or_above = 0;
  std::size_t used = 0;
  std::size_t failed = 0;
  for (std::size_t b = 0; b < replicates; ++b) {
    auto draws =
        gpd_sample(fit.params, fit.n_exceed, derive_seed(seed, b + 1));
    try {
      ExcessSample replicate(sample.threshold, std::move(draws),
                             sample.n_total);
      GpdFit refit = fit_gpd(replicate, fit.method);
      auto refit_cdf = [&refit](double y) { return gpd_cdf(refit.params, y); };
      double a2 = ad_statistic(replicate.excesses, refit_cdf);
      ++used;
      if (a2 >= observed) ++at_or_above;
    } catch (const Error&) {
      ++failed;
    }
  }
  if (static_cast<double>(failed) >
      0.05 * static_cast<double>(replicates)) {
    throw BootstrapError("ad_pvalue_bootstrap: unstable null, " +
                         std::to_string(failed) + " of " +
                         std::to_string(replicates) + " replicate refits failed");
  }

  GofReport report;
  report.ad_statistic = observed;
  report.p_value = (1.0 + static_cast<double>(at_or_above)) /
                   (static_cast<double>(used) + 1.0);
  report.supnorm_gap = supnorm_gap(model_cdf, sample.excesses);
  report.model = std::string("gpd[") + to_string(fit.method) + "]";
  report.b_used = used;
  report.b_requested = replicates;
  report.seed = seed;
  return report;
}

}  // namespace evt
