#include "evt/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "evt/rng.hpp"

namespace evt {

BootstrapResult parametric_bootstrap(const GpdFit& fit, std::size_t replicates,
                                     std::uint64_t seed,
                                     std::size_t grid_points) {
  if (replicates < 500) {
    throw ArgumentError("parametric_bootstrap: need at least 500 replicates");
  }
  if (grid_points < 2) {
    throw ArgumentError("parametric_bootstrap: need at least 2 grid points");
  }
  if (fit.n_exceed < 2) {
    throw ArgumentError("parametric_bootstrap: fit has fewer than 2 exceedances");
  }

  BootstrapResult result;
  result.original = fit;
  result.seed = seed;
  result.replicates.reserve(replicates);

  double upper = gpd_quantile(fit.params, 0.999);
  result.grid.reserve(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    result.grid.push_back(upper * static_cast<double>(i) /
                          static_cast<double>(grid_points - 1));
  }

  std::size_t n_total =
      static_cast<std::size_t>(std::llround(fit.n_exceed / fit.zeta));
  std::size_t exhausted = 0;
  for (std::size_t b = 0; b < replicates; ++b) {
    std::uint64_t base = derive_seed(seed, b + 1);
    bool done = false;
    for (std::size_t attempt = 0; attempt < 10 && !done; ++attempt) {
      std::uint64_t s = attempt == 0 ? base : derive_seed(base, attempt);
      try {
        ExcessSample draw(fit.threshold, gpd_sample(fit.params, fit.n_exceed, s),
                          std::max(n_total, fit.n_exceed));
        result.replicates.push_back(fit_gpd(draw, fit.method).params);
        done = true;
      } catch (const Error&) {
        ++result.redraws;
      }
    }
    if (!done) ++exhausted;
  }
  if (static_cast<double>(exhausted) > 0.01 * static_cast<double>(replicates)) {
    throw BootstrapError("parametric_bootstrap: unstable, " +
                         std::to_string(exhausted) + " of " +
                         std::to_string(replicates) +
                         " replicates exhausted their redraw attempts");
  }
  return result;
}

EnvelopePair envelopes(const BootstrapResult& result) {
  if (result.replicates.size() < 2) {
    throw ArgumentError("envelopes: need at least 2 replicates");
  }

  std::vector<double> original(result.grid.size());
  for (std::size_t g = 0; g < result.grid.size(); ++g) {
    original[g] = gpd_cdf(result.original.params, result.grid[g]);
  }

  // Signed deviation of each replicate at its own point of maximum absolute
  // gap from the original curve; ties keep the lowest replicate index.
  double best_pos = -2.0, best_neg = 2.0;
  std::size_t pos_idx = 0, neg_idx = 0;
  bool any_nonzero = false;
  for (std::size_t b = 0; b < result.replicates.size(); ++b) {
    const GpdParams& p = result.replicates[b];
    double max_abs = -1.0;
    double signed_dev = 0.0;
    for (std::size_t g = 0; g < result.grid.size(); ++g) {
      double dev = gpd_cdf(p, result.grid[g]) - original[g];
      if (std::abs(dev) > max_abs) {
        max_abs = std::abs(dev);
        signed_dev = dev;
      }
    }
    if (signed_dev != 0.0) any_nonzero = true;
    if (signed_dev > best_pos) {
      best_pos = signed_dev;
      pos_idx = b;
    }
    if (signed_dev < best_neg) {
      best_neg = signed_dev;
      neg_idx = b;
    }
  }

  EnvelopePair env;
  if (!any_nonzero) {
    env.degenerate = true;
    pos_idx = 0;
    neg_idx = 1;
  }
  env.conservative_index = pos_idx;
  env.nonconservative_index = neg_idx;
  env.conservative_params = result.replicates[pos_idx];
  env.nonconservative_params = result.replicates[neg_idx];
  env.conservative.resize(result.grid.size());
  env.nonconservative.resize(result.grid.size());
  for (std::size_t g = 0; g < result.grid.size(); ++g) {
    env.conservative[g] = gpd_cdf(env.conservative_params, result.grid[g]);
    env.nonconservative[g] = gpd_cdf(env.nonconservative_params, result.grid[g]);
  }
  return env;
}

AccuracyGrid accuracy_grid(const GpdFit& fit, const EnvelopePair& env,
                           const ExcessSample& sample,
                           std::span<const double> levels) {
  if (levels.empty()) {
    throw ArgumentError("accuracy_grid: empty level list");
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < fit.threshold) {
      throw ArgumentError(
          "accuracy_grid: levels must lie at or above the threshold");
    }
    if (i > 0 && levels[i] <= levels[i - 1]) {
      throw ArgumentError("accuracy_grid: levels must be strictly increasing");
    }
  }

  StepFunction excess_ecdf = ecdf(sample.excesses);
  AccuracyGrid grid;
  grid.levels.assign(levels.begin(), levels.end());
  for (double level : levels) {
    double y = level - fit.threshold;
    grid.ecdf.push_back(y > 0.0 ? excess_ecdf(y) : 0.0);
    grid.original.push_back(gpd_cdf(fit.params, y));
    grid.conservative.push_back(gpd_cdf(env.conservative_params, y));
    grid.nonconservative.push_back(gpd_cdf(env.nonconservative_params, y));
  }
  return grid;
}

}  // namespace evt
