#include "evt/distributions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "evt/errors.hpp"
#include "evt/rng.hpp"

namespace evt {

namespace {

void require_finite(double x, const char* where) {
  if (!std::isfinite(x)) {
    throw ArgumentError(std::string(where) + ": non-finite argument");
  }
}

}  // namespace

GpdParams::GpdParams(double shape_in, double scale_in)
    : shape(shape_in), scale(scale_in) {
  if (!std::isfinite(shape) || !std::isfinite(scale) || scale <= 0.0) {
    throw ArgumentError("GpdParams: scale must be finite and > 0");
  }
}

GevParams::GevParams(double location_in, double scale_in, double shape_in)
    : location(location_in), scale(scale_in), shape(shape_in) {
  if (!std::isfinite(location) || !std::isfinite(scale) ||
      !std::isfinite(shape) || scale <= 0.0) {
    throw ArgumentError("GevParams: scale must be finite and > 0");
  }
}

NormalParams::NormalParams(double mean_in, double stddev_in)
    : mean(mean_in), stddev(stddev_in) {
  if (!std::isfinite(mean) || !std::isfinite(stddev) || stddev <= 0.0) {
    throw ArgumentError("NormalParams: stddev must be finite and > 0");
  }
}

double gpd_survival(const GpdParams& p, double y) {
  require_finite(y, "gpd_survival");
  if (y <= 0.0) return 1.0;
  if (std::abs(p.shape) < kShapeEpsilon) {
    return std::exp(-y / p.scale);
  }
  double t = p.shape * y / p.scale;
  if (t <= -1.0) return 0.0;  // beyond the finite upper endpoint
  return std::exp(-std::log1p(t) / p.shape);
}

double gpd_cdf(const GpdParams& p, double y) {
  require_finite(y, "gpd_cdf");
  if (y <= 0.0) return 0.0;
  if (std::abs(p.shape) < kShapeEpsilon) {
    return -std::expm1(-y / p.scale);
  }
  double t = p.shape * y / p.scale;
  if (t <= -1.0) return 1.0;
  return -std::expm1(-std::log1p(t) / p.shape);
}

double gpd_quantile(const GpdParams& p, double q) {
  if (!(q >= 0.0) || q >= 1.0) {
    throw ArgumentError("gpd_quantile: probability must lie in [0, 1)");
  }
  if (std::abs(p.shape) < kShapeEpsilon) {
    return -p.scale * std::log1p(-q);
  }
  return p.scale * std::expm1(-p.shape * std::log1p(-q)) / p.shape;
}

std::vector<double> gpd_sample(const GpdParams& p, std::size_t n,
                               std::uint64_t seed) {
  if (n == 0) throw ArgumentError("gpd_sample: n must be >= 1");
  RandomStream stream(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(gpd_quantile(p, stream.uniform()));
  }
  return out;
}

double gpd_mean(const GpdParams& p) {
  if (p.shape >= 1.0) {
    throw ArgumentError("gpd_mean: infinite mean, shape >= 1");
  }
  return p.scale / (1.0 - p.shape);
}

double gev_cdf(const GevParams& p, double x) {
  require_finite(x, "gev_cdf");
  double z = (x - p.location) / p.scale;
  if (std::abs(p.shape) < kShapeEpsilon) {
    return std::exp(-std::exp(-z));
  }
  double t = p.shape * z;
  if (t <= -1.0) {
    return p.shape > 0.0 ? 0.0 : 1.0;  // outside the support
  }
  return std::exp(-std::exp(-std::log1p(t) / p.shape));
}

double gev_quantile(const GevParams& p, double q) {
  if (!(q > 0.0) || q >= 1.0) {
    throw ArgumentError("gev_quantile: probability must lie in (0, 1)");
  }
  double loglog = std::log(-std::log(q));
  if (std::abs(p.shape) < kShapeEpsilon) {
    return p.location - p.scale * loglog;
  }
  return p.location + p.scale * std::expm1(-p.shape * loglog) / p.shape;
}

std::vector<double> gev_sample(const GevParams& p, std::size_t n,
                               std::uint64_t seed) {
  if (n == 0) throw ArgumentError("gev_sample: n must be >= 1");
  RandomStream stream(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(gev_quantile(p, stream.uniform()));
  }
  return out;
}

double normal_cdf(const NormalParams& p, double x) {
  // 0.5 * erfc(-z / sqrt(2)); erfc keeps the tails accurate where
  // 1 - 0.5*erf(...) would cancel.
  double z = (x - p.mean) / p.stddev;
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

}  // namespace evt
