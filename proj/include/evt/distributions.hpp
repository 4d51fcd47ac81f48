#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace evt {

/// Shape-branch tolerance: below this |shape| the exponential (GPD) or
/// Gumbel (GEV) limit form is evaluated instead of the power form, which
/// loses all precision as the shape crosses zero.
inline constexpr double kShapeEpsilon = 1e-9;

/// Generalized Pareto excess-distribution parameters. Support is [0, inf)
/// for shape >= 0 and [0, -scale/shape] for shape < 0.
struct GpdParams {
  double shape;  // dimensionless
  double scale;  // > 0, same units as the excesses

  GpdParams(double shape, double scale);
};

/// Generalized extreme value parameters in the convention where the CDF is
/// exp(-(1 + shape*(x-location)/scale)^(-1/shape)).
struct GevParams {
  double location;
  double scale;  // > 0
  double shape;

  GevParams(double location, double scale, double shape);
};

struct NormalParams {
  double mean;
  double stddev;  // > 0

  NormalParams(double mean, double stddev);
};

/// P(Y <= y). Arguments below the support clamp to 0, beyond a finite upper
/// endpoint to 1. Evaluated as -expm1(-log1p(shape*y/scale)/shape) so values
/// stay accurate for shapes arbitrarily close to zero.
double gpd_cdf(const GpdParams& p, double y);

/// P(Y > y), the complement of gpd_cdf without cancellation in the far tail.
double gpd_survival(const GpdParams& p, double y);

/// Inverse of gpd_cdf on q in [0, 1); q = 0 maps to the support origin.
double gpd_quantile(const GpdParams& p, double q);

/// n inverse-transform draws from the seeded stream (see rng.hpp). Identical
/// seeds give bit-identical output. Every draw is strictly positive.
std::vector<double> gpd_sample(const GpdParams& p, std::size_t n,
                               std::uint64_t seed);

/// Mean scale/(1 - shape); requires shape < 1.
double gpd_mean(const GpdParams& p);

double gev_cdf(const GevParams& p, double x);
double gev_quantile(const GevParams& p, double q);  // q in (0, 1)
std::vector<double> gev_sample(const GevParams& p, std::size_t n,
                               std::uint64_t seed);

double normal_cdf(const NormalParams& p, double x);

}  // namespace evt
