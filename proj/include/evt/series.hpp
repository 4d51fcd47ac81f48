#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace evt {

enum class SeriesFormat { plain, csv };

/// Ordered arrival counts (or wind speeds, etc.), optionally dated. Values
/// are stored as reals so integer counts and continuous measurements share
/// one pipeline. All values are finite and nonnegative; labels, when
/// present, match the values one-to-one and are strictly increasing.
struct ArrivalSeries {
  std::vector<double> values;
  std::vector<std::string> labels;

  ArrivalSeries() = default;
  explicit ArrivalSeries(std::vector<double> values,
                         std::vector<std::string> labels = {});

  std::size_t size() const { return values.size(); }
};

/// Excesses y = x - u over a threshold u, with exceedance accounting.
/// Every excess is strictly positive (exceedance is strict: x > u).
struct ExcessSample {
  double threshold = 0.0;
  std::vector<double> excesses;
  std::size_t n_total = 0;
  std::size_t n_exceed = 0;

  ExcessSample(double threshold, std::vector<double> excesses,
               std::size_t n_total);

  /// Empirical exceedance fraction, in (0, 1].
  double exceedance_fraction() const {
    return static_cast<double>(n_exceed) / static_cast<double>(n_total);
  }
};

/// Right-continuous empirical CDF: F(x) = (#points <= x) / n.
class StepFunction {
 public:
  explicit StepFunction(std::span<const double> sample);

  double operator()(double x) const;

  const std::vector<double>& points() const { return points_; }

 private:
  std::vector<double> points_;  // ascending
};

/// Load a series from disk. `plain` is whitespace-separated numeric tokens
/// (any mix of spaces and newlines); `csv` expects a `date,count` header
/// with ISO-8601 dates. Parse failures name the offending line.
ArrivalSeries load_series(const std::filesystem::path& path,
                          SeriesFormat format);

SeriesFormat parse_series_format(const std::string& name);

/// Maxima of consecutive full blocks of `block_len` values; a trailing
/// partial block is dropped, so the result has floor(n / block_len) entries.
std::vector<double> block_maxima(const ArrivalSeries& series,
                                 std::size_t block_len);

/// Excesses x - u of every value strictly above u, in original order.
/// Throws ArgumentError when nothing exceeds u.
ExcessSample excesses_over(const ArrivalSeries& series, double threshold);

StepFunction ecdf(std::span<const double> sample);

}  // namespace evt
