#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "evt/distributions.hpp"
#include "evt/errors.hpp"
#include "evt/estimation.hpp"
#include "evt/gof.hpp"
#include "evt/rng.hpp"
#include "evt/series.hpp"

using evt::GpdParams;

namespace {

// Independent route to the same statistic: fold the reversed-index term into
// a single pass, A2 = -n - (1/n) sum_i [(2i-1) ln z_i + (2(n-i)+1) ln(1-z_i)].
double ad_bruteforce(std::vector<double> sample, const evt::CdfFunction& cdf) {
  std::sort(sample.begin(), sample.end());
  double n = static_cast<double>(sample.size());
  double sum = 0.0;
  for (std::size_t idx = 0; idx < sample.size(); ++idx) {
    double i = static_cast<double>(idx + 1);
    double z = std::min(std::max(cdf(sample[idx]), 1e-15), 1.0 - 1e-15);
    sum += (2.0 * i - 1.0) * std::log(z) +
           (2.0 * (n - i) + 1.0) * std::log(1.0 - z);
  }
  return -n - sum / n;
}

evt::ExcessSample make_sample(std::vector<double> excesses) {
  std::size_t n = excesses.size();
  return evt::ExcessSample(0.0, std::move(excesses), n);
}

}  // namespace

TEST_CASE("ad_statistic analytic single-point case") {
  auto half = [](double) { return 0.5; };
  CHECK(evt::ad_statistic(std::vector<double>{3.0}, half) ==
        doctest::Approx(-1.0 + 2.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("ad_statistic at exact uniform plotting positions") {
  // z_i = i/6 for n = 5; value from the recorded high-precision oracle.
  std::vector<double> sample = {1.0, 2.0, 3.0, 4.0, 5.0};
  auto cdf = [](double x) { return x / 6.0; };
  CHECK(evt::ad_statistic(sample, cdf) ==
        doctest::Approx(0.21299280237394117).epsilon(1e-10));
}

TEST_CASE("ad_statistic matches the brute-force summation oracle") {
  evt::RandomStream stream(41);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = 1 + static_cast<std::size_t>(stream.uniform() * 80);
    GpdParams model(stream.uniform() - 0.3, 0.5 + stream.uniform() * 5.0);
    auto sample = evt::gpd_sample(
        GpdParams(0.2, 2.0), n, evt::derive_seed(41, static_cast<std::uint64_t>(rep)));
    auto cdf = [&](double y) { return evt::gpd_cdf(model, y); };
    CHECK(evt::ad_statistic(sample, cdf) ==
          doctest::Approx(ad_bruteforce(sample, cdf)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(evt::ad_statistic(std::vector<double>{},
                                    [](double) { return 0.5; }),
                  evt::ArgumentError);
}

TEST_CASE("ad_statistic is invariant under joint monotone transforms") {
  GpdParams model(0.1, 3.0);
  auto sample = evt::gpd_sample(model, 150, 42);
  auto cdf = [&](double y) { return evt::gpd_cdf(model, y); };
  double base = evt::ad_statistic(sample, cdf);

  double a = 7.0, b = 2.5;  // affine map x -> a + b*x
  std::vector<double> moved;
  for (double y : sample) moved.push_back(a + b * y);
  auto moved_cdf = [&](double x) { return evt::gpd_cdf(model, (x - a) / b); };
  CHECK(evt::ad_statistic(moved, moved_cdf) ==
        doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("ad_statistic stays below the null 95% critical value") {
  GpdParams model(0.1215, 22.48);
  auto observed = evt::ad_statistic(
      evt::gpd_sample(model, 400, 43),
      [&](double y) { return evt::gpd_cdf(model, y); });

  std::vector<double> null_stats;
  for (std::uint64_t b = 0; b < 500; ++b) {
    auto rep = evt::gpd_sample(model, 400, evt::derive_seed(44, b));
    null_stats.push_back(evt::ad_statistic(
        rep, [&](double y) { return evt::gpd_cdf(model, y); }));
  }
  std::sort(null_stats.begin(), null_stats.end());
  double critical = null_stats[474];  // 95th percentile of 500
  CHECK(observed < critical);
}

TEST_CASE("supnorm_gap exact step-vs-curve distance") {
  auto identity = [](double x) { return std::min(std::max(x, 0.0), 1.0); };
  CHECK(evt::supnorm_gap(identity, std::vector<double>{0.5}) ==
        doctest::Approx(0.5).epsilon(1e-14));

  // Glivenko-Cantelli: the gap to the generating CDF shrinks with n.
  GpdParams model(0.1215, 22.48);
  auto big = evt::gpd_sample(model, 200000, 45);
  CHECK(evt::supnorm_gap([&](double y) { return evt::gpd_cdf(model, y); },
                         big) < 0.01);
  CHECK_THROWS_AS(evt::supnorm_gap(identity, std::vector<double>{}),
                  evt::ArgumentError);
}

TEST_CASE("supnorm_gap ranks GPD above Normal on heavy-tailed excesses") {
  auto excesses = evt::gpd_sample(GpdParams(0.1215, 22.48), 150, 46);
  auto gpd_fit = evt::fit_gpd_pwm(make_sample(excesses));
  auto normal_fit = evt::fit_normal(excesses);
  double gap_gpd = evt::supnorm_gap(
      [&](double y) { return evt::gpd_cdf(gpd_fit.params, y); }, excesses);
  double gap_normal = evt::supnorm_gap(
      [&](double y) { return evt::normal_cdf(normal_fit, y); }, excesses);
  CHECK(gap_gpd < gap_normal);
}

TEST_CASE("ad_pvalue_bootstrap is deterministic and near 1 for a perfect fit") {
  // A sample laid out on exact model quantiles has a tiny observed statistic,
  // so essentially every null replicate scores at or above it.
  GpdParams model(0.1215, 22.48);
  std::vector<double> perfect;
  std::size_t n = 60;
  for (std::size_t i = 1; i <= n; ++i) {
    perfect.push_back(evt::gpd_quantile(
        model, (static_cast<double>(i) - 0.5) / static_cast<double>(n)));
  }
  evt::ExcessSample sample(0.0, perfect, n);
  evt::GpdFit fit{model};
  fit.threshold = 0.0;
  fit.zeta = 1.0;
  fit.method = evt::FitMethod::pwm;
  fit.n_exceed = n;

  auto report = evt::ad_pvalue_bootstrap(fit, sample, 500, 99);
  CHECK(report.p_value > 0.99);
  CHECK(report.b_used == 500);
  CHECK(report.b_requested == 500);
  CHECK(report.model == "gpd[pwm]");

  auto again = evt::ad_pvalue_bootstrap(fit, sample, 500, 99);
  CHECK(again.p_value == report.p_value);
  CHECK(again.ad_statistic == report.ad_statistic);

  CHECK_THROWS_AS(evt::ad_pvalue_bootstrap(fit, sample, 100, 99),
                  evt::ArgumentError);
}

TEST_CASE("ad_pvalue_bootstrap keeps healthy p for data from its own fit") {
  auto excesses = evt::gpd_sample(GpdParams(0.1215, 22.48), 120, 47);
  auto sample = make_sample(excesses);
  auto fit = evt::fit_gpd_pwm(sample);
  auto report = evt::ad_pvalue_bootstrap(fit, sample, 500, 7);
  CHECK(report.p_value > 0.05);  // should not reject its own data
}

TEST_CASE("ad_pvalue_bootstrap rejects a misspecified model") {
  // Body-shaped data (clustered away from zero) forced through a GPD fit.
  evt::RandomStream stream(48);
  std::vector<double> clustered;
  for (int i = 0; i < 400; ++i) {
    clustered.push_back(9.0 + 2.0 * stream.uniform());
  }
  auto sample = make_sample(clustered);
  auto fit = evt::fit_gpd_pwm(sample);
  auto report = evt::ad_pvalue_bootstrap(fit, sample, 500, 8);
  CHECK(report.p_value < 0.01);
}
