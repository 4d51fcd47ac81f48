#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "evt/errors.hpp"
#include "evt/rng.hpp"
#include "evt/series.hpp"

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("load_series plain tokenizes across whitespace and newlines") {
  auto path = write_temp("evt_plain.txt", "54 60\n80");
  auto series = evt::load_series(path, evt::SeriesFormat::plain);
  CHECK(series.values == std::vector<double>{54.0, 60.0, 80.0});
  CHECK(series.labels.empty());
}

TEST_CASE("load_series csv keeps values and labels") {
  auto path =
      write_temp("evt_csv.csv", "date,count\n2015-01-01,12\n2015-01-02,3\n");
  auto series = evt::load_series(path, evt::SeriesFormat::csv);
  CHECK(series.values == std::vector<double>{12.0, 3.0});
  CHECK(series.labels ==
        std::vector<std::string>{"2015-01-01", "2015-01-02"});
}

TEST_CASE("load_series error paths name the offending location") {
  auto bad_token = write_temp("evt_bad_token.txt", "54 abc");
  CHECK_THROWS_WITH_AS(evt::load_series(bad_token, evt::SeriesFormat::plain),
                       doctest::Contains("token 2"), evt::ArgumentError);

  auto negative = write_temp("evt_negative.txt", "3 -4");
  CHECK_THROWS_AS(evt::load_series(negative, evt::SeriesFormat::plain),
                  evt::ArgumentError);

  auto missing_col = write_temp("evt_missing_col.csv",
                                "date,count\n2015-01-01,5\n2015-01-02\n");
  CHECK_THROWS_WITH_AS(evt::load_series(missing_col, evt::SeriesFormat::csv),
                       doctest::Contains(":3"), evt::ArgumentError);

  auto bad_header = write_temp("evt_bad_header.csv", "day,n\n2015-01-01,5\n");
  CHECK_THROWS_AS(evt::load_series(bad_header, evt::SeriesFormat::csv),
                  evt::ArgumentError);

  auto stale_dates = write_temp("evt_stale_dates.csv",
                                "date,count\n2015-01-02,5\n2015-01-01,6\n");
  CHECK_THROWS_AS(evt::load_series(stale_dates, evt::SeriesFormat::csv),
                  evt::ArgumentError);

  CHECK_THROWS_AS(
      evt::load_series("/nonexistent/evt.txt", evt::SeriesFormat::plain),
      evt::ArgumentError);
}

TEST_CASE("ArrivalSeries validates invariants") {
  CHECK_THROWS_AS(evt::ArrivalSeries({1.0, -2.0}), evt::ArgumentError);
  CHECK_THROWS_AS(evt::ArrivalSeries({1.0}, {"a", "b"}), evt::ArgumentError);
  CHECK_THROWS_AS(evt::ArrivalSeries({1.0, 2.0}, {"b", "a"}),
                  evt::ArgumentError);
}

TEST_CASE("block_maxima partitions into full blocks") {
  evt::ArrivalSeries series({1, 5, 3, 2, 2, 9});
  CHECK(evt::block_maxima(series, 3) == std::vector<double>{5.0, 9.0});

  evt::ArrivalSeries single({7});
  CHECK(evt::block_maxima(single, 1) == std::vector<double>{7.0});

  std::vector<double> days(476, 1.0);
  days[100] = 3.0;
  CHECK(evt::block_maxima(evt::ArrivalSeries(days), 3).size() == 158);

  CHECK_THROWS_AS(evt::block_maxima(series, 0), evt::ArgumentError);
  CHECK_THROWS_AS(evt::block_maxima(evt::ArrivalSeries{}, 3),
                  evt::ArgumentError);
}

TEST_CASE("block_maxima count is floor(n/b) for random shapes") {
  evt::RandomStream stream(11);
  for (int rep = 0; rep < 50; ++rep) {
    std::size_t n = 1 + static_cast<std::size_t>(stream.uniform() * 400);
    std::size_t b = 1 + static_cast<std::size_t>(stream.uniform() * 12);
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(stream.uniform());
    auto maxima = evt::block_maxima(evt::ArrivalSeries(values), b);
    CHECK(maxima.size() == n / b);
  }
}

TEST_CASE("excesses_over keeps strict exceedances in order") {
  evt::ArrivalSeries series({50, 10, 60});
  auto sample = evt::excesses_over(series, 49.0);
  CHECK(sample.excesses == std::vector<double>{1.0, 11.0});
  CHECK(sample.n_total == 3);
  CHECK(sample.n_exceed == 2);
  CHECK(sample.exceedance_fraction() == doctest::Approx(2.0 / 3.0));

  CHECK_THROWS_AS(evt::excesses_over(series, 60.0), evt::ArgumentError);
}

TEST_CASE("excesses_over round trip reproduces the exceedance subset") {
  evt::RandomStream stream(12);
  std::vector<double> values;
  for (int i = 0; i < 500; ++i) values.push_back(100.0 * stream.uniform());
  evt::ArrivalSeries series(values);

  double u = 49.0;
  auto sample = evt::excesses_over(series, u);

  std::vector<double> expected;
  for (double x : values) {
    if (x > u) expected.push_back(x);
  }
  CHECK(sample.n_exceed == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(sample.excesses[i] + u == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("ExcessSample rejects non-positive excesses") {
  CHECK_THROWS_AS(evt::ExcessSample(0.0, {1.0, 0.0}, 5), evt::ArgumentError);
  CHECK_THROWS_AS(evt::ExcessSample(0.0, {1.0, 2.0}, 1), evt::ArgumentError);
  CHECK_THROWS_AS(evt::ExcessSample(0.0, {}, 5), evt::ArgumentError);
}

TEST_CASE("ecdf counts points at or below the query") {
  auto f = evt::ecdf(std::vector<double>{1, 2, 3});
  CHECK(f(2.0) == doctest::Approx(2.0 / 3.0));
  CHECK(f(0.5) == 0.0);
  CHECK(f(3.0) == 1.0);

  auto g = evt::ecdf(std::vector<double>{5});
  CHECK(g(4.99) == 0.0);
  CHECK(g(5.0) == 1.0);

  CHECK_THROWS_AS(evt::ecdf(std::vector<double>{}), evt::ArgumentError);
}

TEST_CASE("ecdf is monotone on random grids") {
  evt::RandomStream stream(13);
  std::vector<double> sample;
  for (int i = 0; i < 200; ++i) sample.push_back(stream.uniform() * 10.0);
  auto f = evt::ecdf(sample);
  for (int i = 0; i < 500; ++i) {
    double a = stream.uniform() * 12.0 - 1.0;
    double b = stream.uniform() * 12.0 - 1.0;
    if (a > b) std::swap(a, b);
    CHECK(f(a) <= f(b));
  }
  CHECK(f(*std::max_element(sample.begin(), sample.end())) == 1.0);
}
