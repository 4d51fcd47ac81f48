#include "evt/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <utility>

#include "evt/errors.hpp"

namespace evt {

namespace {

void check_value(double v, const std::string& where) {
  if (!std::isfinite(v)) {
    throw ArgumentError(where + ": non-finite value");
  }
  if (v < 0.0) {
    throw ArgumentError(where + ": negative count " + std::to_string(v));
  }
}

// Strict numeric token: the whole token must convert.
double parse_number(const std::string& token, const std::string& where) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ArgumentError(where + ": token '" + token + "' is not a number");
  }
  if (used != token.size()) {
    throw ArgumentError(where + ": token '" + token + "' is not a number");
  }
  return v;
}

ArrivalSeries load_plain(std::istream& in, const std::string& path) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    std::size_t token_no = 0;
    while (fields >> token) {
      ++token_no;
      std::string where = path + ":" + std::to_string(line_no) + ": token " +
                          std::to_string(token_no);
      double v = parse_number(token, where);
      check_value(v, where);
      values.push_back(v);
    }
  }
  if (values.empty()) {
    throw ArgumentError(path + ": no numeric data");
  }
  return ArrivalSeries(std::move(values));
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

ArrivalSeries load_csv(std::istream& in, const std::string& path) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "date,count") {
    throw ArgumentError(path + ":1: expected header 'date,count'");
  }
  std::vector<double> values;
  std::vector<std::string> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    std::string where = path + ":" + std::to_string(line_no);
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ArgumentError(where + ": missing count column");
    }
    std::string date = line.substr(0, comma);
    std::string count = line.substr(comma + 1);
    if (date.empty() || count.empty()) {
      throw ArgumentError(where + ": empty field");
    }
    if (!labels.empty() && date <= labels.back()) {
      throw ArgumentError(where + ": date '" + date +
                          "' does not increase over '" + labels.back() + "'");
    }
    double v = parse_number(count, where);
    check_value(v, where);
    labels.push_back(std::move(date));
    values.push_back(v);
  }
  if (values.empty()) {
    throw ArgumentError(path + ": no records after header");
  }
  return ArrivalSeries(std::move(values), std::move(labels));
}

}  // namespace

ArrivalSeries::ArrivalSeries(std::vector<double> values_in,
                             std::vector<std::string> labels_in)
    : values(std::move(values_in)), labels(std::move(labels_in)) {
  for (double v : values) check_value(v, "ArrivalSeries");
  if (!labels.empty()) {
    if (labels.size() != values.size()) {
      throw ArgumentError("ArrivalSeries: labels/values length mismatch");
    }
    for (std::size_t i = 1; i < labels.size(); ++i) {
      if (labels[i] <= labels[i - 1]) {
        throw ArgumentError("ArrivalSeries: labels not strictly increasing at '" +
                            labels[i] + "'");
      }
    }
  }
}

ExcessSample::ExcessSample(double threshold_in, std::vector<double> excesses_in,
                           std::size_t n_total_in)
    : threshold(threshold_in),
      excesses(std::move(excesses_in)),
      n_total(n_total_in),
      n_exceed(excesses.size()) {
  if (n_exceed == 0) {
    throw ArgumentError("ExcessSample: no exceedances");
  }
  if (n_exceed > n_total) {
    throw ArgumentError("ExcessSample: n_exceed exceeds n_total");
  }
  for (double y : excesses) {
    if (!(y > 0.0) || !std::isfinite(y)) {
      throw ArgumentError("ExcessSample: excesses must be finite and > 0");
    }
  }
}

StepFunction::StepFunction(std::span<const double> sample)
    : points_(sample.begin(), sample.end()) {
  if (points_.empty()) {
    throw ArgumentError("ecdf: empty sample");
  }
  for (double x : points_) {
    if (!std::isfinite(x)) throw ArgumentError("ecdf: non-finite sample point");
  }
  std::sort(points_.begin(), points_.end());
}

double StepFunction::operator()(double x) const {
  auto above = std::upper_bound(points_.begin(), points_.end(), x);
  return static_cast<double>(above - points_.begin()) /
         static_cast<double>(points_.size());
}

ArrivalSeries load_series(const std::filesystem::path& path,
                          SeriesFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw ArgumentError("load_series: cannot open '" + path.string() + "'");
  }
  return format == SeriesFormat::plain ? load_plain(in, path.string())
                                       : load_csv(in, path.string());
}

SeriesFormat parse_series_format(const std::string& name) {
  if (name == "plain") return SeriesFormat::plain;
  if (name == "csv") return SeriesFormat::csv;
  throw ArgumentError("unknown series format '" + name + "'");
}

std::vector<double> block_maxima(const ArrivalSeries& series,
                                 std::size_t block_len) {
  if (block_len == 0) {
    throw ArgumentError("block_maxima: block_len must be positive");
  }
  if (series.values.empty()) {
    throw ArgumentError("block_maxima: empty series");
  }
  std::size_t n_blocks = series.values.size() / block_len;
  std::vector<double> maxima;
  maxima.reserve(n_blocks);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    auto first = series.values.begin() + static_cast<std::ptrdiff_t>(b * block_len);
    maxima.push_back(*std::max_element(first, first + static_cast<std::ptrdiff_t>(block_len)));
  }
  return maxima;
}

ExcessSample excesses_over(const ArrivalSeries& series, double threshold) {
  if (!std::isfinite(threshold)) {
    throw ArgumentError("excesses_over: non-finite threshold");
  }
  std::vector<double> excesses;
  for (double x : series.values) {
    if (x > threshold) excesses.push_back(x - threshold);
  }
  if (excesses.empty()) {
    throw ArgumentError("excesses_over: empty tail, no value exceeds threshold " +
                        std::to_string(threshold));
  }
  return ExcessSample(threshold, std::move(excesses), series.values.size());
}

StepFunction ecdf(std::span<const double> sample) { return StepFunction(sample); }

}  // namespace evt
