#include "evt/risk.hpp"

#include <cmath>
#include <utility>

#include "evt/distributions.hpp"

namespace evt {

const char* to_string(ProbabilitySource source) {
  return source == ProbabilitySource::tail_model ? "tail-model" : "empirical";
}

const char* to_string(ArrivalMode mode) {
  return mode == ArrivalMode::extreme ? "extreme" : "normal";
}

TailModel::TailModel(GpdFit fit_in, StepFunction body_in)
    : fit(std::move(fit_in)), body(std::move(body_in)) {
  if (!(fit.zeta > 0.0) || fit.zeta > 1.0) {
    throw ArgumentError("TailModel: exceedance fraction must lie in (0, 1]");
  }
}

TailModel make_tail_model(const ArrivalSeries& series, const GpdFit& fit) {
  return TailModel(fit, ecdf(series.values));
}

double exceedance_prob(const TailModel& model, double level) {
  if (!std::isfinite(level)) {
    throw ArgumentError("exceedance_prob: non-finite level");
  }
  if (level >= model.fit.threshold) {
    return model.fit.zeta *
           gpd_survival(model.fit.params, level - model.fit.threshold);
  }
  return 1.0 - model.body(level);
}

Exceedance over_capacity_prob(const TailModel& model, double capacity) {
  if (!(capacity >= 0.0)) {
    throw ArgumentError("over_capacity_prob: capacity must be >= 0");
  }
  Exceedance out;
  out.probability = exceedance_prob(model, capacity);
  out.source = capacity >= model.fit.threshold ? ProbabilitySource::tail_model
                                               : ProbabilitySource::empirical;
  return out;
}

TriageAdvice triage_flag(const TailModel& model, double arrival,
                         double capacity) {
  if (!(arrival >= 0.0)) {
    throw ArgumentError("triage_flag: arrival must be >= 0");
  }
  TriageAdvice advice;
  advice.arrival = arrival;
  advice.capacity = capacity;
  advice.arrival_exceedance = over_capacity_prob(model, arrival);
  advice.capacity_exceedance = over_capacity_prob(model, capacity);
  advice.mode = arrival > model.fit.threshold ? ArrivalMode::extreme
                                              : ArrivalMode::normal;
  return advice;
}

}  // namespace evt
