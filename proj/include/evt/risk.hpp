#pragma once

#include <string>

#include "evt/estimation.hpp"
#include "evt/series.hpp"

namespace evt {

/// Where a probability came from: the GPD tail at or above the threshold,
/// the empirical body below it.
enum class ProbabilitySource { tail_model, empirical };
const char* to_string(ProbabilitySource source);

enum class ArrivalMode { normal, extreme };
const char* to_string(ArrivalMode mode);

/// Spliced predictive model: empirical CDF below the threshold, fitted GPD
/// tail above it, glued through the exceedance fraction. The splice cannot
/// jump upward: P(X > c) = zeta at c = u from the tail side and >= zeta
/// from the empirical side below.
struct TailModel {
  GpdFit fit;
  StepFunction body;  // ECDF of the full arrival series

  TailModel(GpdFit fit, StepFunction body);
};

TailModel make_tail_model(const ArrivalSeries& series, const GpdFit& fit);

struct Exceedance {
  double probability = 0.0;
  ProbabilitySource source = ProbabilitySource::empirical;
};

struct TriageAdvice {
  double arrival = 0.0;
  double capacity = 0.0;
  Exceedance arrival_exceedance;   // how rare this arrival is
  Exceedance capacity_exceedance;  // how often capacity is breached
  ArrivalMode mode = ArrivalMode::normal;  // extreme iff arrival > threshold
};

/// P(X > level): zeta * (1 + shape*(level-u)/scale)^(-1/shape) at or above
/// the threshold (0 past a finite upper endpoint), empirical complement
/// below it.
double exceedance_prob(const TailModel& model, double level);

/// Exceedance probability at the capacity, tagged with its source. Queries
/// below the threshold answer from the empirical body: the tail model says
/// nothing there.
Exceedance over_capacity_prob(const TailModel& model, double capacity);

TriageAdvice triage_flag(const TailModel& model, double arrival,
                         double capacity);

}  // namespace evt
