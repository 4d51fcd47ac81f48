#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "evt/estimation.hpp"

namespace evt {

inline constexpr std::size_t kDefaultBootstrapReplicates = 2100;
inline constexpr std::size_t kDefaultGridPoints = 200;

/// Parameter table from a parametric bootstrap of a fitted GPD, plus the
/// evaluation grid shared by every envelope computation.
struct BootstrapResult {
  std::vector<GpdParams> replicates;  // one (shape, scale) pair per replicate
  std::vector<double> grid;           // increasing, excess units, from 0
  GpdFit original;
  std::uint64_t seed = 0;
  std::size_t redraws = 0;  // replicate draws that had to be retried
};

/// The two replicate CDFs with extreme signed deviation from the original
/// fit. The conservative curve lies above the original at its own
/// max-deviation point (it predicts occurrence at lower levels); the
/// non-conservative one lies below at its point.
struct EnvelopePair {
  std::vector<double> conservative;  // CDF values on the result grid
  std::vector<double> nonconservative;
  std::size_t conservative_index = 0;
  std::size_t nonconservative_index = 0;
  GpdParams conservative_params{0.0, 1.0};
  GpdParams nonconservative_params{0.0, 1.0};
  bool degenerate = false;  // every replicate deviation was exactly zero
};

/// Occurrence probabilities P(X <= level | X > u) per model at each queried
/// arrival level: the data behind a radar / level-comparison plot.
struct AccuracyGrid {
  std::vector<double> levels;  // arrival units, at or above the threshold
  std::vector<double> ecdf;
  std::vector<double> original;
  std::vector<double> conservative;
  std::vector<double> nonconservative;
};

/// Draw n_exceed values from the fitted GPD and refit with the original
/// method, `replicates` times, on streams derived from (seed, index).
/// Failed refits are redrawn on a fresh derived stream, up to 10 attempts;
/// replicates exhausting their attempts are dropped, and more than 1% of
/// them doing so raises BootstrapError. The grid spans [0, q(0.999)] of the
/// original fit.
BootstrapResult parametric_bootstrap(const GpdFit& fit, std::size_t replicates,
                                     std::uint64_t seed,
                                     std::size_t grid_points = kDefaultGridPoints);

EnvelopePair envelopes(const BootstrapResult& result);

AccuracyGrid accuracy_grid(const GpdFit& fit, const EnvelopePair& env,
                           const ExcessSample& sample,
                           std::span<const double> levels);

}  // namespace evt
