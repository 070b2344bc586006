#pragma once

// Measurement-angle search: the one-parameter family β1 = 0, β1' = 2t,
// β2 = t, β2' = 3t, a four-angle grid + pattern search, and random sweeps
// over pure product states.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spin1bell/bell_functional.hpp"
#include "spin1bell/spin_core.hpp"

namespace spin1bell {

struct ScanSample {
  Angle t;
  double s = 0.0;
};

struct ScanResult {
  std::vector<ScanSample> samples;  // ascending t
  Angle best_t;
  double best_s = 0.0;
};

/// S at `steps` evenly spaced t in [t_min, t_max], endpoints included. Ties in
/// the maximum resolve to the smallest t. Throws if steps < 2 or t_min >= t_max.
ScanResult scan_family(const SpinState& state, Angle t_min, Angle t_max, std::size_t steps);

struct OptimizeOptions {
  std::size_t grid_per_axis = 12;
  std::size_t refine_iters = 40;
  std::uint64_t seed = 42;
  /// Extra coarse candidate, e.g. the family-scan argmax.
  std::optional<AngleConfig> start;
};

struct TraceEntry {
  AngleConfig angles;
  double s = 0.0;
};

struct OptimizationResult {
  AngleConfig best_angles;
  double best_s = 0.0;
  std::size_t evaluations = 0;
  /// Every accepted improvement, starting with the best coarse candidate.
  std::vector<TraceEntry> trace;
  /// best_s after each refinement round.
  std::vector<double> history;
  /// True when β1 was held at 0 because the state is rotation invariant.
  bool beta1_pinned = false;
};

/// Coarse search over the grid [0, 2π)^4 plus grid_per_axis² seeded random
/// configurations, then axis-wise pattern search with step halving. β1 is
/// pinned to 0 for states invariant under D(β) ⊗ D(β). Throws if
/// grid_per_axis < 2.
OptimizationResult optimize_angles(const SpinState& state, const OptimizeOptions& options);

inline OptimizationResult optimize_angles(const SpinState& state, std::size_t grid_per_axis,
                                          std::size_t refine_iters, std::uint64_t seed) {
  return optimize_angles(state, OptimizeOptions{grid_per_axis, refine_iters, seed, std::nullopt});
}

/// True if every joint probability depends on the settings only through
/// β1 - β2, checked as |<Ψ|D(β)⊗D(β)|Ψ>| = 1 at fixed generic angles.
bool is_rotation_invariant(const SpinState& state);

using ProductKets = std::pair<Ket, Ket>;

struct SweepResult {
  double worst_s = 0.0;
  ProductKets kets;
  AngleConfig angles;
};

/// Largest S over every (state, configuration) pair; first maximum wins.
SweepResult product_sweep(std::span<const ProductKets> states, std::span<const AngleConfig> configs);

/// Random pure product states (independent standard normal real and imaginary
/// parts, normalized) crossed with independently drawn uniform configurations.
SweepResult product_adversarial_sweep(std::size_t n_states, std::size_t n_configs,
                                      std::uint64_t seed);

/// Uniform configuration in [0, 2π)^4.
template <class Rng>
AngleConfig random_angle_config(Rng& rng);

/// Ket with independent standard normal real and imaginary parts (unnormalized).
template <class Rng>
Ket random_ket(Rng& rng);

}  // namespace spin1bell

#include <random>

namespace spin1bell {

template <class Rng>
AngleConfig random_angle_config(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  const double b1 = u(rng);
  const double b1p = u(rng);
  const double b2 = u(rng);
  const double b2p = u(rng);
  return {Angle(b1), Angle(b1p), Angle(b2), Angle(b2p)};
}

template <class Rng>
Ket random_ket(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Ket k;
  for (auto& a : k) {
    const double re = n(rng);
    const double im = n(rng);
    a = Complex(re, im);
  }
  return k;
}

}  // namespace spin1bell
