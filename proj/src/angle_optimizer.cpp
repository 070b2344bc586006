#include "spin1bell/angle_optimizer.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "spin1bell/kernels.hpp"

namespace spin1bell {

namespace {

using AngleArray = std::array<double, 4>;

AngleConfig to_config(const AngleArray& a) {
  return {Angle(a[0]), Angle(a[1]), Angle(a[2]), Angle(a[3])};
}

AngleArray to_array(const AngleConfig& c) {
  return {reduce_angle(c.beta1.radians()), reduce_angle(c.beta1_prime.radians()),
          reduce_angle(c.beta2.radians()), reduce_angle(c.beta2_prime.radians())};
}

std::vector<double> evaluate(const SpinState& state, const kernels::AngleBatch& batch) {
  std::vector<double> out(batch.size());
  kernels::s_batch(state, batch.columns(), out);
  return out;
}

}  // namespace

ScanResult scan_family(const SpinState& state, Angle t_min, Angle t_max, std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("scan_family needs steps >= 2");
  if (!(t_min.radians() < t_max.radians())) {
    throw std::invalid_argument("scan_family needs t_min < t_max");
  }
  const double lo = t_min.radians();
  const double span = t_max.radians() - lo;
  const double last = static_cast<double>(steps - 1);

  ScanResult result;
  result.samples.reserve(steps);
  kernels::AngleBatch batch;
  batch.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const Angle t = i + 1 == steps ? t_max : Angle(lo + span * (static_cast<double>(i) / last));
    result.samples.push_back({t, 0.0});
    batch.push_back(family_config(t));
  }
  const auto values = evaluate(state, batch);

  std::size_t best = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    result.samples[i].s = values[i];
    if (values[i] > values[best]) best = i;
  }
  result.best_t = result.samples[best].t;
  result.best_s = values[best];
  return result;
}

bool is_rotation_invariant(const SpinState& state) {
  for (double beta : {0.7390851332, 2.3150287213}) {
    const auto rotated = rotate_state(state, Angle(beta), Angle(beta));
    Complex overlap{0.0, 0.0};
    for (std::size_t k = 0; k < kStateDim; ++k)
      overlap += std::conj(state.amplitudes()[k]) * rotated.amplitudes()[k];
    if (std::abs(std::abs(overlap) - 1.0) > 1e-12) return false;
  }
  return true;
}

OptimizationResult optimize_angles(const SpinState& state, const OptimizeOptions& options) {
  if (options.grid_per_axis < 2) throw std::invalid_argument("grid_per_axis must be at least 2");

  OptimizationResult result;
  result.beta1_pinned = is_rotation_invariant(state);
  const std::size_t first_axis = result.beta1_pinned ? 1 : 0;
  const std::size_t g = options.grid_per_axis;
  const double spacing = kTwoPi / static_cast<double>(g);

  // Coarse stage.
  std::vector<AngleArray> candidates;
  std::size_t grid_points = 1;
  for (std::size_t axis = first_axis; axis < 4; ++axis) grid_points *= g;
  candidates.reserve(grid_points + g * g + 1);
  for (std::size_t idx = 0; idx < grid_points; ++idx) {
    AngleArray a{};
    std::size_t rest = idx;
    for (std::size_t axis = 4; axis-- > first_axis;) {
      a[axis] = spacing * static_cast<double>(rest % g);
      rest /= g;
    }
    candidates.push_back(a);
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < g * g; ++i) {
    AngleArray a = to_array(random_angle_config(rng));
    if (result.beta1_pinned) a[0] = 0.0;
    candidates.push_back(a);
  }
  if (options.start) candidates.push_back(to_array(*options.start));

  kernels::AngleBatch batch;
  batch.reserve(candidates.size());
  for (const auto& a : candidates) batch.push_back(to_config(a));
  const auto values = evaluate(state, batch);
  result.evaluations += values.size();

  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best_idx]) best_idx = i;
  AngleArray best = candidates[best_idx];
  double best_s = values[best_idx];
  result.trace.push_back({to_config(best), best_s});

  // Pattern search: poll ±step on each free axis, halve the step after a
  // round without improvement.
  double step = 0.5 * spacing;
  for (std::size_t iter = 0; iter < options.refine_iters; ++iter) {
    bool improved = false;
    for (std::size_t axis = first_axis; axis < 4; ++axis) {
      std::array<AngleArray, 2> polls{best, best};
      polls[0][axis] = reduce_angle(best[axis] + step);
      polls[1][axis] = reduce_angle(best[axis] - step);
      batch.clear();
      for (const auto& p : polls) batch.push_back(to_config(p));
      const auto pv = evaluate(state, batch);
      result.evaluations += pv.size();
      const std::size_t pick = pv[1] > pv[0] ? 1 : 0;
      if (pv[pick] > best_s) {
        best = polls[pick];
        best_s = pv[pick];
        improved = true;
        result.trace.push_back({to_config(best), best_s});
      }
    }
    if (!improved) step *= 0.5;
    result.history.push_back(best_s);
  }

  result.best_angles = to_config(best);
  result.best_s = best_s;
  return result;
}

SweepResult product_sweep(std::span<const ProductKets> states,
                          std::span<const AngleConfig> configs) {
  if (states.empty() || configs.empty()) {
    throw std::invalid_argument("product_sweep needs at least one state and one configuration");
  }
  const kernels::AngleBatch batch(configs);
  std::vector<double> values(batch.size());
  SweepResult result;
  bool first = true;
  for (const auto& kets : states) {
    const auto state = product_state(kets.first, kets.second);
    kernels::s_batch(state, batch.columns(), values);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (first || values[i] > result.worst_s) {
        result = {values[i], kets, configs[i]};
        first = false;
      }
    }
  }
  return result;
}

SweepResult product_adversarial_sweep(std::size_t n_states, std::size_t n_configs,
                                      std::uint64_t seed) {
  if (n_states == 0 || n_configs == 0) {
    throw std::invalid_argument("product_adversarial_sweep needs n_states, n_configs >= 1");
  }
  std::mt19937_64 rng(seed);
  SweepResult result;
  bool first = true;
  std::vector<AngleConfig> configs(n_configs);
  for (std::size_t s = 0; s < n_states; ++s) {
    ProductKets kets{random_ket(rng), random_ket(rng)};
    for (auto& c : configs) c = random_angle_config(rng);
    const auto local = product_sweep(std::span(&kets, 1), configs);
    if (first || local.worst_s > result.worst_s) {
      result = local;
      first = false;
    }
  }
  return result;
}

}  // namespace spin1bell
