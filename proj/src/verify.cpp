#include "spin1bell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spin1bell/angle_optimizer.hpp"
#include "spin1bell/bell_functional.hpp"
#include "spin1bell/kernels.hpp"
#include "spin1bell/lhv_oracle.hpp"
#include "spin1bell/spin_core.hpp"

namespace spin1bell {

namespace {

const Matrix3 kIdentity{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};

CheckResult bounded(std::string name, double worst, double tolerance, std::string detail) {
  return {std::move(name), worst <= tolerance, worst, tolerance, std::move(detail)};
}

template <class Rng>
Angle random_angle(Rng& rng) {
  return Angle(std::uniform_real_distribution<double>(0.0, kTwoPi)(rng));
}

template <class Rng>
SpinState random_state(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Amplitudes amps;
  double norm = 0.0;
  for (auto& a : amps) {
    const double re = n(rng);
    const double im = n(rng);
    a = Complex(re, im);
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return SpinState::from_amplitudes(amps);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;

  {
    double ortho = 0.0;
    double det = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto d = rotation_matrix(random_angle(rng));
      ortho = std::max(ortho, max_abs_diff((d.transposed() * d).entries(), kIdentity));
      det = std::max(det, std::abs(d.determinant() - 1.0));
    }
    out.push_back(bounded("rotation_orthogonality", ortho, 1e-12, "1000 random angles"));
    out.push_back(bounded("rotation_determinant", det, 1e-12, "1000 random angles"));
    out.push_back(bounded("rotation_identity", max_abs_diff(rotation_matrix(Angle{}).entries(),
                                                            kIdentity),
                          0.0, "D(0) == I exactly"));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Angle a = random_angle(rng);
      const Angle b = random_angle(rng);
      worst = std::max(worst, max_abs_diff((rotation_matrix(a) * rotation_matrix(b)).entries(),
                                           rotation_matrix(a + b).entries()));
    }
    out.push_back(bounded("rotation_composition", worst, 1e-11, "1000 random pairs"));
  }
  {
    const auto singlet = singlet_state();
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Angle b = random_angle(rng);
      const auto rotated = rotate_state(singlet, b, b);
      for (std::size_t k = 0; k < kStateDim; ++k)
        worst = std::max(worst, std::abs(rotated.amplitudes()[k] - singlet.amplitudes()[k]));
    }
    out.push_back(bounded("singlet_rotational_invariance", worst, 1e-12, "100 random angles"));
  }
  {
    double sum_err = 0.0;
    double min_entry = 1.0;
    for (int i = 0; i < 1000; ++i) {
      const auto state = random_state(rng);
      const auto table = joint_prob_table(state, random_angle(rng), random_angle(rng));
      sum_err = std::max(sum_err, std::abs(table.total() - 1.0));
      for (const auto& row : table.probs)
        for (double p : row) min_entry = std::min(min_entry, p);
    }
    out.push_back(bounded("table_normalization", sum_err, 1e-12, "1000 random states/settings"));
    out.push_back({"table_nonnegativity", min_entry >= -1e-14, min_entry, -1e-14,
                   "smallest entry over 1000 tables"});
  }
  {
    const auto singlet = singlet_state();
    double p11 = 0.0;
    double block = 0.0;
    double expansion = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Angle b1 = random_angle(rng);
      const Angle b2 = random_angle(rng);
      const auto t = joint_prob_table(singlet, b1, b2);
      const double s4 = std::pow(std::sin(0.5 * (b1 - b2).normalized()), 4);
      p11 = std::max(p11, std::abs(t.at(Outcome::plus, Outcome::plus) - s4 / 3.0));
      const double blk = t.at(Outcome::zero, Outcome::zero) + t.at(Outcome::zero, Outcome::minus) +
                         t.at(Outcome::minus, Outcome::zero) +
                         t.at(Outcome::minus, Outcome::minus);
      block = std::max(block, std::abs(blk - (1.0 + s4) / 3.0));
      const auto coeffs = singlet_rotated_expansion(b1, b2);
      for (std::size_t k = 0; k < kStateDim; ++k)
        expansion = std::max(expansion, std::abs(coeffs[k] * coeffs[k] - t.probs[k / 3][k % 3]));
    }
    out.push_back(bounded("singlet_p11_closed_form", p11, 1e-12, "1000 random settings"));
    out.push_back(bounded("singlet_block_identity", block, 1e-12, "1000 random settings"));
    out.push_back(bounded("singlet_expansion_consistency", expansion, 1e-12,
                          "1000 random settings"));
  }
  {
    const auto singlet = singlet_state();
    double translation = 0.0;
    double closed = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const auto cfg = random_angle_config(rng);
      const double s = s_value(singlet, cfg).s;
      closed = std::max(closed, std::abs(s_singlet_closed_form(cfg) - s));
      if (i < 1000) {
        const double shifted = s_value(singlet, cfg.shifted(random_angle(rng))).s;
        translation = std::max(translation, std::abs(shifted - s));
      }
    }
    out.push_back(bounded("singlet_translation_invariance", translation, 1e-12,
                          "1000 random configurations and shifts"));
    out.push_back(bounded("singlet_closed_form_equivalence", closed, 1e-12,
                          "10000 random configurations"));
  }
  {
    const auto bound = classical_bound();
    out.push_back({"classical_bound", bound.max_s == 1.0, bound.max_s, 1.0,
                   "max over 256 deterministic strategies, witness " + bound.argmax.to_string()});
  }
  {
    const auto singlet = singlet_state();
    kernels::AngleBatch batch;
    for (int i = 0; i < 1000; ++i) batch.push_back(random_angle_config(rng));
    std::vector<double> ref(batch.size()), fast(batch.size());
    kernels::s_batch(kernels::Backend::scalar, singlet, batch.columns(), ref);
    kernels::s_batch(singlet, batch.columns(), fast);
    double worst = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) worst = std::max(worst, std::abs(ref[i] - fast[i]));
    out.push_back(bounded("kernel_equivalence", worst, 1e-12,
                          std::string("scalar vs ") +
                              std::string(kernels::backend_name(kernels::best_backend()))));
  }
  return out;
}

}  // namespace spin1bell
