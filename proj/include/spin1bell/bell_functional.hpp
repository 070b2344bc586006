#pragma once

// The three-outcome Bell functional
//
//   S = P11(b1, b2) - P11(b1, b2') + P11(b1', b2')
//       + [P00 + P0- + P-0 + P--](b1', b2)
//
// whose local-hidden-variable bound is S <= 1, together with the closed forms
// used to validate it and the Clauser-Horne lemma it rests on.

#include "spin1bell/angle.hpp"
#include "spin1bell/spin_core.hpp"

namespace spin1bell {

/// Analyzer settings: (beta1, beta1') for particle 1, (beta2, beta2') for particle 2.
struct AngleConfig {
  Angle beta1;
  Angle beta1_prime;
  Angle beta2;
  Angle beta2_prime;

  static AngleConfig from_degrees(double b1, double b1p, double b2, double b2p) {
    return {Angle::from_degrees(b1), Angle::from_degrees(b1p), Angle::from_degrees(b2),
            Angle::from_degrees(b2p)};
  }

  /// Every angle shifted by delta.
  AngleConfig shifted(Angle delta) const {
    return {beta1 + delta, beta1_prime + delta, beta2 + delta, beta2_prime + delta};
  }

  friend bool operator==(const AngleConfig&, const AngleConfig&) = default;
};

/// The family β1 = 0, β1' = 2t, β2 = t, β2' = 3t.
inline AngleConfig family_config(Angle t) {
  return {Angle{}, 2.0 * t, t, 3.0 * t};
}

/// Terms of S. p11_b is stored as a probability; it enters S with a minus sign.
struct SBreakdown {
  double p11_a = 0.0;  // P11(b1, b2)
  double p11_b = 0.0;  // P11(b1, b2')
  double p11_c = 0.0;  // P11(b1', b2')
  double block = 0.0;  // P00 + P0- + P-0 + P-- at (b1', b2)
  double s = 0.0;
};

struct ChLemmaInputs {
  double x = 0.0;
  double x_prime = 0.0;
  double X = 0.0;
  double y = 0.0;
  double y_prime = 0.0;
  double Y = 0.0;
};

/// S from full joint probability tables; valid for any pure two-particle state.
SBreakdown s_value(const SpinState& state, const AngleConfig& angles);

/// S for the singlet assembled from (1/3)sin⁴(Δ/2) and (1/3)[1 + sin⁴(Δ/2)].
double s_singlet_closed_form(const AngleConfig& angles);

/// S for |+1> ⊗ |-1>:
///   cos⁴(b1/2)sin⁴(b2/2) - cos⁴(b1/2)sin⁴(b2'/2) + cos⁴(b1'/2)sin⁴(b2'/2)
///   + (1 - cos⁴(b1'/2))(1 - sin⁴(b2/2))
double s_product_closed_form(const AngleConfig& angles);

/// The state whose outcome statistics match s_product_closed_form.
SpinState product_reference_state();

/// xy - xy' + x'y + x'y' - x'Y - Xy, which lies in [-XY, 0] inside the box.
/// Throws std::invalid_argument if any of 0 <= x,x' <= X, 0 <= y,y' <= Y fails.
double ch_lemma_value(const ChLemmaInputs& in);

/// xy - xy' + x'y' + (1 - x')(1 - y); at most 1 for inputs in [0, 1].
double ch_form_value(double x, double x_prime, double y, double y_prime);

}  // namespace spin1bell
