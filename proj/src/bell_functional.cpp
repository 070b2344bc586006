#include "spin1bell/bell_functional.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spin1bell {

namespace {

double sin4_half(Angle a) {
  const double s = std::sin(0.5 * a.normalized());
  const double s2 = s * s;
  return s2 * s2;
}

double cos4_half(Angle a) {
  const double c = std::cos(0.5 * a.normalized());
  const double c2 = c * c;
  return c2 * c2;
}

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(v));
  }
}

}  // namespace

SBreakdown s_value(const SpinState& state, const AngleConfig& angles) {
  const auto ta = joint_prob_table(state, angles.beta1, angles.beta2);
  const auto tb = joint_prob_table(state, angles.beta1, angles.beta2_prime);
  const auto tc = joint_prob_table(state, angles.beta1_prime, angles.beta2_prime);
  const auto td = joint_prob_table(state, angles.beta1_prime, angles.beta2);

  SBreakdown out;
  out.p11_a = ta.at(Outcome::plus, Outcome::plus);
  out.p11_b = tb.at(Outcome::plus, Outcome::plus);
  out.p11_c = tc.at(Outcome::plus, Outcome::plus);
  out.block = td.at(Outcome::zero, Outcome::zero) + td.at(Outcome::zero, Outcome::minus) +
              td.at(Outcome::minus, Outcome::zero) + td.at(Outcome::minus, Outcome::minus);
  out.s = out.p11_a - out.p11_b + out.p11_c + out.block;
  return out;
}

double s_singlet_closed_form(const AngleConfig& a) {
  const double p11_a = sin4_half(a.beta1 - a.beta2) / 3.0;
  const double p11_b = sin4_half(a.beta1 - a.beta2_prime) / 3.0;
  const double p11_c = sin4_half(a.beta1_prime - a.beta2_prime) / 3.0;
  const double block = (1.0 + sin4_half(a.beta1_prime - a.beta2)) / 3.0;
  return p11_a - p11_b + p11_c + block;
}

double s_product_closed_form(const AngleConfig& a) {
  const double x = cos4_half(a.beta1);
  const double x_prime = cos4_half(a.beta1_prime);
  const double y = sin4_half(a.beta2);
  const double y_prime = sin4_half(a.beta2_prime);
  return x * y - x * y_prime + x_prime * y_prime + (1.0 - x_prime) * (1.0 - y);
}

SpinState product_reference_state() {
  return product_state(Ket{1.0, 0.0, 0.0}, Ket{0.0, 0.0, 1.0});
}

double ch_lemma_value(const ChLemmaInputs& in) {
  const auto in_box = [](double v, double upper) { return v >= 0.0 && v <= upper; };
  if (!(std::isfinite(in.X) && std::isfinite(in.Y)) || !in_box(in.x, in.X) ||
      !in_box(in.x_prime, in.X) || !in_box(in.y, in.Y) || !in_box(in.y_prime, in.Y)) {
    throw std::invalid_argument("ch_lemma_value requires 0 <= x, x' <= X and 0 <= y, y' <= Y");
  }
  return in.x * in.y - in.x * in.y_prime + in.x_prime * in.y + in.x_prime * in.y_prime -
         in.x_prime * in.Y - in.X * in.y;
}

double ch_form_value(double x, double x_prime, double y, double y_prime) {
  require_unit_interval(x, "x");
  require_unit_interval(x_prime, "x'");
  require_unit_interval(y, "y");
  require_unit_interval(y_prime, "y'");
  return x * y - x * y_prime + x_prime * y_prime + (1.0 - x_prime) * (1.0 - y);
}

}  // namespace spin1bell
