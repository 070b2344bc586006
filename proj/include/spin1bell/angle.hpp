#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spin1bell {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle in radians to [0, 2π).
inline double reduce_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2π
  if (r >= kTwoPi) r = 0.0;
  return r;
}

inline double degrees_to_radians(double degrees) {
  return degrees * (std::numbers::pi / 180.0);
}

inline double radians_to_degrees(double radians) {
  return radians * (180.0 / std::numbers::pi);
}

/// Measurement direction in the x-z plane, stored as a rotation about y in
/// radians. Construction rejects non-finite values.
class Angle {
 public:
  constexpr Angle() = default;

  explicit Angle(double radians) : radians_(radians) {
    if (!std::isfinite(radians)) {
      throw std::invalid_argument("angle must be finite, got " +
                                  std::to_string(radians));
    }
  }

  static Angle from_degrees(double degrees) {
    if (!std::isfinite(degrees)) {
      throw std::invalid_argument("angle must be finite, got " +
                                  std::to_string(degrees));
    }
    return Angle(degrees_to_radians(degrees));
  }

  double radians() const { return radians_; }
  double degrees() const { return radians_to_degrees(radians_); }

  /// Value reduced to [0, 2π); reduction is idempotent.
  double normalized() const { return reduce_angle(radians_); }

  friend Angle operator+(Angle a, Angle b) { return Angle(a.radians_ + b.radians_); }
  friend Angle operator-(Angle a, Angle b) { return Angle(a.radians_ - b.radians_); }
  friend Angle operator*(double k, Angle a) { return Angle(k * a.radians_); }
  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  double radians_ = 0.0;
};

}  // namespace spin1bell
