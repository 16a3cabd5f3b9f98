#pragma once

#include <numbers>

namespace cxrep {

struct Complex64 {
  double re = 0.0;
  double im = 0.0;

  friend bool operator==(const Complex64&, const Complex64&) = default;
};

/// Modulus r >= 0 and angle phi in [0, 2*pi). r == 0 implies phi == 0.
struct PolarPoint {
  double r = 0.0;
  double phi = 0.0;

  friend bool operator==(const PolarPoint&, const PolarPoint&) = default;
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Quadrant-aware arctangent with results in [-pi, pi]. Port of the fdlibm
/// algorithm, so results are identical on every platform (and match
/// java.lang.StrictMath.atan2), instead of depending on the host libm.
double portable_atan2(double y, double x) noexcept;

/// sqrt(x*x + y*y) evaluated literally; hypot is used only when the sum of
/// squares overflows or loses the input to underflow.
double modulus(const Complex64& c) noexcept;

/// Throws DomainError on non-finite components.
PolarPoint to_polar(const Complex64& c);

/// x = r cos(phi), y = r sin(phi) with the host cos/sin.
Complex64 to_cartesian(const PolarPoint& p) noexcept;

}  // namespace cxrep
