#include "cxrep/coords.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "cxrep/errors.hpp"
#include "cxrep/float_bits.hpp"

namespace cxrep {
namespace {

// fdlibm s_atan.c / e_atan2.c constants (Sun Microsystems, freely
// redistributable). Values written as hex literals so they are bit-exact.
constexpr double kAtanHi[] = {0x1.dac670561bb4fp-2, 0x1.921fb54442d18p-1,
                              0x1.f730bd281f69bp-1, 0x1.921fb54442d18p+0};
constexpr double kAtanLo[] = {0x1.a2b7f222f65e2p-56, 0x1.1a62633145c07p-55,
                              0x1.007887af0cbbdp-56, 0x1.1a62633145c07p-54};
constexpr double kAtanPoly[] = {
    0x1.555555555550dp-2,  -0x1.999999998ebc4p-3, 0x1.24924920083ffp-3,
    -0x1.c71c6fe231671p-4, 0x1.745cdc54c206ep-4,  -0x1.3b0f2af749a6dp-4,
    0x1.10d66a0d03d51p-4,  -0x1.dde2d52defd9ap-5, 0x1.97b4b24760debp-5,
    -0x1.2b4442c6a6c2fp-5, 0x1.0ad3ae322da11p-6};
constexpr double kPi = 0x1.921fb54442d18p+1;
constexpr double kPiLo = 0x1.1a62633145c07p-53;
constexpr double kPiOver2 = 0x1.921fb54442d18p+0;
constexpr double kPiOver4 = 0x1.921fb54442d18p-1;

std::int32_t high_word(double v) noexcept { return static_cast<std::int32_t>(to_bits(v) >> 32); }

double fdlibm_atan(double x) noexcept {
  const std::int32_t hx = high_word(x);
  const std::int32_t ix = hx & 0x7fffffff;
  int id;
  if (ix >= 0x44100000) {  // |x| >= 2^66
    if (std::isnan(x)) return x + x;
    return hx > 0 ? kAtanHi[3] + kAtanLo[3] : -kAtanHi[3] - kAtanLo[3];
  }
  if (ix < 0x3fdc0000) {  // |x| < 0.4375
    if (ix < 0x3e200000) return x;  // |x| < 2^-29
    id = -1;
  } else {
    x = std::fabs(x);
    if (ix < 0x3ff30000) {      // |x| < 1.1875
      if (ix < 0x3fe60000) {    // 7/16 <= |x| < 11/16
        id = 0;
        x = (2.0 * x - 1.0) / (2.0 + x);
      } else {  // 11/16 <= |x| < 19/16
        id = 1;
        x = (x - 1.0) / (x + 1.0);
      }
    } else {
      if (ix < 0x40038000) {  // |x| < 2.4375
        id = 2;
        x = (x - 1.5) / (1.0 + 1.5 * x);
      } else {  // 2.4375 <= |x| < 2^66
        id = 3;
        x = -1.0 / x;
      }
    }
  }
  const double* aT = kAtanPoly;
  const double z = x * x;
  const double w = z * z;
  const double s1 = z * (aT[0] + w * (aT[2] + w * (aT[4] + w * (aT[6] + w * (aT[8] + w * aT[10])))));
  const double s2 = w * (aT[1] + w * (aT[3] + w * (aT[5] + w * (aT[7] + w * aT[9]))));
  if (id < 0) return x - x * (s1 + s2);
  const double r = kAtanHi[id] - ((x * (s1 + s2) - kAtanLo[id]) - x);
  return hx < 0 ? -r : r;
}

}  // namespace

double portable_atan2(double y, double x) noexcept {
  if (std::isnan(x) || std::isnan(y)) return x + y;
  if (x == 1.0) return fdlibm_atan(y);

  const std::int32_t hx = high_word(x);
  const std::int32_t hy = high_word(y);
  const std::int32_t ix = hx & 0x7fffffff;
  const std::int32_t iy = hy & 0x7fffffff;
  const int m = (std::signbit(y) ? 1 : 0) | (std::signbit(x) ? 2 : 0);

  if (y == 0.0) {
    switch (m) {
      case 0:
      case 1: return y;
      case 2: return kPi;
      default: return -kPi;
    }
  }
  if (x == 0.0) return hy < 0 ? -kPiOver2 : kPiOver2;

  if (std::isinf(x)) {
    if (std::isinf(y)) {
      switch (m) {
        case 0: return kPiOver4;
        case 1: return -kPiOver4;
        case 2: return 3.0 * kPiOver4;
        default: return -3.0 * kPiOver4;
      }
    }
    switch (m) {
      case 0: return 0.0;
      case 1: return -0.0;
      case 2: return kPi;
      default: return -kPi;
    }
  }
  if (std::isinf(y)) return hy < 0 ? -kPiOver2 : kPiOver2;

  const std::int32_t k = (iy - ix) >> 20;
  double z;
  if (k > 60) {
    z = kPiOver2 + 0.5 * kPiLo;  // |y/x| > 2^60
  } else if (hx < 0 && k < -60) {
    z = 0.0;  // |y|/x < -2^60
  } else {
    z = fdlibm_atan(std::fabs(y / x));
  }
  switch (m) {
    case 0: return z;
    case 1: return -z;
    case 2: return kPi - (z - kPiLo);
    default: return (z - kPiLo) - kPi;
  }
}

double modulus(const Complex64& c) noexcept {
  const double sum = c.re * c.re + c.im * c.im;
  if (std::isnormal(sum)) return std::sqrt(sum);
  if (c.re == 0.0 && c.im == 0.0) return 0.0;
  // Squares overflowed or underflowed; only hypot keeps the magnitude.
  return std::hypot(c.re, c.im);
}

PolarPoint to_polar(const Complex64& c) {
  if (!std::isfinite(c.re) || !std::isfinite(c.im)) {
    throw DomainError("polar conversion needs finite components");
  }
  const double r = modulus(c);
  if (r == 0.0) return {0.0, 0.0};
  double phi = portable_atan2(c.im, c.re);
  if (phi < 0.0) {
    phi += kTwoPi;
    // A tiny negative angle can round up to 2*pi itself; 0 is the nearest
    // angle inside the range.
    if (phi >= kTwoPi) phi = 0.0;
  }
  if (phi == 0.0) phi = 0.0;  // drop the sign of -0.0
  return {r, phi};
}

Complex64 to_cartesian(const PolarPoint& p) noexcept {
  return {p.r * std::cos(p.phi), p.r * std::sin(p.phi)};
}

}  // namespace cxrep
