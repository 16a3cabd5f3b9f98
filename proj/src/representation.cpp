#include "cxrep/representation.hpp"

#include <cmath>

#include "cxrep/errors.hpp"
#include "cxrep/float_bits.hpp"
#include "cxrep/pairing.hpp"

namespace cxrep {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::CartesianInterleave: return "cartesian-interleave";
    case Method::PolarInterleave: return "polar-interleave";
    case Method::PolarCantor: return "polar-cantor";
    case Method::PolarSzudzik: return "polar-szudzik";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (const Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

Representation encode(const Complex64& c, Method m) {
  if (!std::isfinite(c.re) || !std::isfinite(c.im)) {
    throw DomainError("cannot encode a complex number with non-finite components");
  }
  if (m == Method::CartesianInterleave) {
    return {m, interleave(to_bits(c.re), to_bits(c.im))};
  }
  const PolarPoint polar = to_polar(c);
  const Nat64 r = to_bits(polar.r);
  const Nat64 phi = to_bits(polar.phi);
  switch (m) {
    case Method::PolarInterleave: return {m, interleave(r, phi)};
    case Method::PolarCantor: return {m, cantor_pair(r, phi)};
    case Method::PolarSzudzik: return {m, szudzik_pair(r, phi)};
    case Method::CartesianInterleave: break;
  }
  return {m, 0};
}

Complex64 decode(const Representation& rep) {
  NatPair parts;
  switch (rep.method) {
    case Method::CartesianInterleave: {
      const auto [x, y] = deinterleave(rep.value);
      return {from_bits(x), from_bits(y)};
    }
    case Method::PolarInterleave: parts = deinterleave(rep.value); break;
    case Method::PolarCantor: parts = cantor_unpair(rep.value); break;
    case Method::PolarSzudzik: parts = szudzik_unpair(rep.value); break;
  }
  return to_cartesian({from_bits(parts.first), from_bits(parts.second)});
}

double normalize(Nat128 value) noexcept {
  if (value == 0) return 0.0;
  // 10^37 < 2^123, so the integer quotient is below 35 and doubling a
  // remainder never overflows. Long division produces quotient bits until 55
  // significant bits are available; the remainder is the sticky bit.
  constexpr Nat128 kDivisor = [] {
    Nat128 d = 1;
    for (int i = 0; i < 37; ++i) d *= 10;
    return d;
  }();
  Nat128 mantissa = value / kDivisor;
  Nat128 rem = value % kDivisor;
  int frac_bits = 0;
  while (mantissa < (Nat128{1} << 55)) {
    rem <<= 1;
    mantissa <<= 1;
    if (rem >= kDivisor) {
      rem -= kDivisor;
      mantissa |= 1;
    }
    ++frac_bits;
  }
  const bool sticky = rem != 0;

  int shift = 0;
  while ((mantissa >> shift) >= (Nat128{1} << 53)) ++shift;
  const Nat128 kept = mantissa >> shift;
  const Nat128 dropped = mantissa & ((Nat128{1} << shift) - 1);
  const Nat128 half = Nat128{1} << (shift - 1);
  std::uint64_t rounded = static_cast<std::uint64_t>(kept);
  if (dropped > half || (dropped == half && (sticky || (rounded & 1U) != 0))) ++rounded;
  return std::ldexp(static_cast<double>(rounded), shift - frac_bits);
}

double normalize(const Representation& rep) noexcept { return normalize(rep.value); }

}  // namespace cxrep
