#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace cxrep {

/// IEEE 754 binary64 bit pattern read as an unsigned natural. Bit 63 is the
/// sign, bits 62..52 the biased exponent, bits 51..0 the significand.
using Nat64 = std::uint64_t;

inline constexpr Nat64 to_bits(double v) noexcept { return std::bit_cast<Nat64>(v); }

inline constexpr double from_bits(Nat64 n) noexcept { return std::bit_cast<double>(n); }

/// Fixed-width 64 character rendering, most significant bit first.
std::string to_bitstring(Nat64 n);

}  // namespace cxrep
