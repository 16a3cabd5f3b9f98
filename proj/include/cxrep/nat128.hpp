#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cxrep {

/// Paired / interleaved representation values. Always in [0, 2^128).
using Nat128 = unsigned __int128;

inline constexpr Nat128 make_nat128(std::uint64_t hi, std::uint64_t lo) noexcept {
  return (static_cast<Nat128>(hi) << 64) | lo;
}

inline constexpr std::uint64_t high64(Nat128 v) noexcept { return static_cast<std::uint64_t>(v >> 64); }
inline constexpr std::uint64_t low64(Nat128 v) noexcept { return static_cast<std::uint64_t>(v); }

/// Plain decimal, no separators, no sign.
std::string to_decimal(Nat128 v);

/// Parses a plain decimal natural. Throws ParseError on empty input, any
/// non-digit character, or a value >= 2^128.
Nat128 parse_nat128(std::string_view text);

/// Same grammar as parse_nat128, limited to [0, 2^64).
std::uint64_t parse_nat64(std::string_view text);

}  // namespace cxrep
