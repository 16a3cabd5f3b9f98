#include "cxrep/nat128.hpp"

#include <algorithm>
#include <limits>

#include "cxrep/errors.hpp"

namespace cxrep {

std::string to_decimal(Nat128 v) {
  if (v == 0) return "0";
  std::string out;
  // Peel 19 digits at a time so most of the work is 64-bit division.
  constexpr std::uint64_t kChunk = 10'000'000'000'000'000'000ULL;
  while (v != 0) {
    auto chunk = static_cast<std::uint64_t>(v % kChunk);
    v /= kChunk;
    for (int i = 0; i < 19; ++i) {
      out.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
      if (v == 0 && chunk == 0) break;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Nat128 parse_nat128(std::string_view text) {
  if (text.empty()) throw ParseError("expected a decimal natural", 0);
  constexpr Nat128 kMax = ~Nat128{0};
  Nat128 v = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') throw ParseError("unexpected character in decimal natural", i);
    const auto digit = static_cast<unsigned>(ch - '0');
    if (v > (kMax - digit) / 10) throw ParseError("decimal natural does not fit in 128 bits", i);
    v = v * 10 + digit;
  }
  return v;
}

std::uint64_t parse_nat64(std::string_view text) {
  const Nat128 v = parse_nat128(text);
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw ParseError("decimal natural does not fit in 64 bits", text.size() - 1);
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace cxrep
