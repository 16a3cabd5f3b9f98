#include "cxrep/pairing.hpp"

#include <bit>
#include <optional>

#include "cxrep/errors.hpp"

namespace cxrep {
namespace {

constexpr Nat128 kNat64Limit = Nat128{1} << 64;

std::optional<Nat128> checked_mul(Nat128 a, Nat128 b) noexcept {
  Nat128 out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<Nat128> checked_add(Nat128 a, Nat128 b) noexcept {
  Nat128 out;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

/// w(w+1)/2, or nullopt if it does not fit.
std::optional<Nat128> triangular(Nat128 w) noexcept {
  if (w == ~Nat128{0}) return std::nullopt;
  return (w % 2 == 0) ? checked_mul(w / 2, w + 1) : checked_mul(w, (w + 1) / 2);
}

unsigned bit_width(Nat128 n) noexcept {
  const auto hi = high64(n);
  return hi != 0 ? 64 + static_cast<unsigned>(std::bit_width(hi))
                 : static_cast<unsigned>(std::bit_width(low64(n)));
}

// Spreads the 32 bits of v onto the even bit positions of a 64-bit word.
constexpr std::uint64_t spread32(std::uint64_t v) noexcept {
  v &= 0x00000000FFFFFFFFULL;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

constexpr std::uint64_t compact32(std::uint64_t v) noexcept {
  v &= 0x5555555555555555ULL;
  v = (v | (v >> 1)) & 0x3333333333333333ULL;
  v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v >> 4)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v >> 8)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v >> 16)) & 0x00000000FFFFFFFFULL;
  return v;
}

}  // namespace

Nat128 isqrt(Nat128 n) noexcept {
  if (n < 2) return n;
  // 2^ceil(bits/2) is an upper bound on the root; Newton descends from above
  // and stops at the floor.
  Nat128 x = Nat128{1} << ((bit_width(n) + 1) / 2);
  for (;;) {
    const Nat128 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

Nat128 cantor_pair(Nat64 p, Nat64 q) {
  const Nat128 s = Nat128{p} + q;
  const auto t = triangular(s);
  const auto c = t ? checked_add(*t, q) : std::nullopt;
  if (!c) throw OverflowError("Cantor pair exceeds 128 bits");
  return *c;
}

NatPair cantor_unpair(Nat128 code) {
  // w is the largest integer with w(w+1)/2 <= code, i.e.
  // floor((sqrt(8*code + 1) - 1) / 2). 8*code overflows for large codes, so
  // start from 2*isqrt(code/2) ~ sqrt(2*code) and correct by stepping.
  Nat128 w = 2 * isqrt(code / 2);
  while (w > 0) {
    const auto t = triangular(w);
    if (t && *t <= code) break;
    --w;
  }
  for (;;) {
    const auto t = triangular(w + 1);
    if (!t || *t > code) break;
    ++w;
  }
  const Nat128 t = *triangular(w);
  const Nat128 q = code - t;
  if (q > w) throw MalformedCode("Cantor code has inconsistent diagonal");
  const Nat128 p = w - q;
  if (p >= kNat64Limit || q >= kNat64Limit) {
    throw MalformedCode("Cantor code does not decode to 64-bit components");
  }
  return {static_cast<Nat64>(p), static_cast<Nat64>(q)};
}

Nat128 szudzik_pair(Nat64 p, Nat64 q) {
  const Nat128 wp = p;
  const Nat128 wq = q;
  // p == q takes the second branch.
  const auto s = (p < q) ? checked_add(wq * wq, wp) : checked_add(wp * wp + wp, wq);
  if (!s) throw OverflowError("Szudzik pair exceeds 128 bits");
  return *s;
}

NatPair szudzik_unpair(Nat128 code) {
  const Nat128 k = isqrt(code);
  const Nat128 d = code - k * k;
  const Nat128 p = d < k ? d : k;
  const Nat128 q = d < k ? k : d - k;
  if (p >= kNat64Limit || q >= kNat64Limit) {
    throw MalformedCode("Szudzik code does not decode to 64-bit components");
  }
  return {static_cast<Nat64>(p), static_cast<Nat64>(q)};
}

Nat128 interleave(Nat64 first, Nat64 second) noexcept {
  const std::uint64_t lo = (spread32(first) << 1) | spread32(second);
  const std::uint64_t hi = (spread32(first >> 32) << 1) | spread32(second >> 32);
  return make_nat128(hi, lo);
}

NatPair deinterleave(Nat128 code) noexcept {
  const std::uint64_t lo = low64(code);
  const std::uint64_t hi = high64(code);
  const Nat64 first = (compact32(hi >> 1) << 32) | compact32(lo >> 1);
  const Nat64 second = (compact32(hi) << 32) | compact32(lo);
  return {first, second};
}

}  // namespace cxrep
