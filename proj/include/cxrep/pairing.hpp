#pragma once

#include <utility>

#include "cxrep/float_bits.hpp"
#include "cxrep/nat128.hpp"

namespace cxrep {

using NatPair = std::pair<Nat64, Nat64>;

/// Floor square root: s*s <= n < (s+1)*(s+1).
Nat128 isqrt(Nat128 n) noexcept;

/// Cantor pairing (p+q)(p+q+1)/2 + q, exact. Throws OverflowError if the
/// result does not fit in 128 bits, which needs both inputs >= 2^63.
Nat128 cantor_pair(Nat64 p, Nat64 q);

/// Inverse of cantor_pair. Throws MalformedCode when the code lies outside
/// the image of 64-bit pairs.
NatPair cantor_unpair(Nat128 code);

/// Szudzik pairing: q*q + p if p < q, else p*p + p + q. Throws OverflowError
/// if the result does not fit in 128 bits.
Nat128 szudzik_pair(Nat64 p, Nat64 q);

/// Inverse of szudzik_pair. Every value below 2^128 is the image of some
/// 64-bit pair, so this never fails in practice; the check remains.
NatPair szudzik_unpair(Nat128 code);

/// Morton interleave. Bit i of `first` lands on bit 2i+1 of the result, bit i
/// of `second` on bit 2i.
Nat128 interleave(Nat64 first, Nat64 second) noexcept;

NatPair deinterleave(Nat128 code) noexcept;

}  // namespace cxrep
