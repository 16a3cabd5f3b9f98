#include "cxrep/float_bits.hpp"

namespace cxrep {

std::string to_bitstring(Nat64 n) {
  std::string out(64, '0');
  for (int i = 0; i < 64; ++i) {
    if ((n >> (63 - i)) & 1U) out[i] = '1';
  }
  return out;
}

}  // namespace cxrep
