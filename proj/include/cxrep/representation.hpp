#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cxrep/coords.hpp"
#include "cxrep/nat128.hpp"

namespace cxrep {

enum class Method {
  CartesianInterleave,
  PolarInterleave,
  PolarCantor,
  PolarSzudzik,
};

inline constexpr std::array<Method, 4> kAllMethods = {
    Method::CartesianInterleave, Method::PolarInterleave, Method::PolarCantor,
    Method::PolarSzudzik};

/// `cartesian-interleave`, `polar-interleave`, `polar-cantor`, `polar-szudzik`.
std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

inline constexpr bool is_polar(Method m) noexcept { return m != Method::CartesianInterleave; }

/// A complex number packed into one natural. The value is an opaque label.
struct Representation {
  Method method = Method::CartesianInterleave;
  Nat128 value = 0;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Throws DomainError if either component is not finite.
Representation encode(const Complex64& c, Method m);

/// Throws MalformedCode for Cantor/Szudzik codes outside the image of the
/// polar encoder's inputs.
Complex64 decode(const Representation& rep);

/// value / 10^37 rounded to nearest (ties to even). One way only.
double normalize(const Representation& rep) noexcept;
double normalize(Nat128 value) noexcept;

}  // namespace cxrep
