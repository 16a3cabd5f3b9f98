#pragma once

#include <string>
#include <string_view>

#include "cxrep/coords.hpp"

namespace cxrep {

/// Parses `<real><sign><imag>i`, a pure real (`3.5`) or a pure imaginary
/// (`2i`, `-i`). Components use decimal or scientific notation and are
/// rounded to nearest. No whitespace is allowed. Throws ParseError.
Complex64 parse_complex(std::string_view text);

/// Canonical rendering: shortest roundtrip components, explicit sign before
/// the imaginary part, trailing `i`. Signed zeros survive a reparse.
std::string format_complex(const Complex64& c);

}  // namespace cxrep
