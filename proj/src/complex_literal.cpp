#include "cxrep/complex_literal.hpp"

#include <charconv>
#include <cmath>

#include "cxrep/errors.hpp"
#include "cxrep/experiment.hpp"

namespace cxrep {
namespace {

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

/// Length of the longest prefix of `s` matching
/// (digits [. digits*] | . digits) [(e|E) [sign] digits].
std::size_t scan_unsigned_number(std::string_view s) {
  std::size_t i = 0;
  std::size_t mantissa_digits = 0;
  while (i < s.size() && is_digit(s[i])) ++i, ++mantissa_digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) ++i, ++mantissa_digits;
  }
  if (mantissa_digits == 0) return 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    const std::size_t exp_start = j;
    while (j < s.size() && is_digit(s[j])) ++j;
    if (j > exp_start) i = j;
  }
  return i;
}

/// Parses a signed component occupying all of `part`, which starts at
/// `offset` in the original text. An empty magnitude is allowed only for an
/// imaginary coefficient and means 1.
double parse_component(std::string_view part, std::size_t offset, bool imaginary) {
  bool negative = false;
  std::size_t pos = 0;
  if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
    negative = part[0] == '-';
    pos = 1;
  }
  const std::string_view magnitude = part.substr(pos);
  double value = 1.0;
  if (magnitude.empty()) {
    if (!imaginary) throw ParseError("expected a number", offset + pos);
  } else {
    const std::size_t len = scan_unsigned_number(magnitude);
    if (len == 0) throw ParseError("expected a number", offset + pos);
    if (len != magnitude.size()) throw ParseError("unexpected character", offset + pos + len);
    const auto res = std::from_chars(magnitude.data(), magnitude.data() + len, value);
    if (res.ec != std::errc{} || !std::isfinite(value)) {
      throw ParseError("component outside the binary64 range", offset + pos);
    }
  }
  return negative ? -value : value;
}

}  // namespace

Complex64 parse_complex(std::string_view text) {
  if (text.empty()) throw ParseError("empty complex literal", 0);
  if (text.back() != 'i') return {parse_component(text, 0, false), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_component(body, 0, true)};
  return {parse_component(body.substr(0, split), 0, false),
          parse_component(body.substr(split), split, true)};
}

std::string format_complex(const Complex64& c) {
  std::string out = format_double(c.re);
  out += std::signbit(c.im) ? '-' : '+';
  out += format_double(std::fabs(c.im));
  out += 'i';
  return out;
}

}  // namespace cxrep
