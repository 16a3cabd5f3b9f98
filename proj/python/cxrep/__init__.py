"""Represent complex numbers as single natural numbers and back."""

from ._core import (
    ErrorStats,
    MalformedCode,
    Method,
    ParseError,
    cantor_pair,
    cantor_unpair,
    decode,
    deinterleave,
    encode,
    format_complex,
    from_bits,
    generate,
    interleave,
    isqrt,
    normalize,
    parse_complex,
    parse_method,
    roundtrip_error,
    run_sweep,
    szudzik_pair,
    szudzik_unpair,
    to_bits,
    to_bitstring,
    to_cartesian,
    to_polar,
    trace,
)

__all__ = [
    "ErrorStats",
    "MalformedCode",
    "Method",
    "ParseError",
    "cantor_pair",
    "cantor_unpair",
    "decode",
    "deinterleave",
    "encode",
    "format_complex",
    "from_bits",
    "generate",
    "interleave",
    "isqrt",
    "normalize",
    "parse_complex",
    "parse_method",
    "roundtrip_error",
    "run_sweep",
    "szudzik_pair",
    "szudzik_unpair",
    "to_bits",
    "to_bitstring",
    "to_cartesian",
    "to_polar",
    "trace",
]
