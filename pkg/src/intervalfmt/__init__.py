"""Readable, enclosure-preserving decimal notation for floating-point intervals."""

from .binconv import (
    BINARY32,
    BINARY64,
    REDUCED8,
    BinaryFloat,
    BinaryFormat,
    BinaryInterval,
    ConversionOverflow,
    from_decimal_directed,
    from_decimal_nearest,
    to_exact_decimal,
)
from .decnum import DecimalNumeral, Rounding, round_at, round_directed, uld
from .factoring import FactoredForm, Style, factor, normalize_scale, render, single_number, unfactor
from .infoyield import Policy, analyze, marginal_yield, select_digits, uncertainty
from .interval_model import (
    CenterRadius,
    DecimalInterval,
    available_digits,
    outward_decimal,
    pyramid,
    to_center_radius,
)
from .notation_parser import ConventionMode, ParseError, parse, parse_interval, to_decimal_interval, to_interval

__all__ = [
    "BINARY32", "BINARY64", "REDUCED8", "BinaryFloat", "BinaryFormat", "BinaryInterval",
    "ConversionOverflow", "from_decimal_directed", "from_decimal_nearest", "to_exact_decimal",
    "DecimalNumeral", "Rounding", "round_at", "round_directed", "uld",
    "FactoredForm", "Style", "factor", "normalize_scale", "render", "single_number", "unfactor",
    "Policy", "analyze", "marginal_yield", "select_digits", "uncertainty",
    "CenterRadius", "DecimalInterval", "available_digits", "outward_decimal", "pyramid", "to_center_radius",
    "ConventionMode", "ParseError", "parse", "parse_interval", "to_decimal_interval", "to_interval",
]
