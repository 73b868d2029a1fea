"""Exact and directed conversion between radix-2 floats and decimal numerals.

Everything runs on Python integers.  A float is
``sign * significand * 2**(exponent - significand_bits + 1)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .decnum import DOWN, NEAREST, UP, DecimalNumeral, Rounding, round_quotient


@dataclass(frozen=True)
class BinaryFormat:
    significand_bits: int = 53
    min_exponent: int = -1022
    max_exponent: int = 1023

    def __post_init__(self):
        if self.significand_bits < 2:
            raise ValueError("significand_bits must be at least 2")
        if self.min_exponent >= self.max_exponent:
            raise ValueError("min_exponent must be below max_exponent")

    @property
    def hidden_bit(self) -> int:
        return 1 << (self.significand_bits - 1)

    @property
    def max_significand(self) -> int:
        return (1 << self.significand_bits) - 1

    @property
    def hex_digits(self) -> int:
        return (self.significand_bits + 2) // 4

    def max_finite(self, sign: int = 1) -> BinaryFloat:
        return BinaryFloat(sign, self.max_significand, self.max_exponent, self)

    def min_subnormal(self, sign: int = 1) -> BinaryFloat:
        return BinaryFloat(sign, 1, self.min_exponent, self)

    def zero(self) -> BinaryFloat:
        return BinaryFloat(1, 0, self.min_exponent, self)


BINARY64 = BinaryFormat(53, -1022, 1023)
BINARY32 = BinaryFormat(24, -126, 127)
# 8-bit significand with a half-precision exponent range: small enough to
# enumerate every value.
REDUCED8 = BinaryFormat(8, -14, 15)

FORMATS = {"binary64": BINARY64, "binary32": BINARY32, "reduced": REDUCED8}


def format_by_name(name: str) -> BinaryFormat:
    """Look up a named format, or parse ``bits,emin,emax``."""
    if name in FORMATS:
        return FORMATS[name]
    try:
        bits, emin, emax = (int(x) for x in name.split(","))
    except ValueError:
        raise ValueError(f"unknown binary format {name!r}") from None
    return BinaryFormat(bits, emin, emax)


class ConversionOverflow(OverflowError):
    """No finite float exists on the requested side of a decimal value."""

    def __init__(self, direction: Rounding, message: str = ""):
        self.direction = direction
        super().__init__(message or f"overflow rounding {direction.value}")


@dataclass(frozen=True)
class BinaryFloat:
    sign: int
    significand: int
    exponent: int
    fmt: BinaryFormat = BINARY64

    def __post_init__(self):
        f = self.fmt
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.exponent == f.max_exponent + 1:
            if self.significand != 0:
                raise ValueError("infinity carries a zero significand")
            return
        if not f.min_exponent <= self.exponent <= f.max_exponent:
            raise ValueError(f"exponent {self.exponent} outside format range")
        if not 0 <= self.significand <= f.max_significand:
            raise ValueError("significand out of range")
        if self.significand < f.hidden_bit and self.exponent != f.min_exponent:
            raise ValueError("unnormalized significand above the minimum exponent")
        if self.significand == 0:
            object.__setattr__(self, "sign", 1)

    @classmethod
    def infinity(cls, sign: int = 1, fmt: BinaryFormat = BINARY64) -> BinaryFloat:
        return cls(sign, 0, fmt.max_exponent + 1, fmt)

    @property
    def is_infinite(self) -> bool:
        return self.exponent > self.fmt.max_exponent

    @property
    def is_zero(self) -> bool:
        return self.significand == 0 and not self.is_infinite

    @property
    def is_subnormal(self) -> bool:
        return 0 < self.significand < self.fmt.hidden_bit

    @property
    def quantum_exponent(self) -> int:
        return self.exponent - self.fmt.significand_bits + 1

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinite value has no exact fraction")
        q = self.quantum_exponent
        m = self.sign * self.significand
        return Fraction(m << q) if q >= 0 else Fraction(m, 1 << -q)

    def to_float(self) -> float:
        if self.is_infinite:
            return math.copysign(math.inf, self.sign)
        return float(self.to_fraction())

    @classmethod
    def from_float(cls, x: float) -> BinaryFloat:
        """Exact binary64 value of a Python float."""
        if math.isnan(x):
            raise ValueError("NaN has no interval meaning")
        if math.isinf(x):
            return cls.infinity(1 if x > 0 else -1, BINARY64)
        return from_hex(x.hex(), BINARY64)

    def compare(self, other: BinaryFloat) -> int:
        """-1, 0 or 1 by value; infinities included."""
        a, b = float_ordinal(self), float_ordinal(other)
        return (a > b) - (a < b)

    def next_up(self) -> BinaryFloat:
        return float_from_ordinal(float_ordinal(self) + 1, self.fmt)

    def next_down(self) -> BinaryFloat:
        return float_from_ordinal(float_ordinal(self) - 1, self.fmt)

    def hex(self) -> str:
        return to_hex(self)

    def __str__(self) -> str:
        return to_hex(self)


def float_ordinal(x: BinaryFloat) -> int:
    # position on the ordered number line: zero is 0, the smallest
    # subnormal is 1, and so on; infinities sit one past the maximum
    f = x.fmt
    if x.is_infinite:
        mag = (f.max_exponent - f.min_exponent + 1) * f.hidden_bit + f.hidden_bit
    else:
        mag = (x.exponent - f.min_exponent) * f.hidden_bit + x.significand
    return x.sign * mag


def float_from_ordinal(k: int, fmt: BinaryFormat) -> BinaryFloat:
    sign = -1 if k < 0 else 1
    mag = abs(k)
    top = (fmt.max_exponent - fmt.min_exponent + 1) * fmt.hidden_bit + fmt.hidden_bit
    if mag >= top:
        return BinaryFloat.infinity(sign, fmt)
    if mag < 2 * fmt.hidden_bit:
        return BinaryFloat(sign, mag, fmt.min_exponent, fmt)
    steps, rest = divmod(mag - fmt.hidden_bit, fmt.hidden_bit)
    return BinaryFloat(sign, rest + fmt.hidden_bit, fmt.min_exponent + steps, fmt)


def to_exact_decimal(x: BinaryFloat) -> DecimalNumeral:
    """The decimal numeral denoting exactly the value of ``x``."""
    if x.is_infinite:
        raise ValueError("non-finite value has no decimal expansion")
    q = x.quantum_exponent
    m = x.sign * x.significand
    if q >= 0:
        return DecimalNumeral.from_int(m << q, 0)
    if m == 0:
        return DecimalNumeral.from_int(0)
    # m / 2**-q == m * 5**-q / 10**-q; shed the factors of two first so no
    # trailing fractional zeros are produced
    t = min((m & -m).bit_length() - 1, -q)
    return DecimalNumeral.from_int((m >> t) * 5 ** (-q - t), q + t)


def _ratio(d: DecimalNumeral) -> tuple[int, int]:
    lp = d.last_place
    c = d.coefficient
    return (c * 10**lp, 1) if lp >= 0 else (c, 10**-lp)


def _floor_log2(num: int, den: int) -> int:
    e = num.bit_length() - den.bit_length()
    if e >= 0:
        if num < den << e:
            e -= 1
    elif num << -e < den:
        e -= 1
    return e


def _round_to_float(d: DecimalNumeral, direction: Rounding, fmt: BinaryFormat) -> BinaryFloat:
    if d.is_zero:
        return fmt.zero()
    sign = d.sign
    num, den = _ratio(d)
    p = fmt.significand_bits
    e = max(_floor_log2(num, den), fmt.min_exponent)
    q = e - p + 1
    if q >= 0:
        m, r = divmod(num, den << q)
        div = den << q
    else:
        m, r = divmod(num << -q, den)
        div = den
    m = round_quotient(m, r, div, sign, direction)
    if m > fmt.max_significand:
        m >>= 1
        e += 1
    if e > fmt.max_exponent:
        toward_zero = (direction is DOWN and sign > 0) or (direction is UP and sign < 0)
        if toward_zero:
            return fmt.max_finite(sign)
        raise ConversionOverflow(direction, f"{d} is beyond the largest finite value")
    if m < fmt.hidden_bit:
        e = fmt.min_exponent
    return BinaryFloat(sign, m, e, fmt)


def from_decimal_directed(d: DecimalNumeral, direction: Rounding, fmt: BinaryFormat = BINARY64) -> BinaryFloat:
    """Greatest float <= d (DOWN) or least float >= d (UP)."""
    if direction is NEAREST:
        raise ValueError("use from_decimal_nearest for round-to-nearest")
    return _round_to_float(d, direction, fmt)


def from_decimal_nearest(d: DecimalNumeral, fmt: BinaryFormat = BINARY64) -> BinaryFloat:
    """Nearest float, ties to an even significand."""
    x = _round_to_float(d, NEAREST, fmt)
    if x == fmt.max_finite(x.sign) and not d.is_zero:
        # IEEE overflow threshold: max + half an ulp rounds away
        num, den = _ratio(d)
        limit = Fraction(2 * fmt.max_significand + 1) * Fraction(2) ** (fmt.max_exponent - fmt.significand_bits)
        if Fraction(num, den) >= limit:
            raise ConversionOverflow(NEAREST, f"{d} rounds to infinity")
    return x


def to_hex(x: BinaryFloat) -> str:
    """Bit-exact hexadecimal text; identical to ``float.hex`` for binary64."""
    if x.is_infinite:
        return "inf" if x.sign > 0 else "-inf"
    if x.is_zero:
        return "0x0.0p+0"
    f = x.fmt
    sign = "-" if x.sign < 0 else ""
    frac_bits = f.significand_bits - 1
    width = f.hex_digits
    frac = (x.significand & (f.hidden_bit - 1)) << (4 * width - frac_bits)
    lead = 1 if x.significand >= f.hidden_bit else 0
    return f"{sign}0x{lead}.{frac:0{width}x}p{x.exponent:+d}"


_HEX_RE = re.compile(r"([+-]?)0x([01])\.([0-9a-fA-F]+)p([+-]?\d+)")


def from_hex(text: str, fmt: BinaryFormat = BINARY64) -> BinaryFloat:
    text = text.strip()
    if text in ("inf", "+inf", "-inf"):
        return BinaryFloat.infinity(-1 if text.startswith("-") else 1, fmt)
    m = _HEX_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"not a hexadecimal float: {text!r}")
    sign = -1 if m.group(1) == "-" else 1
    lead = int(m.group(2))
    hex_frac = m.group(3)
    exponent = int(m.group(4))
    frac_bits = fmt.significand_bits - 1
    raw = int(hex_frac, 16)
    shift = 4 * len(hex_frac) - frac_bits
    if shift >= 0:
        if raw & ((1 << shift) - 1):
            raise ValueError(f"{text!r} has more bits than the format holds")
        frac = raw >> shift
    else:
        frac = raw << -shift
    if lead == 0 and frac == 0:
        return fmt.zero()
    significand = (lead << frac_bits) | frac
    if lead == 0 and exponent != fmt.min_exponent:
        # denormal-looking spelling above the minimum exponent
        while significand < fmt.hidden_bit and exponent > fmt.min_exponent:
            significand <<= 1
            exponent -= 1
    return BinaryFloat(sign, significand, exponent, fmt)


@dataclass(frozen=True)
class BinaryInterval:
    lower: BinaryFloat
    upper: BinaryFloat

    def __post_init__(self):
        if self.lower.fmt != self.upper.fmt:
            raise ValueError("bounds use different binary formats")
        if self.lower.compare(self.upper) > 0:
            raise ValueError("lower bound exceeds upper bound")

    @property
    def fmt(self) -> BinaryFormat:
        return self.lower.fmt

    @classmethod
    def from_floats(cls, lo: float, hi: float) -> BinaryInterval:
        return cls(BinaryFloat.from_float(lo), BinaryFloat.from_float(hi))

    def contains(self, other: BinaryInterval) -> bool:
        return self.lower.compare(other.lower) <= 0 and other.upper.compare(self.upper) <= 0
