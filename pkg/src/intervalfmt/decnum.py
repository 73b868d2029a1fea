"""Exact decimal numerals stored as digit strings.

A numeral is ``sign * 0.d1...dn * 10**exponent``.  The digit string is kept
verbatim, so ``0.1230`` and ``0.123`` are different numerals for the same
real: the number of stored digits fixes the unit of the last decimal.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class Rounding(enum.Enum):
    TOWARD_NEG_INF = "down"
    TOWARD_POS_INF = "up"
    NEAREST_TIES_EVEN = "nearest"


DOWN = Rounding.TOWARD_NEG_INF
UP = Rounding.TOWARD_POS_INF
NEAREST = Rounding.NEAREST_TIES_EVEN


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


_NUMERAL_RE = re.compile(r"([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?")


@dataclass(frozen=True)
class DecimalNumeral:
    sign: int
    digits: str
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not self.digits or not self.digits.isdigit() or not self.digits.isascii():
            raise ValueError(f"invalid digit string {self.digits!r}")
        if self.sign == -1 and self.is_zero:
            object.__setattr__(self, "sign", 1)

    @property
    def precision(self) -> int:
        return len(self.digits)

    @property
    def coefficient(self) -> int:
        return int(self.digits)

    @property
    def last_place(self) -> int:
        """Power of ten carried by the final stored digit."""
        return self.exponent - len(self.digits)

    @property
    def is_zero(self) -> bool:
        return not self.digits.strip("0")

    @property
    def leading_zeros(self) -> int:
        return len(self.digits) - len(self.digits.lstrip("0"))

    @classmethod
    def from_int(cls, value: int, place: int = 0) -> DecimalNumeral:
        """The numeral ``value * 10**place`` with its last digit at ``place``."""
        sign = -1 if value < 0 else 1
        digits = str(abs(value))
        return cls(sign, digits, place + len(digits))

    @classmethod
    def parse(cls, text: str) -> DecimalNumeral:
        """Read ``[sign] digits [. digits] [e int]``; a bare leading or
        trailing point is tolerated so factored pieces can be rejoined."""
        m = _NUMERAL_RE.fullmatch(text.strip())
        if m is None or not (m.group(2) or m.group(3)):
            raise ValueError(f"not a decimal numeral: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        int_part, frac_part = m.group(2), m.group(3) or ""
        exp = int(m.group(4)) if m.group(4) else 0
        return cls._build(sign, int_part, frac_part, exp)

    @classmethod
    def _build(cls, sign: int, int_part: str, frac_part: str, exp: int) -> DecimalNumeral:
        digits = int_part + frac_part
        last_place = exp - len(frac_part)
        stripped = digits.lstrip("0")
        if not stripped:
            return cls(1, "0", last_place + 1)
        return cls(sign, stripped, last_place + len(stripped))

    def normalized(self) -> DecimalNumeral:
        """Drop leading zeros; the last place is unchanged."""
        stripped = self.digits.lstrip("0")
        if len(stripped) == len(self.digits):
            return self
        if not stripped:
            return DecimalNumeral(1, "0", self.last_place + 1)
        return DecimalNumeral(self.sign, stripped, self.last_place + len(stripped))

    def signed_int(self, place: int) -> int:
        """Value in units of ``10**place``; ``place`` must not exceed the last place."""
        shift = self.last_place - place
        if shift < 0:
            raise ValueError("place is finer than this numeral can express exactly")
        return self.sign * self.coefficient * 10**shift

    def negate(self) -> DecimalNumeral:
        return DecimalNumeral(-self.sign, self.digits, self.exponent)

    def abs(self) -> DecimalNumeral:
        return DecimalNumeral(1, self.digits, self.exponent)

    def with_exponent_shift(self, shift: int) -> DecimalNumeral:
        """Multiply by ``10**shift`` (exact, digits untouched)."""
        return DecimalNumeral(self.sign, self.digits, self.exponent + shift)

    def pad_to_place(self, place: int) -> DecimalNumeral:
        """Same value, extended with trailing zeros down to ``place``."""
        if place >= self.last_place:
            return self
        return DecimalNumeral(self.sign, self.digits + "0" * (self.last_place - place), self.exponent)

    def to_fixed(self) -> str:
        """Positional text without an exponent, keeping every stored digit."""
        d = self.normalized()
        digits, e = d.digits, d.exponent
        n = len(digits)
        sign = "-" if d.sign < 0 else ""
        if d.is_zero:
            # a zero's single digit marks the last place only
            lp = d.last_place
            return "0" if lp >= 0 else "0." + "0" * (-lp)
        if e <= 0:
            body = "0." + "0" * (-e) + digits
        elif e < n:
            body = digits[:e] + "." + digits[e:]
        else:
            body = digits + "0" * (e - n)
        return sign + body

    def to_scientific(self) -> str:
        """``d.ddd e<int>`` text whose last digit sits at the same place."""
        d = self.normalized()
        sign = "-" if d.sign < 0 else ""
        if d.is_zero:
            return f"0e{d.last_place}"
        head, tail = d.digits[0], d.digits[1:]
        mantissa = head + ("." + tail if tail else "")
        return f"{sign}{mantissa}e{d.exponent - 1}"

    def __str__(self) -> str:
        d = self.normalized()
        if d.is_zero:
            return d.to_fixed() if d.last_place >= -4 and d.last_place <= 0 else d.to_scientific()
        if d.exponent < -3 or d.exponent - len(d.digits) > 3:
            return d.to_scientific()
        return d.to_fixed()


ZERO = DecimalNumeral(1, "0", 0)


def compare(a: DecimalNumeral, b: DecimalNumeral) -> Ordering:
    place = min(a.last_place, b.last_place)
    x, y = a.signed_int(place), b.signed_int(place)
    return Ordering((x > y) - (x < y))


def uld(d: DecimalNumeral) -> DecimalNumeral:
    """Unit of the last decimal of ``d``."""
    return DecimalNumeral(1, "1", d.last_place + 1)


def round_quotient(q: int, r: int, div: int, sign: int, direction: Rounding) -> int:
    """Round the magnitude ``q + r/div`` (0 <= r < div) of a value with the
    given sign to an integer magnitude."""
    if r == 0:
        return q
    if direction is DOWN:
        return q + 1 if sign < 0 else q
    if direction is UP:
        return q if sign < 0 else q + 1
    twice = 2 * r
    if twice > div or (twice == div and q & 1):
        return q + 1
    return q


def round_directed(d: DecimalNumeral, target_precision: int, direction: Rounding) -> DecimalNumeral:
    """Round to exactly ``target_precision`` stored digits.

    A carry out of the top digit bumps the exponent, e.g. 0.999 rounded up
    to two digits gives 0.10e1.
    """
    k = target_precision
    if k < 1:
        raise ValueError("target precision must be at least 1")
    n = len(d.digits)
    if n <= k:
        return DecimalNumeral(d.sign, d.digits + "0" * (k - n), d.exponent)
    tail = d.digits[k:]
    head = round_quotient(int(d.digits[:k]), int(tail), 10 ** len(tail), d.sign, direction)
    text = str(head).zfill(k)
    if len(text) > k:
        return DecimalNumeral(d.sign, text[:k], d.exponent + 1)
    return DecimalNumeral(d.sign, text, d.exponent)


def round_at(d: DecimalNumeral, place: int, direction: Rounding) -> DecimalNumeral:
    """Round onto the grid of multiples of ``10**place``.

    The result always ends exactly at ``place`` (trailing zeros are kept),
    and leading zeros are dropped.
    """
    lp = d.last_place
    if lp >= place:
        return DecimalNumeral.from_int(d.signed_int(place), place)
    q, r = divmod(d.coefficient, 10 ** (place - lp))
    return DecimalNumeral.from_int(d.sign * round_quotient(q, r, 10 ** (place - lp), d.sign, direction), place)


def align(a: DecimalNumeral, b: DecimalNumeral) -> tuple[DecimalNumeral, DecimalNumeral]:
    """Rewrite both numerals with a shared exponent and digit count.

    The exponent is taken from the larger nonzero magnitude, so a zero never
    widens the layout.
    """
    a, b = a.normalized(), b.normalized()
    nonzero = [x.exponent for x in (a, b) if not x.is_zero]
    top = max(nonzero) if nonzero else max(a.exponent, b.exponent)
    place = min(a.last_place, b.last_place)
    width = top - place

    def spread(x: DecimalNumeral) -> DecimalNumeral:
        if x.is_zero:
            return DecimalNumeral(1, "0" * width, top)
        return DecimalNumeral(x.sign, (x.digits + "0" * (x.last_place - place)).zfill(width), top)

    return spread(a), spread(b)


def sub(a: DecimalNumeral, b: DecimalNumeral) -> DecimalNumeral:
    """Exact ``a - b``."""
    place = min(a.last_place, b.last_place)
    return DecimalNumeral.from_int(a.signed_int(place) - b.signed_int(place), place)


def successor(d: DecimalNumeral) -> DecimalNumeral:
    """Next numeral up at the same last place."""
    return DecimalNumeral.from_int(d.signed_int(d.last_place) + 1, d.last_place)


def predecessor(d: DecimalNumeral) -> DecimalNumeral:
    return DecimalNumeral.from_int(d.signed_int(d.last_place) - 1, d.last_place)


def dmin(a: DecimalNumeral, b: DecimalNumeral) -> DecimalNumeral:
    return a if compare(a, b) <= 0 else b


def dmax(a: DecimalNumeral, b: DecimalNumeral) -> DecimalNumeral:
    return a if compare(a, b) >= 0 else b
