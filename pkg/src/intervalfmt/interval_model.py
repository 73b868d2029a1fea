"""Decimal intervals, outward rounding to a suffix-digit budget, and the
widening sequence of ever shorter enclosures."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Union

from . import decnum
from .binconv import BinaryFloat, BinaryInterval, to_exact_decimal
from .decnum import DOWN, NEAREST, UP, DecimalNumeral, align, compare, round_at


@dataclass(frozen=True)
class DecimalInterval:
    """Closed interval with exact decimal bounds; ``None`` marks an unbounded side."""

    lower: Optional[DecimalNumeral]
    upper: Optional[DecimalNumeral]

    def __post_init__(self):
        if self.lower is not None and self.upper is not None and compare(self.lower, self.upper) > 0:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @classmethod
    def parse(cls, lower: str, upper: str) -> DecimalInterval:
        return cls(DecimalNumeral.parse(lower), DecimalNumeral.parse(upper))

    @classmethod
    def point(cls, d: DecimalNumeral) -> DecimalInterval:
        return cls(d, d)

    @property
    def bounded(self) -> bool:
        return self.lower is not None and self.upper is not None

    @property
    def is_point(self) -> bool:
        return self.bounded and compare(self.lower, self.upper) == 0

    def negate(self) -> DecimalInterval:
        return DecimalInterval(
            None if self.upper is None else self.upper.negate(),
            None if self.lower is None else self.lower.negate(),
        )

    def scaled(self, shift: int) -> DecimalInterval:
        """Both bounds multiplied by ``10**shift``."""
        return DecimalInterval(
            None if self.lower is None else self.lower.with_exponent_shift(shift),
            None if self.upper is None else self.upper.with_exponent_shift(shift),
        )

    def __str__(self) -> str:
        lo = "-inf" if self.lower is None else str(self.lower)
        hi = "inf" if self.upper is None else str(self.upper)
        return f"[{lo},{hi}]"


@dataclass(frozen=True)
class CenterRadius:
    center: DecimalNumeral
    radius: DecimalNumeral
    exact: bool = True

    def to_interval(self) -> DecimalInterval:
        return DecimalInterval(decnum.sub(self.center, self.radius), _add(self.center, self.radius))


AnyInterval = Union[BinaryInterval, DecimalInterval]


def _add(a: DecimalNumeral, b: DecimalNumeral) -> DecimalNumeral:
    return decnum.sub(a, b.negate())


def _bound_to_decimal(x: BinaryFloat) -> Optional[DecimalNumeral]:
    return None if x.is_infinite else to_exact_decimal(x)


def as_decimal(interval: AnyInterval) -> DecimalInterval:
    """Exact decimal view of a binary interval (identity on decimal ones)."""
    if isinstance(interval, DecimalInterval):
        return interval
    return DecimalInterval(_bound_to_decimal(interval.lower), _bound_to_decimal(interval.upper))


def _require_bounded(interval: DecimalInterval) -> None:
    if not interval.bounded:
        raise ValueError("operation needs finite bounds")


def width(interval: AnyInterval) -> DecimalNumeral:
    iv = as_decimal(interval)
    _require_bounded(iv)
    return decnum.sub(iv.upper, iv.lower)


def encloses(outer: AnyInterval, inner: AnyInterval) -> bool:
    """True iff ``inner`` is a subset of ``outer`` (exact comparison)."""
    a, b = as_decimal(outer), as_decimal(inner)
    if a.lower is not None and (b.lower is None or compare(a.lower, b.lower) > 0):
        return False
    if a.upper is not None and (b.upper is None or compare(b.upper, a.upper) > 0):
        return False
    return True


@dataclass(frozen=True)
class Layout:
    """How the aligned magnitudes of two bounds line up.

    ``sign`` is +1 or -1 when both bounds share it (zero counts with either)
    and 0 when the interval straddles zero.  ``top`` is the shared exponent,
    ``lower_digits``/``upper_digits`` the aligned magnitude strings, and
    ``prefix_len`` their common leading digits (always 0 for mixed signs).
    """

    sign: int
    top: int
    lower_digits: str
    upper_digits: str
    prefix_len: int

    def start(self, which: int) -> int:
        # first digit index that counts towards the suffix budget of a bound
        digits = self.lower_digits if which == 0 else self.upper_digits
        lead = len(digits) - len(digits.lstrip("0"))
        return max(self.prefix_len, lead)


def layout(interval: DecimalInterval) -> Layout:
    _require_bounded(interval)
    lo, hi = interval.lower, interval.upper
    if lo.sign > 0 or lo.is_zero:
        sign = 1
    elif hi.sign < 0 or hi.is_zero:
        sign = -1
    else:
        sign = 0
    # same result as decnum.align on the magnitudes, without building numerals
    da, db = lo.digits.lstrip("0"), hi.digits.lstrip("0")
    la, lb = lo.last_place, hi.last_place
    if da or db:
        top = max(p + len(x) for x, p in ((da, la), (db, lb)) if x)
    else:
        top = max(la, lb) + 1
    place = min(la, lb)
    width = top - place
    a = (da + "0" * (la - place)).zfill(width) if da else "0" * width
    b = (db + "0" * (lb - place)).zfill(width) if db else "0" * width
    n = 0
    if sign != 0:
        n = len(os.path.commonprefix((a, b)))
    return Layout(sign, top, a, b, n)


def _places(lay: Layout, k: int) -> tuple[int, int]:
    return lay.top - lay.start(0) - k, lay.top - lay.start(1) - k


def available_digits(interval: AnyInterval) -> int:
    """Smallest suffix budget at which outward rounding changes nothing."""
    iv = as_decimal(interval)
    lay = layout(iv)
    best = 1
    for which, digits in enumerate((lay.lower_digits, lay.upper_digits)):
        best = max(best, len(digits.rstrip("0")) - lay.start(which))
    return best


def outward_decimal(interval: AnyInterval, k: Optional[int] = None) -> DecimalInterval:
    """Tightest enclosure whose bounds carry ``k`` digits after the common prefix.

    The lower bound is rounded toward -inf and the upper toward +inf.  When
    a carry shortens the common prefix, the budget is re-applied after the
    new, shorter prefix.  ``k=None`` keeps every available digit.
    """
    iv = as_decimal(interval)
    _require_bounded(iv)
    if k is None:
        k = available_digits(iv)
    if k < 1:
        raise ValueError("suffix digit budget must be at least 1")
    return _outward(iv, layout(iv), k)


def _outward(iv: DecimalInterval, lay: Layout, k: int) -> DecimalInterval:
    lo_place, hi_place = _places(lay, k)
    # places only move toward coarser grids, so this settles quickly
    for _ in range(64):
        lo = round_at(iv.lower, lo_place, DOWN)
        hi = round_at(iv.upper, hi_place, UP)
        new_lo, new_hi = _places(layout(DecimalInterval(lo, hi)), k)
        if new_lo <= lo_place and new_hi <= hi_place:
            return DecimalInterval(lo, hi)
        lo_place, hi_place = max(lo_place, new_lo), max(hi_place, new_hi)
    raise RuntimeError("outward rounding did not settle")  # pragma: no cover


def pyramid(interval: AnyInterval) -> list[DecimalInterval]:
    """Enclosures from the full digit budget down to a single suffix digit."""
    iv = as_decimal(interval)
    kmax = available_digits(iv)
    lay = layout(iv)
    return [_outward(iv, lay, k) for k in range(kmax, 0, -1)]


def to_center_radius(interval: AnyInterval, place: Optional[int] = None) -> CenterRadius:
    """Midpoint and half-width.

    Without ``place`` both are exact, written at the finest place the bounds
    use (one more when the halving needs it).  With ``place`` the centre is
    rounded to nearest on that grid and the radius is rounded up so the
    result still encloses the interval.
    """
    iv = as_decimal(interval)
    _require_bounded(iv)
    grid = min(iv.lower.last_place, iv.upper.last_place)
    lo, hi = iv.lower.signed_int(grid), iv.upper.signed_int(grid)
    total, span = lo + hi, hi - lo
    if total % 2 or span % 2:
        center = DecimalNumeral.from_int(total * 5, grid - 1)
        radius = DecimalNumeral.from_int(span * 5, grid - 1)
    else:
        center = DecimalNumeral.from_int(total // 2, grid)
        radius = DecimalNumeral.from_int(span // 2, grid)
    if place is None or place <= center.last_place:
        return CenterRadius(center, radius, True)
    c = round_at(center, place, NEAREST)
    reach = decnum.dmax(decnum.sub(c, iv.lower), decnum.sub(iv.upper, c))
    r = round_at(reach, place, UP)
    return CenterRadius(c, r, compare(c, center) == 0 and compare(r, radius) == 0)
