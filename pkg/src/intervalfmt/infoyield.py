"""How much each extra suffix digit tells the reader, in dits (log10 units).

The uncertainty of an interval is ``log10(width)``; a digit's marginal yield
is the drop in uncertainty it buys.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .decnum import DecimalNumeral
from .interval_model import (
    AnyInterval,
    DecimalInterval,
    as_decimal,
    available_digits,
    layout,
    outward_decimal,
    width,
)

DEFAULT_THRESHOLD = 0.005
DEFAULT_DIGITS = 3

LN10 = math.log(10)


class Policy(enum.Enum):
    DEFAULT = "default"
    THRESHOLD = "threshold"
    MAX_INFO = "max-info"


def _log10(d: DecimalNumeral) -> float:
    if d.is_zero:
        return -math.inf
    return math.log10(d.coefficient) + d.last_place


def uncertainty(interval: AnyInterval) -> float:
    """``log10`` of the exact width; ``-inf`` for a point interval."""
    return _log10(width(interval))


def _ratio_log10(wide: DecimalNumeral, narrow: DecimalNumeral) -> float:
    # log10(wide / narrow) without cancellation when the ratio is near 1
    place = min(wide.last_place, narrow.last_place)
    r = Fraction(wide.signed_int(place), narrow.signed_int(place))
    if r < 2:
        return math.log1p(r - 1) / LN10
    return math.log10(r.numerator) - math.log10(r.denominator)


def _prefix_enclosure_width(interval: DecimalInterval) -> DecimalNumeral:
    # width of the enclosure implied by the common prefix alone; with no
    # prefix that is [0, 10**e] (or [-10**e, 10**e] across zero) for the
    # least e covering both bounds
    lay = layout(interval)
    if lay.sign != 0 and lay.prefix_len > 0:
        return DecimalNumeral(1, "1", lay.top - lay.prefix_len + 1)
    e = lay.top
    if max(lay.lower_digits, lay.upper_digits).rstrip("0") == "1":
        e -= 1  # the larger bound is exactly 10**(top-1)
    return DecimalNumeral(1, "1" if lay.sign != 0 else "2", e + 1)


def _yield_between(wide: DecimalInterval, narrow: DecimalInterval) -> float:
    w_narrow = width(narrow)
    if w_narrow.is_zero:
        return math.inf if not width(wide).is_zero else 0.0
    return _ratio_log10(width(wide), w_narrow)


def marginal_yield(interval: AnyInterval, k: int) -> float:
    """Drop in uncertainty from showing ``k`` suffix digits instead of ``k - 1``.

    For ``k = 1`` the reference is the enclosure given by the common prefix
    alone.
    """
    iv = as_decimal(interval)
    kmax = available_digits(iv)
    if not 1 <= k <= kmax:
        raise ValueError(f"k must be between 1 and {kmax}")
    narrow = outward_decimal(iv, k)
    if k == 1:
        w = width(narrow)
        if w.is_zero:
            return 0.0
        return _ratio_log10(_prefix_enclosure_width(narrow), w)
    return _yield_between(outward_decimal(iv, k - 1), narrow)


def approx_marginal_yield(k: int) -> float:
    """Rule-of-thumb yield of the k-th suffix digit: ``log10(1 + 10**-k)``."""
    if k < 1:
        raise ValueError("k must be positive")
    return math.log1p(10.0**-k) / LN10


@dataclass(frozen=True)
class YieldRow:
    k: int
    enclosure: DecimalInterval
    width: DecimalNumeral
    uncertainty: float
    marginal_yield: float


@dataclass(frozen=True)
class YieldReport:
    rows: list[YieldRow] = field(default_factory=list)
    exact: bool = False


def analyze(interval: AnyInterval) -> YieldReport:
    iv = as_decimal(interval)
    if iv.is_point:
        return YieldReport([], exact=True)
    enclosures = [outward_decimal(iv, k) for k in range(1, available_digits(iv) + 1)]
    rows = []
    prev = None
    for k, enc in enumerate(enclosures, start=1):
        w = width(enc)
        if prev is None:
            y = _ratio_log10(_prefix_enclosure_width(enc), w)
        else:
            y = _yield_between(prev, enc)
        rows.append(YieldRow(k, enc, w, _log10(w), y))
        prev = enc
    return YieldReport(rows)


def select_digits(
    interval: AnyInterval,
    policy: Policy = Policy.DEFAULT,
    threshold: float = DEFAULT_THRESHOLD,
) -> int:
    """Number of suffix digits to display.

    DEFAULT shows three (fewer if the interval has fewer), MAX_INFO one, and
    THRESHOLD stops before the first digit whose yield is at or below
    ``threshold`` dits.
    """
    iv = as_decimal(interval)
    if iv.is_point:
        return 1
    kmax = available_digits(iv)
    if policy is Policy.MAX_INFO:
        return 1
    if policy is Policy.DEFAULT:
        return min(DEFAULT_DIGITS, kmax)
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    prev = outward_decimal(iv, 1)
    for k in range(1, kmax):
        nxt = outward_decimal(iv, k + 1)
        if _yield_between(prev, nxt) <= threshold:
            return k
        prev = nxt
    return kmax
