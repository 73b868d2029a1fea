"""Factored notation ``prefix[lower,upper]`` and the other output styles."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .binconv import BinaryInterval
from .decnum import DecimalNumeral, compare, round_at, DOWN, UP, NEAREST
from .interval_model import (
    DecimalInterval,
    as_decimal,
    encloses,
    layout,
    outward_decimal,
    to_center_radius,
)


class FormSign(enum.IntEnum):
    NEGATIVE = -1
    MIXED = 0
    POSITIVE = 1


class Style(enum.Enum):
    FACTORED = "factored"
    PLAIN = "plain"
    CENTER_RADIUS_ANGLE = "angle"
    CENTER_RADIUS_PLUS = "plus"
    SINGLE_NUMBER = "single"


@dataclass(frozen=True)
class FactoredForm:
    """``sign prefix[lower_suffix,upper_suffix] x 10^scale``.

    With an empty prefix the form is plain: the suffixes are then complete
    signed numerals.  For a negative form the lower suffix belongs to the
    bound of larger magnitude.
    """

    sign: FormSign
    prefix: str
    lower_suffix: str
    upper_suffix: str
    scale: int = 0

    @property
    def is_factored(self) -> bool:
        return bool(self.prefix)


class FactoringError(ValueError):
    pass


def _prefix_text(digits: str, top: int) -> Optional[str]:
    # the common digits, with the decimal point placed by ``top``
    n = len(digits)
    if top <= 0:
        return "0." + "0" * (-top) + digits
    if top < n:
        return digits[:top] + "." + digits[top:]
    if top == n:
        return digits + "."
    return None


def factor(interval: DecimalInterval, scale: int = 0, allow_bare_point: bool = False) -> FactoredForm:
    """Pull the longest run of common leading digits out of both bounds.

    ``scale`` divides both bounds by ``10**scale`` first.  Mixed signs, an
    empty common prefix, or a decimal point that would land inside the
    suffixes all give the plain form.
    """
    iv = interval.scaled(-scale) if scale else interval
    if not iv.bounded:
        return _plain(iv, scale)
    lay = layout(iv)
    if lay.sign == 0:
        return _plain(iv, scale)
    n, top = lay.prefix_len, lay.top
    width = len(lay.lower_digits)
    sign = FormSign(lay.sign)
    if n == 0:
        if allow_bare_point and top <= 0:
            return FactoredForm(sign, "0." + "0" * (-top), lay.lower_digits, lay.upper_digits, scale)
        return _plain(iv, scale)
    prefix = _prefix_text(lay.lower_digits[:n], top)
    if prefix is None:
        if top != width:
            return _plain(iv, scale)
        prefix = lay.lower_digits[:n]
    return FactoredForm(sign, prefix, lay.lower_digits[n:], lay.upper_digits[n:], scale)


def _plain(iv: DecimalInterval, scale: int) -> FactoredForm:
    lo = "-inf" if iv.lower is None else iv.lower.to_fixed()
    hi = "inf" if iv.upper is None else iv.upper.to_fixed()
    sign = FormSign.MIXED
    if iv.bounded:
        sign = FormSign(layout(iv).sign)
    return FactoredForm(sign, "", lo, hi, scale)


def _parse_bound(text: str) -> Optional[DecimalNumeral]:
    if text in ("-inf", "inf", "+inf"):
        return None
    return DecimalNumeral.parse(text)


def unfactor(form: FactoredForm) -> DecimalInterval:
    """Rebuild the interval a form denotes; raises if its bounds are out of order."""
    if not form.is_factored:
        lo, hi = _parse_bound(form.lower_suffix), _parse_bound(form.upper_suffix)
    else:
        for s in (form.lower_suffix, form.upper_suffix):
            if s and not s.isdigit():
                raise FactoringError(f"suffix {s!r} must be plain digits")
        lo = DecimalNumeral.parse(form.prefix + form.lower_suffix)
        hi = DecimalNumeral.parse(form.prefix + form.upper_suffix)
        if form.sign == FormSign.NEGATIVE:
            lo, hi = lo.negate(), hi.negate()
    if lo is not None and hi is not None and compare(lo, hi) > 0:
        raise FactoringError(f"reconstructed lower bound {lo} exceeds upper bound {hi}")
    iv = DecimalInterval(lo, hi)
    return iv.scaled(form.scale) if form.scale else iv


def _magnitude_exponent(interval: DecimalInterval) -> Optional[int]:
    tops = [
        b.normalized().exponent
        for b in (interval.lower, interval.upper)
        if b is not None and not b.is_zero
    ]
    return max(tops) if tops else None


def normalize_scale(interval: DecimalInterval) -> FactoredForm:
    """Factor out the power of ten that puts one digit before the point in
    the bound of larger magnitude."""
    top = _magnitude_exponent(interval)
    scale = 0 if top is None else top - 1
    return factor(interval, scale=scale)


def _needs_scale(interval: DecimalInterval, style: Style) -> bool:
    if not interval.bounded:
        return False
    if style is Style.FACTORED:
        lay = layout(interval)
        if lay.sign != 0 and lay.prefix_len > 0:
            top, n, width = lay.top, lay.prefix_len, len(lay.lower_digits)
            return top < -3 or (top > n and top != width)
    for b in (interval.lower, interval.upper):
        d = b.normalized()
        if d.is_zero:
            continue
        if d.exponent < -3 or d.exponent > len(d.digits):
            return True
    return False


def _scale_text(scale: int) -> str:
    return f" x 10^{scale}" if scale else ""


def render_form(form: FactoredForm) -> str:
    """Text of a factored or plain form."""
    if form.is_factored:
        sign = "-" if form.sign == FormSign.NEGATIVE else ""
        if not form.lower_suffix and not form.upper_suffix:
            return f"[{sign}{form.prefix.rstrip('.')}]" + _scale_text(form.scale)
        return f"{sign}{form.prefix}[{form.lower_suffix},{form.upper_suffix}]" + _scale_text(form.scale)
    if form.lower_suffix == form.upper_suffix:
        return f"[{form.lower_suffix}]" + _scale_text(form.scale)
    return f"[{form.lower_suffix},{form.upper_suffix}]" + _scale_text(form.scale)


def _point_text(d: DecimalNumeral) -> str:
    return f"[{d}]"


def single_number(interval: DecimalInterval) -> DecimalNumeral:
    """Longest numeral d with ``[d - uld(d), d + uld(d)]`` enclosing the interval."""
    iv = as_decimal(interval)
    if not iv.bounded:
        raise ValueError("single-number form needs finite bounds")
    grid = min(iv.lower.last_place, iv.upper.last_place)
    lo, hi = iv.lower.signed_int(grid), iv.upper.signed_int(grid)
    if lo == hi:
        return iv.lower
    # a uld below a tenth of the width cannot reach both bounds
    place = grid + max(0, len(str(hi - lo)) - 2)
    while True:
        unit = 10 ** (place - grid)
        d_min = -((-hi) // unit) - 1
        d_max = lo // unit + 1
        if d_min <= d_max:
            mid = (lo + hi + unit) // (2 * unit)
            d = min(max(mid, d_min), d_max)
            return DecimalNumeral.from_int(d, place)
        place += 1


def _single_text(d: DecimalNumeral) -> str:
    d = d.normalized()
    if d.last_place > 0 or d.exponent < -3:
        return d.to_scientific()
    return d.to_fixed()


def _fixed_at(d: DecimalNumeral, place: int) -> str:
    return d.pad_to_place(place).to_fixed()


def _center_radius_texts(center: DecimalNumeral, radius: DecimalNumeral) -> tuple[str, str]:
    place = min(center.last_place, radius.last_place)
    c = center.pad_to_place(place).normalized()
    if not c.is_zero and (c.exponent < -3 or c.exponent > len(c.digits)):
        return center.to_scientific(), radius.to_scientific()
    if c.is_zero and radius.normalized().exponent < -3:
        return center.to_scientific(), radius.to_scientific()
    return _fixed_at(center, place), _fixed_at(radius, place)


def suffix_place(interval: DecimalInterval, k: int) -> int:
    """Grid place of the k-th digit after the common prefix (finer bound)."""
    lay = layout(interval)
    return lay.top - min(lay.start(0), lay.start(1)) - k


def render(
    interval: Union[DecimalInterval, BinaryInterval],
    style: Style = Style.FACTORED,
    digits: Optional[int] = None,
    *,
    scale: Optional[int] = None,
) -> str:
    """Render an enclosure of ``interval``.

    ``digits`` is the number of digits shown after the common prefix
    (``None`` keeps all of them); ``scale`` forces a power of ten to be
    factored out, otherwise one is chosen only when the digits would need
    padding zeros or more than three leading zeros.
    """
    iv = as_decimal(interval)
    if not iv.bounded:
        if style is not Style.PLAIN and style is not Style.FACTORED:
            raise ValueError(f"{style.value} style needs finite bounds")
        return render_form(_plain(iv, 0))
    if iv.is_point and style is not Style.CENTER_RADIUS_ANGLE:
        return _point_text(iv.lower)

    if style is Style.SINGLE_NUMBER:
        return _single_text(single_number(iv))

    if style in (Style.CENTER_RADIUS_ANGLE, Style.CENTER_RADIUS_PLUS):
        place = None if digits is None else suffix_place(iv, digits)
        cr = to_center_radius(iv, place)
        if cr.radius.is_zero:
            if style is Style.CENTER_RADIUS_ANGLE:
                c, r = _center_radius_texts(cr.center, cr.radius)
                return f"<{c},{r}>"
            return _point_text(cr.center)
        c, r = _center_radius_texts(cr.center, cr.radius)
        if style is Style.CENTER_RADIUS_ANGLE:
            return f"<{c},{r}>"
        return f"{c} + [-{r},+{r}]"

    enclosure = outward_decimal(iv, digits)
    if enclosure.is_point:
        return _point_text(enclosure.lower)
    if scale is None:
        scale = 0
        if _needs_scale(enclosure, style):
            scale = _magnitude_exponent(enclosure) - 1
    if style is Style.PLAIN:
        return render_form(_plain(enclosure.scaled(-scale), scale))
    return render_form(factor(enclosure, scale=scale))
