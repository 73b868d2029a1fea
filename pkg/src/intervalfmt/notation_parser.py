"""Parser for every supported interval notation.

Grammar (whitespace allowed between tokens, never inside a numeral)::

    interval   := plain | factored | bracketpt | centered | angle | bare
    plain      := '[' numeral ',' numeral ']' scale?
    factored   := sign? prefix '[' digits ',' digits ']' scale?
    bracketpt  := '[' numeral ']'
    centered   := numeral '+' '[' signednum ',' signednum ']'
    angle      := '<' numeral ',' numeral '>'
    bare       := numeral suffix?          suffix := '*' | '...' | '#'
    scale      := ('x' | '*') '10^' int
    numeral    := sign? digits ('.' digits)? ('e' int)?
    prefix     := digits ('.' digits?)? | '.' digits

A ``*`` directly followed by ``10^`` is a scale, otherwise the star suffix.
The bounds of a plain interval may also be ``inf``/``-inf``.  For a negative
factored interval the sign covers both bounds: ``-1.23[4,0]`` is
``[-1.234, -1.230]``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional, Union

from . import decnum
from .binconv import (
    BINARY64,
    BinaryFloat,
    BinaryFormat,
    BinaryInterval,
    ConversionOverflow,
    from_decimal_directed,
    from_decimal_nearest,
    to_exact_decimal,
)
from .decnum import DOWN, UP, DecimalNumeral, uld
from .factoring import FactoredForm, FactoringError, FormSign, unfactor
from .interval_model import DecimalInterval

_DIGITS_RE = re.compile(r"[0-9]*")


class ConventionMode(enum.Enum):
    """What a bare numeral ``d`` denotes."""

    POINT = "point"  # exactly d
    PHYSICS = "physics"  # [d, d + uld]
    SINGLE_NUMBER = "single"  # [d - uld, d + uld]
    CLIP = "clip"  # smallest float-bounded interval holding d


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"column {position + 1}: {message}")

    @property
    def column(self) -> int:
        return self.position + 1


class NotationError(ValueError):
    """A well-formed notation that denotes no interval (e.g. bounds out of order)."""


@dataclass(frozen=True)
class Plain:
    lower: Optional[DecimalNumeral]
    upper: Optional[DecimalNumeral]
    scale: int = 0


@dataclass(frozen=True)
class Factored:
    form: FactoredForm


@dataclass(frozen=True)
class BracketPoint:
    value: DecimalNumeral


@dataclass(frozen=True)
class Bare:
    value: DecimalNumeral
    marker: str = ""  # "", "*", "..." or "#"


@dataclass(frozen=True)
class CenterPlus:
    center: DecimalNumeral
    lower_offset: DecimalNumeral
    upper_offset: DecimalNumeral


@dataclass(frozen=True)
class Angle:
    center: DecimalNumeral
    radius: DecimalNumeral


NotationAST = Union[Plain, Factored, BracketPoint, Bare, CenterPlus, Angle]

_MARKER_NAMES = {"": "BARE", "*": "STAR", "...": "ELLIPSIS", "#": "HASH"}


def variant(ast: NotationAST) -> str:
    if isinstance(ast, Bare):
        return _MARKER_NAMES[ast.marker]
    return {
        Plain: "PLAIN",
        Factored: "FACTORED",
        BracketPoint: "BRACKET_POINT",
        CenterPlus: "CENTER_PLUS",
        Angle: "ANGLE",
    }[type(ast)]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        return ParseError(message, self.pos if pos is None else pos, self.text)

    def peek(self, n: int = 1) -> str:
        return self.text[self.pos:self.pos + n]

    def ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def expect(self, token: str) -> None:
        self.ws()
        if not self.text.startswith(token, self.pos):
            found = self.peek() or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def digits(self) -> str:
        m = _DIGITS_RE.match(self.text, self.pos)
        self.pos = m.end()
        return m.group()

    def sign(self) -> str:
        c = self.peek()
        if c in ("+", "-"):
            self.pos += 1
            return c
        return ""

    def integer(self) -> int:
        start = self.pos
        s = self.sign()
        d = self.digits()
        if not d:
            raise self.error("expected an integer", start)
        return int(s + d)

    def exponent_part(self) -> int:
        if self.peek() in ("e", "E"):
            self.pos += 1
            return self.integer()
        return 0

    def numeral(self, require_sign: bool = False) -> DecimalNumeral:
        self.ws()
        start = self.pos
        s = self.sign()
        if require_sign and not s:
            raise self.error("an explicit sign is required here")
        int_part = self.digits()
        if not int_part:
            raise self.error("expected a decimal numeral", start)
        frac = ""
        if self.peek() == "." and self.peek(2)[1:2].isdigit():
            self.pos += 1
            frac = self.digits()
        exp = self.exponent_part()
        return DecimalNumeral._build(-1 if s == "-" else 1, int_part, frac, exp)

    def bound(self, upper: bool) -> Optional[DecimalNumeral]:
        self.ws()
        words = ("+inf", "inf") if upper else ("-inf",)
        for word in words:
            if self.text.startswith(word, self.pos):
                self.pos += len(word)
                return None
        return self.numeral()

    def scale(self) -> int:
        self.ws()
        c = self.peek()
        if c not in ("x", "*"):
            return 0
        self.pos += 1
        self.ws()
        if not self.text.startswith("10^", self.pos):
            raise self.error("expected '10^' in scale factor")
        self.pos += 3
        return self.integer()

    def at_scale(self) -> bool:
        # lookahead that tells '*10^' (scale) from the '*' suffix
        rest = self.text[self.pos + 1:].lstrip(" \t")
        return self.peek() == "*" and rest.startswith("10^")

    def end(self) -> None:
        self.ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.peek()!r}")


def parse(text: str, mode: ConventionMode = ConventionMode.POINT) -> NotationAST:
    """Parse one interval notation; the meaning of bare numerals is left to
    :func:`to_interval`, but CLIP-only suffixes are rejected outside CLIP."""
    if not text.isascii():
        bad = next(i for i, c in enumerate(text) if not c.isascii())
        raise ParseError("non-ASCII character", bad, text)
    p = _Parser(text.rstrip("\r\n"))
    p.ws()
    c = p.peek()
    if c == "[":
        p.pos += 1
        lo = p.bound(upper=False)
        p.ws()
        if p.peek() == "]":
            if lo is None:
                raise p.error("a bracketed point must be finite")
            p.pos += 1
            ast: NotationAST = BracketPoint(lo)
        else:
            p.expect(",")
            hi = p.bound(upper=True)
            p.expect("]")
            ast = Plain(lo, hi, p.scale())
    elif c == "<":
        p.pos += 1
        center = p.numeral()
        p.expect(",")
        radius = p.numeral()
        p.expect(">")
        if radius.sign < 0:
            raise p.error("radius must not be negative")
        ast = Angle(center, radius)
    elif c == "":
        raise p.error("empty input")
    else:
        ast = _numeral_led(p, mode)
    p.end()
    return ast


def _numeral_led(p: _Parser, mode: ConventionMode) -> NotationAST:
    start = p.pos
    s = p.sign()
    int_part = p.digits()
    frac: Optional[str] = None
    if p.peek() == "." and p.peek(3) != "...":
        p.pos += 1
        frac = p.digits()
    if not int_part and not frac:
        raise p.error("expected a numeral or interval", start)
    after_digits = p.pos
    p.ws()
    if p.peek() == "[":
        p.pos += 1
        prefix = int_part + ("." + frac if frac is not None else "")
        p.ws()
        lo = p.digits()
        if not lo:
            raise p.error("expected suffix digits (signs belong before the prefix)")
        p.expect(",")
        p.ws()
        hi = p.digits()
        if not hi:
            raise p.error("expected suffix digits (signs belong before the prefix)")
        p.expect("]")
        sign = FormSign.NEGATIVE if s == "-" else FormSign.POSITIVE
        return Factored(FactoredForm(sign, prefix, lo, hi, p.scale()))

    # a plain numeral: re-check its shape against the stricter grammar
    p.pos = after_digits
    if not int_part:
        raise p.error("a numeral needs digits before the decimal point", start)
    if frac == "":
        raise p.error("a numeral needs digits after the decimal point", after_digits - 1)
    exp = p.exponent_part()
    value = DecimalNumeral._build(-1 if s == "-" else 1, int_part, frac or "", exp)
    marker_pos = p.pos
    p.ws()
    if p.peek() == "+":
        p.pos += 1
        p.expect("[")
        lo_off = p.numeral(require_sign=True)
        p.expect(",")
        hi_off = p.numeral(require_sign=True)
        p.expect("]")
        return CenterPlus(value, lo_off, hi_off)
    p.pos = marker_pos
    marker = ""
    if p.at_scale():
        raise p.error("a scale factor is not allowed on a single numeral")
    if p.peek(3) == "...":
        marker = "..."
    elif p.peek() in ("*", "#"):
        marker = p.peek()
    if marker:
        if mode is not ConventionMode.CLIP:
            raise p.error(f"the {marker!r} suffix is only allowed in CLIP mode")
        p.pos += len(marker)
    return Bare(value, marker)


def _add(a: DecimalNumeral, b: DecimalNumeral) -> DecimalNumeral:
    return decnum.sub(a, b.negate())


def _ordered(lo: Optional[DecimalNumeral], hi: Optional[DecimalNumeral]) -> DecimalInterval:
    try:
        return DecimalInterval(lo, hi)
    except ValueError as exc:
        raise NotationError(str(exc)) from None


def _binary_decimal(x: BinaryFloat) -> DecimalNumeral:
    return to_exact_decimal(x)


def to_decimal_interval(ast: NotationAST, mode: ConventionMode, fmt: BinaryFormat = BINARY64) -> DecimalInterval:
    """Exact decimal interval a notation denotes.

    CLIP's bare numeral and ``d#`` are defined through binary floats, so
    for those the bounds are the exact decimals of the floats in ``fmt``.
    """
    if isinstance(ast, Plain):
        iv = _ordered(ast.lower, ast.upper)
        return iv.scaled(ast.scale) if ast.scale else iv
    if isinstance(ast, Factored):
        try:
            return unfactor(ast.form)
        except FactoringError as exc:
            raise NotationError(str(exc)) from None
    if isinstance(ast, BracketPoint):
        return DecimalInterval.point(ast.value)
    if isinstance(ast, CenterPlus):
        return _ordered(_add(ast.center, ast.lower_offset), _add(ast.center, ast.upper_offset))
    if isinstance(ast, Angle):
        return _ordered(decnum.sub(ast.center, ast.radius), _add(ast.center, ast.radius))
    d = ast.value
    unit = uld(d)
    if ast.marker == "*":
        return DecimalInterval(decnum.sub(d, unit), _add(d, unit))
    if ast.marker == "...":
        return DecimalInterval(d, _add(d, unit))
    if ast.marker == "#":
        return DecimalInterval.point(_binary_decimal(from_decimal_nearest(d, fmt)))
    if mode is ConventionMode.POINT:
        return DecimalInterval.point(d)
    if mode is ConventionMode.PHYSICS:
        return DecimalInterval(d, _add(d, unit))
    if mode is ConventionMode.SINGLE_NUMBER:
        return DecimalInterval(decnum.sub(d, unit), _add(d, unit))
    lo = from_decimal_directed(d, DOWN, fmt)
    hi = from_decimal_directed(d, UP, fmt)
    return DecimalInterval(_binary_decimal(lo), _binary_decimal(hi))


def outward_binary(interval: DecimalInterval, fmt: BinaryFormat = BINARY64, saturate: bool = False) -> BinaryInterval:
    """Smallest float-bounded interval enclosing a decimal interval.

    A bound beyond the largest finite float raises
    :class:`ConversionOverflow` unless ``saturate`` is set, in which case
    that side becomes infinite (still an enclosure).
    """
    def side(d: Optional[DecimalNumeral], direction) -> BinaryFloat:
        sign = -1 if direction is DOWN else 1
        if d is None:
            return BinaryFloat.infinity(sign, fmt)
        try:
            return from_decimal_directed(d, direction, fmt)
        except ConversionOverflow:
            if not saturate:
                raise
            return BinaryFloat.infinity(sign, fmt)

    return BinaryInterval(side(interval.lower, DOWN), side(interval.upper, UP))


def to_interval(
    ast: NotationAST, mode: ConventionMode, fmt: BinaryFormat = BINARY64, saturate: bool = False
) -> BinaryInterval:
    """Guaranteed enclosure of the notation's meaning with bounds in ``fmt``.

    ``d#`` is the exception: it names a single float, not an enclosure.
    """
    if isinstance(ast, Bare) and ast.marker == "#":
        n = from_decimal_nearest(ast.value, fmt)
        return BinaryInterval(n, n)
    return outward_binary(to_decimal_interval(ast, mode, fmt), fmt, saturate)


def parse_interval(
    text: str, mode: ConventionMode = ConventionMode.POINT, fmt: BinaryFormat = BINARY64, saturate: bool = False
) -> BinaryInterval:
    return to_interval(parse(text, mode), mode, fmt, saturate)
