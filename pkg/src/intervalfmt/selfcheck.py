"""Randomized enclosure self-test behind ``intervalfmt check``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .binconv import BINARY64, BinaryFloat, BinaryFormat, BinaryInterval, float_from_ordinal, float_ordinal
from .decnum import DecimalNumeral
from .factoring import Style, render
from .interval_model import DecimalInterval, as_decimal, encloses, outward_decimal
from .notation_parser import ConventionMode, parse_interval

DIGIT_CHOICES = (1, 2, 3, None)


def random_float(rng: random.Random, fmt: BinaryFormat, exp_span: Optional[int] = None) -> BinaryFloat:
    lo, hi = fmt.min_exponent, fmt.max_exponent
    if exp_span is not None:
        lo, hi = max(lo, -exp_span), min(hi, exp_span)
    sign = rng.choice((1, -1))
    if rng.random() < 0.02:
        return BinaryFloat(sign, rng.randrange(1, fmt.hidden_bit), fmt.min_exponent, fmt)
    e = rng.randint(lo, hi)
    return BinaryFloat(sign, rng.randrange(fmt.hidden_bit, fmt.max_significand + 1), e, fmt)


def random_interval(rng: random.Random, fmt: BinaryFormat = BINARY64, exp_span: Optional[int] = 60) -> BinaryInterval:
    """A float-bounded interval; narrow ones dominate, with some wide,
    zero-straddling and degenerate cases mixed in."""
    x = random_float(rng, fmt, exp_span)
    roll = rng.random()
    if roll < 0.05:
        y = x
    elif roll < 0.75:
        steps = int(10 ** rng.uniform(0, min(12, fmt.significand_bits * 0.3)))
        y = float_from_ordinal(float_ordinal(x) + steps, fmt)
        if y.is_infinite:
            y = fmt.max_finite(1)
    else:
        y = random_float(rng, fmt, exp_span)
    if x.compare(y) > 0:
        x, y = y, x
    return BinaryInterval(x, y)


def roundtrip_failures(interval: BinaryInterval) -> Iterator[tuple[Style, Optional[int], str]]:
    """Yield every (style, digits, text) whose parse fails to enclose ``interval``."""
    dec = as_decimal(interval)
    for style in Style:
        mode = ConventionMode.SINGLE_NUMBER if style is Style.SINGLE_NUMBER else ConventionMode.POINT
        for k in DIGIT_CHOICES:
            text = render(dec, style, k)
            back = parse_interval(text, mode, interval.fmt, saturate=True)
            if not back.contains(interval):
                yield style, k, text


def _bump(d: DecimalNumeral, units: int) -> DecimalNumeral:
    return DecimalNumeral.from_int(d.signed_int(d.last_place) + units, d.last_place)


def mutation_outcomes(interval: DecimalInterval, digits=(1, 2, 3)) -> tuple[int, int]:
    """Shrink each bound of every outward rounding by one unit in its last
    digit; return (applicable mutations, mutations that still enclose)."""
    applicable = survivors = 0
    for k in digits:
        j = outward_decimal(interval, k)
        candidates = []
        for lo, hi in ((_bump(j.lower, 1), j.upper), (j.lower, _bump(j.upper, -1))):
            try:
                candidates.append(DecimalInterval(lo, hi))
            except ValueError:
                continue
        for m in candidates:
            applicable += 1
            if encloses(m, interval):
                survivors += 1
    return applicable, survivors


@dataclass
class CheckSummary:
    intervals: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)
    mutations: int = 0
    survivors: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and self.survivors == 0


def run_check(
    samples: int,
    fmt: BinaryFormat = BINARY64,
    seed: int = 0,
    mutation: bool = False,
    exp_span: Optional[int] = 60,
) -> CheckSummary:
    rng = random.Random(seed)
    summary = CheckSummary()
    for _ in range(samples):
        iv = random_interval(rng, fmt, exp_span)
        summary.intervals += 1
        if mutation:
            a, s = mutation_outcomes(as_decimal(iv))
            summary.mutations += a
            summary.survivors += s
            continue
        summary.checks += len(Style) * len(DIGIT_CHOICES)
        for style, k, text in roundtrip_failures(iv):
            summary.failures.append((iv, style, k, text))
    return summary
