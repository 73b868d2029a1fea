import math
import struct
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import float_table, fraction_to_numeral, neighbor_scan
from intervalfmt.binconv import (
    BINARY32,
    BINARY64,
    REDUCED8,
    BinaryFloat,
    BinaryInterval,
    ConversionOverflow,
    float_from_ordinal,
    float_ordinal,
    format_by_name,
    from_decimal_directed,
    from_decimal_nearest,
    from_hex,
    to_exact_decimal,
    to_hex,
)
from intervalfmt.decnum import DOWN, NEAREST, UP, DecimalNumeral


def dec(text):
    return DecimalNumeral.parse(text)


def test_exact_decimal_small_cases():
    assert to_exact_decimal(BINARY64.zero()).is_zero
    assert to_exact_decimal(BinaryFloat.from_float(0.25)).to_fixed() == "0.25"
    assert to_exact_decimal(BinaryFloat.from_float(-3.0)).to_fixed() == "-3"


def test_exact_decimal_golden_ratio_conjugate():
    x = BinaryFloat.from_float(0.6180339887498949)
    want = Fraction(x.significand, 2 ** (53 - 1 - x.exponent))
    got = to_exact_decimal(x)
    assert Fraction(got.to_fixed()) == want
    # a binary fraction with q fractional bits has exactly q decimals
    assert got.last_place == x.quantum_exponent + ((x.significand & -x.significand).bit_length() - 1)


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_exact_decimal_matches_fraction(x):
    d = to_exact_decimal(BinaryFloat.from_float(x))
    assert Fraction(d.to_scientific()) == Fraction(x)


@given(st.floats(allow_nan=False))
def test_hex_matches_python(x):
    b = BinaryFloat.from_float(x)
    if x == 0:
        # zero carries no sign in interval bounds
        assert to_hex(b) == "0x0.0p+0"
        return
    assert to_hex(b) == x.hex()
    assert from_hex(x.hex()) == b


def test_hex_other_formats():
    one = from_decimal_directed(dec("1"), DOWN, REDUCED8)
    assert to_hex(one) == "0x1.00p+0"
    assert from_hex(to_hex(REDUCED8.max_finite()), REDUCED8) == REDUCED8.max_finite()
    tiny = REDUCED8.min_subnormal()
    assert from_hex(to_hex(tiny), REDUCED8) == tiny


def test_ordinal_roundtrip_and_neighbors():
    x = BinaryFloat.from_float(1.0)
    assert x.next_up().to_float() == math.nextafter(1.0, 2.0)
    assert x.next_down().to_float() == math.nextafter(1.0, 0.0)
    assert BINARY64.zero().next_up().to_float() == 5e-324
    assert BINARY64.max_finite().next_up().is_infinite
    for k in range(-600, 600, 7):
        assert float_ordinal(float_from_ordinal(k, REDUCED8)) == k


def test_directed_cases():
    quarter = dec("0.25")
    assert from_decimal_directed(quarter, DOWN).to_float() == 0.25
    assert from_decimal_directed(quarter, UP).to_float() == 0.25
    for text in ("0.1", "0.123"):
        lo = from_decimal_directed(dec(text), DOWN)
        hi = from_decimal_directed(dec(text), UP)
        assert lo.to_fraction() < Fraction(text) < hi.to_fraction()
        assert lo.next_up() == hi
    with pytest.raises(ValueError):
        from_decimal_directed(quarter, NEAREST)


def test_nearest_cases():
    assert from_decimal_nearest(dec("0.5")).to_float() == 0.5
    x = from_decimal_nearest(dec("0.123"))
    assert x.to_float() == 0.123  # Python's own correctly rounded parse
    # exact midpoint between 1 and its successor ties to the even significand
    mid = (Fraction(1) + BinaryFloat.from_float(1.0).next_up().to_fraction()) / 2
    assert from_decimal_nearest(fraction_to_numeral(mid)).to_float() == 1.0


def _exhaustive_values(fmt):
    """Every float, every midpoint, points just beside both, a grid of short
    decimals across the whole range, and values past the ends."""
    table = float_table(fmt)
    values = set(table)
    eps = Fraction(1, 10**12)
    for a, b in zip(table, table[1:]):
        m = (a + b) / 2
        values.update((m, m - eps, m + eps, a + eps, b - eps))
    top = table[-1]
    for e in range(-8, 6):
        for m in range(100, 1000):
            v = Fraction(m) * Fraction(10) ** (e - 2)
            values.add(v)
            values.add(-v)
    values.update((top + eps, top * 2, -top - eps, -top * 2))
    return table, sorted(values)


def check_directed_against_scan(fmt):
    table, values = _exhaustive_values(fmt)
    checked = 0
    for v in values:
        d = fraction_to_numeral(v)
        down, up = neighbor_scan(v, table)
        for direction, want in ((DOWN, down), (UP, up)):
            if want is None:
                with pytest.raises(ConversionOverflow):
                    from_decimal_directed(d, direction, fmt)
                continue
            if (direction is DOWN and v > table[-1]) or (direction is UP and v < table[0]):
                # toward zero past the range saturates at the largest finite value
                got = from_decimal_directed(d, direction, fmt)
                assert got.to_fraction() == want
                continue
            got = from_decimal_directed(d, direction, fmt)
            assert got.to_fraction() == want, (v, direction)
            checked += 1
    return checked


def test_reduced_format_exhaustive_against_neighbor_scan():
    assert check_directed_against_scan(REDUCED8) > 50000


def test_nearest_reduced_format_against_scan():
    table, values = _exhaustive_values(REDUCED8)
    limit = table[-1] + (table[-1] - table[-2]) / 2
    for v in values:
        d = fraction_to_numeral(v)
        if abs(v) >= limit:
            with pytest.raises(ConversionOverflow):
                from_decimal_nearest(d, REDUCED8)
            continue
        down, up = neighbor_scan(v, table)
        got = from_decimal_nearest(d, REDUCED8)
        if down == up:
            assert got.to_fraction() == v
            continue
        if up is None or down is None:
            assert got.to_fraction() in (down, up)
            continue
        gd, gu = v - down, up - v
        if gd != gu:
            assert got.to_fraction() == (down if gd < gu else up)
        else:
            assert got.significand % 2 == 0


def test_overflow_sides():
    big = dec("1e400")
    assert from_decimal_directed(big, DOWN) == BINARY64.max_finite()
    with pytest.raises(ConversionOverflow) as info:
        from_decimal_directed(big, UP)
    assert info.value.direction is UP
    with pytest.raises(ConversionOverflow):
        from_decimal_nearest(big)


def test_underflow_lands_on_zero_or_min_subnormal():
    tiny = dec("1e-400")
    assert from_decimal_directed(tiny, DOWN).is_zero
    assert from_decimal_directed(tiny, UP) == BINARY64.min_subnormal()
    assert from_decimal_directed(dec("-1e-400"), DOWN) == BINARY64.min_subnormal(-1)


@given(st.floats(min_value=-3.0e38, max_value=3.0e38))
def test_binary32_nearest_matches_struct(x):
    # struct packs a double into single precision with round-to-nearest-even
    d = to_exact_decimal(BinaryFloat.from_float(x))
    got = from_decimal_nearest(d, BINARY32)
    assert got.to_float() == struct.unpack("f", struct.pack("f", x))[0]


@given(st.integers(-10**20, 10**20), st.integers(-30, 30))
def test_directed_bracket_binary64(n, place):
    d = DecimalNumeral.from_int(n, place)
    v = Fraction(n) * Fraction(10) ** place
    lo, hi = from_decimal_directed(d, DOWN), from_decimal_directed(d, UP)
    assert lo.to_fraction() <= v <= hi.to_fraction()
    if lo != hi:
        assert lo.next_up() == hi


def test_format_lookup():
    assert format_by_name("binary64") is BINARY64
    assert format_by_name("reduced") is REDUCED8
    assert format_by_name("11,-14,15").significand_bits == 11
    with pytest.raises(ValueError):
        format_by_name("octuple")


def test_binary_interval_contains():
    outer = BinaryInterval.from_floats(0.0, 1.0)
    assert outer.contains(BinaryInterval.from_floats(0.25, 0.5))
    assert not outer.contains(BinaryInterval.from_floats(-0.25, 0.5))
    with pytest.raises(ValueError):
        BinaryInterval.from_floats(1.0, 0.0)
