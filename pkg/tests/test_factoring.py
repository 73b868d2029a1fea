import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import numeral_value
from intervalfmt.decnum import DecimalNumeral
from intervalfmt.factoring import (
    FactoredForm,
    FactoringError,
    FormSign,
    Style,
    factor,
    normalize_scale,
    render,
    single_number,
    unfactor,
)
from intervalfmt.interval_model import DecimalInterval, outward_decimal

GOLDEN = DecimalInterval.parse("0.6180339887498946804", "0.6180339887498950136")
SHORT = DecimalInterval.parse("0.12345678", "0.12356789")


def iv(lo, hi):
    return DecimalInterval.parse(lo, hi)


def same_numeral(a, b):
    return a.sign == b.sign and a.normalized() == b.normalized()


def test_factor_golden():
    f = factor(GOLDEN)
    assert (f.sign, f.prefix, f.lower_suffix, f.upper_suffix) == (FormSign.POSITIVE, "0.61803398874989", "46804", "50136")


def test_factor_negative_keeps_bound_order():
    f = factor(iv("-1.234", "-1.230"))
    assert (f.sign, f.prefix, f.lower_suffix, f.upper_suffix) == (FormSign.NEGATIVE, "1.23", "4", "0")
    back = unfactor(f)
    assert numeral_value(back.lower) == Fraction("-1.234")
    assert numeral_value(back.upper) == Fraction("-1.230")


def test_factor_mixed_sign_is_plain():
    f = factor(iv("-0.3", "0.2"))
    assert f.sign == FormSign.MIXED and f.prefix == ""
    assert (f.lower_suffix, f.upper_suffix) == ("-0.3", "0.2")


def test_unfactor_examples():
    got = unfactor(FactoredForm(FormSign.POSITIVE, "5.12684", "2", "8"))
    assert (got.lower.to_fixed(), got.upper.to_fixed()) == ("5.126842", "5.126848")
    plain = unfactor(FactoredForm(FormSign.MIXED, "", "-0.3", "0.2"))
    assert (plain.lower.to_fixed(), plain.upper.to_fixed()) == ("-0.3", "0.2")
    with pytest.raises(FactoringError):
        unfactor(FactoredForm(FormSign.POSITIVE, "0.12", "9", "11"))


def test_minimum_prefix_rule():
    # no common digit: plain unless the bare "0." prefix is asked for
    interval = iv("0.199", "0.201")
    assert not factor(interval).is_factored
    f = factor(interval, allow_bare_point=True)
    assert f.prefix == "0." and (f.lower_suffix, f.upper_suffix) == ("199", "201")


bounds = st.builds(
    lambda a, b, place: DecimalInterval(DecimalNumeral.from_int(min(a, b), place), DecimalNumeral.from_int(max(a, b), place)),
    st.integers(-10**12, 10**12),
    st.integers(-10**12, 10**12),
    st.integers(-15, 4),
)


@given(bounds)
def test_unfactor_inverts_factor(interval):
    back = unfactor(factor(interval))
    assert numeral_value(back.lower) == numeral_value(interval.lower)
    assert numeral_value(back.upper) == numeral_value(interval.upper)


@given(bounds)
def test_prefix_is_maximal(interval):
    f = factor(interval)
    if not f.is_factored:
        return
    lo, hi = f.lower_suffix, f.upper_suffix
    assert not (lo and hi and lo[0] == hi[0])


def test_normalize_scale_two_exponents():
    interval = iv("5.1268427635136e2", "5.1268472635136e3")
    f = normalize_scale(interval)
    assert (f.lower_suffix, f.upper_suffix, f.scale) == ("0.51268427635136", "5.1268472635136", 3)
    assert render(interval, Style.PLAIN, 2) == "[0.51,5.2] x 10^3"
    assert render(interval, Style.FACTORED, 2) == "[0.51,5.2] x 10^3"


def test_normalize_scale_zero_scale_unchanged():
    f = normalize_scale(iv("1.5", "2.5"))
    assert f.scale == 0 and (f.lower_suffix, f.upper_suffix) == ("1.5", "2.5")


@given(bounds)
def test_normalize_scale_preserves_values(interval):
    f = normalize_scale(interval)
    back = unfactor(f)
    assert numeral_value(back.lower) == numeral_value(interval.lower)
    assert numeral_value(back.upper) == numeral_value(interval.upper)


def test_render_examples():
    assert render(GOLDEN) == "0.61803398874989[46804,50136]"
    assert render(GOLDEN, digits=3) == "0.61803398874989[468,502]"
    assert render(GOLDEN, Style.CENTER_RADIUS_PLUS) == (
        "0.6180339887498948470 + [-0.0000000000000001666,+0.0000000000000001666]"
    )
    assert render(GOLDEN, Style.CENTER_RADIUS_ANGLE) == "<0.6180339887498948470,0.0000000000000001666>"
    assert render(SHORT, Style.SINGLE_NUMBER) == "0.1235"
    assert render(GOLDEN, Style.PLAIN) == "[0.6180339887498946804,0.6180339887498950136]"


def test_render_negative_and_point():
    assert render(iv("-1.234", "-1.230")) == "-1.23[4,0]"
    assert render(iv("5", "5")) == "[5]"
    assert render(iv("5", "5"), Style.SINGLE_NUMBER) == "[5]"


def test_render_small_magnitudes_use_scale():
    text = render(iv("0.0000012345", "0.0000012399"))
    assert text.endswith(" x 10^-6")


def test_single_number_examples():
    d = single_number(SHORT)
    assert d.to_fixed() == "0.1235"


def _single_ok(d: Fraction, unit: Fraction, lo: Fraction, hi: Fraction) -> bool:
    return d - unit <= lo and hi <= d + unit


@given(bounds)
def test_single_number_is_longest(interval):
    d = single_number(interval)
    lo, hi = numeral_value(interval.lower), numeral_value(interval.upper)
    if lo == hi:
        return
    unit = Fraction(10) ** d.last_place
    assert _single_ok(numeral_value(d), unit, lo, hi)
    # brute force: no numeral one digit longer works
    finer = unit / 10
    start = math.floor(lo / finer) - 2
    stop = math.ceil(hi / finer) + 2
    if stop - start < 10**5:
        assert not any(_single_ok(n * finer, finer, lo, hi) for n in range(start, stop + 1))


@given(bounds, st.sampled_from([1, 2, 3, None]))
def test_factored_render_has_requested_suffix_length(interval, k):
    text = render(interval, Style.FACTORED, k)
    if "[" in text and "," in text and not text.startswith("["):
        body = text[text.index("[") + 1 : text.index("]")]
        lo, hi = body.split(",")
        assert len(lo) == len(hi)
        if k is not None:
            j = outward_decimal(interval, k)
            assert max(len(lo), len(hi)) <= k or j.is_point


def test_unbounded_plain_render():
    interval = DecimalInterval(None, DecimalNumeral.parse("3"))
    assert render(interval) == "[-inf,3]"
    with pytest.raises(ValueError):
        render(interval, Style.SINGLE_NUMBER)
