from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import codes
from framedcodes import moonshine_data as md
from framedcodes.gf2 import LinearCode, WeightEnumerator, dual, weight_enumerator
from framedcodes.moonshine import MoonshineFrame
from framedcodes.qseries import (
    DEFAULT_PREC,
    UNIT,
    QSeries,
    code_voa_character,
    code_voa_character_from_dual,
    mckay_thompson,
    product_half_odd,
    trunc_to_prec,
)


def series(draw_prec=96):
    exps = st.integers(-48, draw_prec)
    return st.builds(
        lambda d: QSeries(draw_prec, d),
        st.dictionaries(exps, st.integers(-50, 50), max_size=12),
    )


@pytest.fixture(scope="module")
def moon_enums():
    f = MoonshineFrame.standard()
    return weight_enumerator(f.D), weight_enumerator(f.D_xi)


# products


def test_plus_product_first_coefficients():
    s = product_half_odd(1, 3 * UNIT)
    # drop the q^{-1/48} prefactor and read exponents 0, 1/2, ..., 5/2
    got = [s.coefficient(Fraction(k, 2) - Fraction(1, 48)) for k in range(6)]
    assert got == [1, 1, 0, 1, 1, 1]


def test_minus_product_constant_term():
    s = product_half_odd(-1, UNIT)
    assert s.coefficient(Fraction(-1, 48)) == 1
    assert s.valuation == -1


@pytest.mark.parametrize("sign", [1, -1])
def test_products_match_oracle(sign):
    terms = 40
    ref = oracles.half_odd_product(sign, terms)
    s = product_half_odd(sign, (terms - 1) * UNIT // 2)
    for k, c in enumerate(ref):
        assert s[k * UNIT // 2 - 1] == c


def test_product_of_products_has_integral_spacing():
    prec = 10 * UNIT
    ab = product_half_odd(1, prec) * product_half_odd(-1, prec)
    # q^{-1/24} times a series in q: all exponents are -2 mod 48
    assert ab.coeffs and all((e + 2) % UNIT == 0 for e in ab.coeffs)


# characters


def test_character_of_zero_code_length_one():
    c = LinearCode(1)
    s = code_voa_character(weight_enumerator(c), 4 * UNIT)
    a, b = product_half_odd(1, 4 * UNIT), product_half_odd(-1, 4 * UNIT)
    # ch L(1/2, 0) = (A + B) / 2
    assert s == (a + b).exact_div(2)


def test_even16_routes_agree():
    c = dual(LinearCode.from_strings(["1" * 16]))
    direct = code_voa_character(weight_enumerator(c), 6 * UNIT)
    via = code_voa_character_from_dual(weight_enumerator(dual(c)), 6 * UNIT)
    assert direct == via
    assert direct.valuation == -16


def test_moonshine_character_leading_term():
    f = MoonshineFrame.standard()
    s = code_voa_character_from_dual(weight_enumerator(f.D), 2 * UNIT)
    assert s.valuation == -UNIT and s[-UNIT] == 1


@given(codes(min_n=1, max_n=12, max_k=12))
def test_direct_and_dual_routes_agree(c):
    prec = 3 * UNIT
    assert code_voa_character(weight_enumerator(c), prec) == code_voa_character_from_dual(
        weight_enumerator(dual(c)), prec
    )


# McKay-Thompson


def test_moonshine_series(moon_enums):
    wd, wx = moon_enums
    s = mckay_thompson(wd, wx, trunc_to_prec(8))
    assert {p: s.coefficient(p) for p in md.MT_COEFFS} == md.MT_COEFFS
    assert s.valuation == -UNIT
    # exponents are integral
    assert all(e % UNIT == 0 for e in s.coeffs)
    assert [s.coefficient(k) for k in range(3, 6)] == [11202, 49152, 184024]


def test_f_polynomial(moon_enums):
    wd, wx = moon_enums
    assert wx - wd == md.F_POLY


def test_equal_enumerators_give_zero(moon_enums):
    wd, _ = moon_enums
    assert mckay_thompson(wd, wd, 2 * UNIT).coeffs == {}


def test_series_is_twice_C0_minus_C():
    f = MoonshineFrame.standard()
    prec = 3 * UNIT
    ch_c = code_voa_character_from_dual(weight_enumerator(f.D), prec)
    ch_c0 = code_voa_character_from_dual(weight_enumerator(f.D_xi), prec)
    mt = mckay_thompson(weight_enumerator(f.D), weight_enumerator(f.D_xi), prec)
    assert mt == ch_c0 * 2 - ch_c


def test_mismatched_lengths():
    with pytest.raises(ValueError):
        mckay_thompson(WeightEnumerator.from_dict(2, {0: 1}), WeightEnumerator.from_dict(3, {0: 1}))


# arithmetic


def test_inexact_division():
    with pytest.raises(ArithmeticError):
        QSeries(10, {0: 3}).exact_div(2)


def test_indexing_beyond_precision():
    s = QSeries(10, {0: 1})
    assert s[5] == 0
    with pytest.raises(IndexError):
        s[11]
    assert s.coefficient(Fraction(1, 96)) == 0


def test_truncate_and_shift():
    s = QSeries(20, {0: 1, 10: 2, 20: 3})
    assert s.truncate(10).coeffs == {0: 1, 10: 2}
    with pytest.raises(ValueError):
        s.truncate(30)
    t = s.shift(-5)
    assert t.prec == 15 and t.coeffs == {-5: 1, 5: 2, 15: 3}


def test_rendering():
    s = QSeries(96, {-48: 1, 48: 276})
    assert s.lines() == ["1 q^{-1}", "276 q^{1}"]
    assert s.pairs() == [(-48, 1), (48, 276)]
    assert "O(q^(97/48))" in str(s)


def test_power():
    s = QSeries(96, {0: 1, 24: 1})
    assert s ** 0 == QSeries.one(96)
    assert s ** 3 == s * s * s
    with pytest.raises(ValueError):
        s ** -1


def test_default_precision():
    assert DEFAULT_PREC == trunc_to_prec(8)


@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == QSeries(a.prec)


@given(series(), series())
def test_product_truncation_is_exact(a, b):
    # coefficients below the reported precision agree with the untruncated product
    full: dict[int, int] = {}
    for ea, ca in a.coeffs.items():
        for eb, cb in b.coeffs.items():
            full[ea + eb] = full.get(ea + eb, 0) + ca * cb
    p = a * b
    for e in range(-200, p.prec + 1):
        assert p[e] == full.get(e, 0)
