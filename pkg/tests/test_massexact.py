from fractions import Fraction
from math import comb, factorial

import pytest

from sdclass.errors import NonDivisible
from sdclass.massexact import (
    completeness_check,
    enumerator_sum,
    lower_bound_next_length,
    render_decimal,
    sigma_product,
    thompson_check,
    thompson_rhs,
    total_mass_check,
)


def test_sigma_product():
    assert sigma_product(0) == 1
    assert sigma_product(3) == 135
    assert sigma_product(17) == thompson_rhs(36)[0]
    with pytest.raises(ValueError):
        sigma_product(-1)


def test_thompson_rhs_examples():
    assert thompson_rhs(2).coefficients == (1, 0, 1)
    r8 = thompson_rhs(8)
    assert r8[0] == 135 and r8[4] == comb(8, 4) * 15 == 1050
    assert all(r8[w] == 0 for w in range(1, 8, 2))
    with pytest.raises(ValueError):
        thompson_rhs(7)


def test_length8_family():
    # i2^4 has aut 384 and six weight-4 words; e8 has aut 1344 and fourteen
    i2_4 = [1, 0, 4, 0, 6, 0, 4, 0, 1]
    e8 = [1, 0, 0, 0, 14, 0, 0, 0, 1]
    family = [(384, i2_4), (1344, e8)]
    assert completeness_check(family, 8, 4).lhs == 105 * 6 + 30 * 14 == 1050
    assert completeness_check(family, 8, 4).ok
    assert completeness_check(family[:1], 8, 4).lhs == 630
    assert not completeness_check(family[:1], 8, 4)
    assert total_mass_check([384, 1344], 8).ok
    assert thompson_check(family, 8)
    assert enumerator_sum(family, 8) == thompson_rhs(8)


def test_certificate_rendering():
    cert = total_mass_check([2], 2)
    assert cert.render() == "cert mass n=2 d=any lhs=1 rhs=1 ok=1"


def test_non_divisible_group_order():
    with pytest.raises(NonDivisible):
        total_mass_check([7], 4)


def test_bound_examples():
    frac, ceiling = lower_bound_next_length(2)
    assert frac == Fraction(1, 2) and ceiling == 1
    frac, ceiling = lower_bound_next_length(38)
    assert ceiling == 13644433
    assert render_decimal(frac).startswith("13644432.203")
    assert lower_bound_next_length(36)[1] < 519492


def test_render_decimal_truncates():
    assert render_decimal(Fraction(2, 3)) == "0.666"
    assert render_decimal(Fraction(5, 1), 2) == "5.00"


def test_mass_divided_by_factorial():
    frac, _ = lower_bound_next_length(10)
    assert frac == Fraction(sigma_product(4), factorial(10))
