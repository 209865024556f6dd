from fractions import Fraction

import pytest

from sh3.cyclotomic import CycNum, OMEGA, ONE
from sh3.mpoly import MPolynomial


def test_arithmetic_and_degree():
    p = MPolynomial.of(1, 2)      # 1 + 2m
    q = MPolynomial.of(0, 0, 3)   # 3m^2
    assert (p * q).coeffs == [CycNum.of(c) for c in (0, 0, 3, 6)]
    assert (p + q).degree == 2
    assert MPolynomial().is_zero()
    assert MPolynomial.of(0, 0).is_zero()


def test_divmod_and_gcd():
    p = MPolynomial.from_roots(1, 2)
    q = MPolynomial.from_roots(2, 3)
    g = MPolynomial.gcd(p, q)
    assert g == MPolynomial.from_roots(2)
    quo, rem = (p * q).divmod(p)
    assert rem.is_zero() and quo == q


def test_xgcd_identity():
    p = MPolynomial.from_roots(Fraction(3, 2), -1)
    q = MPolynomial.from_roots(Fraction(3, 2), 5) * 7
    g, a, b = MPolynomial.xgcd(p, q)
    assert g == MPolynomial.from_roots(Fraction(3, 2))
    assert a * p + b * q == g


def test_shift_and_reflect():
    p = MPolynomial.from_roots(1)          # m - 1
    assert p.shift(Fraction(9, 2)) == MPolynomial.of(Fraction(7, 2), 1)
    assert p.reflect() == MPolynomial.of(-1, -1)
    q = MPolynomial.of(1, 0, 1)
    assert q.reflect() == q


def test_eval_and_roots():
    p = MPolynomial.from_roots(Fraction(-3, 2), OMEGA)
    assert not p.eval(Fraction(-3, 2))
    assert not p.eval(OMEGA)
    assert p.eval(0) == CycNum.of(Fraction(-3, 2)) * (-OMEGA)


def test_coeff_string_round_trip():
    p = MPolynomial([CycNum(Fraction(1, 2), Fraction(-2, 3)), ONE, OMEGA])
    assert MPolynomial.from_coeff_strings(p.coeff_strings()) == p


def test_monic():
    p = MPolynomial.of(2, 4)
    assert p.monic() == MPolynomial.of(Fraction(1, 2), 1)
    with pytest.raises(ZeroDivisionError):
        MPolynomial().divmod(MPolynomial())


def test_str_forms():
    assert str(MPolynomial()) == "0"
    assert str(MPolynomial.of(Fraction(-3, 2), 1)) == "m - 3/2"
    assert str(MPolynomial.of(0, 0, 2)) == "2*m^2"
