from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sh3.cyclotomic import CycMatrix, CycNum, OMEGA, ONE, ZERO, SparseEchelon

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=9)
cycnums = st.builds(CycNum, rationals, rationals)


def test_omega_minimal_polynomial():
    assert OMEGA * OMEGA == CycNum(-1, -1)
    assert OMEGA * OMEGA * OMEGA == ONE
    # (1 + w)(1 + w^2) = (1 + w)(-w) = 1
    w2 = OMEGA * OMEGA
    assert (ONE + OMEGA) * (ONE + w2) == ONE


def test_inverse_of_omega():
    assert OMEGA.inverse() == CycNum(-1, -1)
    assert OMEGA * OMEGA.inverse() == ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_conj_is_involution_and_norm():
    z = CycNum(Fraction(2, 3), Fraction(-5, 7))
    assert z.conj().conj() == z
    assert (z * z.conj()).is_rational()
    assert z.norm() == (z * z.conj()).rational_part()


@settings(max_examples=60, deadline=None)
@given(cycnums, cycnums, cycnums)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if a:
        assert a * a.inverse() == ONE


@settings(max_examples=60, deadline=None)
@given(cycnums, cycnums)
def test_conj_is_automorphism(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


def test_string_forms():
    assert str(ZERO) == "0"
    assert str(CycNum(Fraction(3, 2))) == "3/2"
    assert str(OMEGA) == "w"
    assert str(-OMEGA) == "-w"
    assert str(CycNum(1, 1)) == "1 + w"
    assert str(CycNum(Fraction(1, 2), Fraction(-1, 3))) == "1/2 - 1/3*w"


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def test_rank_examples():
    assert CycMatrix.identity(2).rank() == 2
    m = CycMatrix([[ONE, OMEGA], [OMEGA, CycNum(-1, -1)]])
    assert m.rank() == 1
    assert CycMatrix.zeros(3, 4).rank() == 0


def test_nullspace_examples():
    assert CycMatrix.identity(3).nullspace() == []
    basis = CycMatrix([[ONE, ONE]]).nullspace()
    assert len(basis) == 1
    v = basis[0]
    assert v[0] == ONE and v[1] == -ONE  # normalized: first nonzero is 1


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.builds(CycNum, rationals,
                                   st.fractions(min_value=-4, max_value=4, max_denominator=3)),
                         min_size=3, max_size=3),
                min_size=2, max_size=4))
def test_rank_nullity_and_exact_kernel(rows):
    m = CycMatrix(rows)
    null = m.nullspace()
    assert m.rank() + len(null) == m.cols
    for v in null:
        assert all(not c for c in m.mul_vec(v))


def test_solve():
    m = CycMatrix([[ONE, OMEGA], [ZERO, ONE]])
    sol = m.solve([OMEGA, ONE])
    assert sol is not None
    assert m.mul_vec(sol) == [OMEGA, ONE]
    # inconsistent system
    m2 = CycMatrix([[ONE, ONE], [ONE, ONE]])
    assert m2.solve([ONE, ZERO]) is None


def test_inverse_round_trip():
    m = CycMatrix([[ONE, OMEGA, ZERO],
                   [ZERO, CycNum(2), ONE],
                   [OMEGA, ZERO, CycNum(Fraction(1, 3))]])
    inv = m.inverse()
    prod = [[sum((m.entries[i][k] * inv.entries[k][j] for k in range(3)), ZERO)
             for j in range(3)] for i in range(3)]
    assert prod == CycMatrix.identity(3).entries


def test_sparse_echelon_kernel():
    ech = SparseEchelon()
    ech.insert({0: ONE, 1: ONE})
    ech.insert({1: ONE, 2: ONE})
    assert ech.rank == 2
    ker = ech.kernel(3)
    assert len(ker) == 1
    assert not ech.insert({0: ONE, 2: -ONE})  # dependent row
