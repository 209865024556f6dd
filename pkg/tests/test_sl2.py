import json
import random
from fractions import Fraction

import pytest

from sh3 import s3
from sh3.algebra import (Element, Monomial, commutator, l_elt, m_elt,
                         m_power, normal_mul, q_elt, scalar, superbracket,
                         t_elt, unit, x_elt, xp_elt, y_elt, yp_elt)
from sh3.cyclotomic import ZERO
from sh3.sl2 import (ad_matrix, highest_vector_ascend, isotypic_decompose,
                     singlet_project, slice_words)


def test_ad_examples_degree_one():
    # T^00 sends x+ to 2x and kills x
    assert commutator(t_elt(0, 0), xp_elt()) == x_elt().scale(2)
    assert commutator(t_elt(0, 0), x_elt()).is_zero()
    # T^01 is diagonal: annihilators -1, creators +1
    assert commutator(t_elt(0, 1), x_elt()) == -x_elt()
    assert commutator(t_elt(0, 1), yp_elt()) == yp_elt()


def test_ad_kills_group_algebra():
    words = slice_words(0)
    for key in ((0, 0), (0, 1), (1, 1)):
        mat = ad_matrix(key, words)
        assert all(not c for row in mat.entries for c in row)


def test_isotypic_degree_counts():
    r0 = isotypic_decompose(0)
    assert r0.multiplicities == {Fraction(0): 6}
    r1 = isotypic_decompose(1)
    assert r1.multiplicities == {Fraction(1, 2): 12}
    assert r1.dimension == 24
    r2 = isotypic_decompose(2)
    assert r2.multiplicities[Fraction(0)] == 6  # the m E singlets
    for d in range(5):
        assert isotypic_decompose(d).check_dimension()


def test_isotypic_against_weight_counting():
    # independent check: mult(s) = n(2s) - n(2s+2) with n(w) the number of
    # words at diagonal eigenvalue w
    for d in range(5):
        words = slice_words(d)
        n = {}
        for w in words:
            wt = (w[0] + w[1]) - (w[2] + w[3])
            n[wt] = n.get(wt, 0) + 1
        rep = isotypic_decompose(d)
        for s, mult in rep.multiplicities.items():
            expect = n.get(int(2 * s), 0) - n.get(int(2 * s) + 2, 0)
            assert mult == 6 * expect, (d, s)


def test_isotypic_json():
    doc = json.loads(isotypic_decompose(1).to_json())
    assert doc == {"degree": 1, "multiplicities": {"1/2": 12}}


def test_singlet_projection_basics():
    m = m_elt()
    assert singlet_project(m) == m
    assert singlet_project(x_elt()).is_zero()
    assert singlet_project(t_elt(0, 1)).is_zero()
    assert singlet_project(unit()) == unit()


def test_singlet_projection_idempotent_and_killed_by_ad():
    rng = random.Random(5)
    for _ in range(25):
        t = {}
        for _ in range(3):
            n = rng.randint(0, 4)
            b = rng.randint(0, n)
            d = rng.randint(0, n - b)
            a = rng.randint(0, n - b - d)
            t[Monomial(b, d, a, n - b - d - a, rng.randrange(6))] = rng.randint(1, 3)
        f = Element(t)
        p = singlet_project(f)
        assert singlet_project(p) == p
        for key in ((0, 0), (0, 1), (1, 1)):
            assert superbracket(t_elt(*key), p).is_zero()


def test_singlet_identity_on_m_span():
    for n in range(4):
        for e in range(6):
            elem = normal_mul(m_power(n), Element({Monomial(0, 0, 0, 0, e): 1}))
            assert singlet_project(elem) == elem


def test_singlet_factors_through_invariants():
    # (s F)_0 = s (F)_0 for an invariant s
    m = m_elt()
    f = normal_mul(xp_elt(), y_elt())
    lhs = singlet_project(normal_mul(m, f))
    rhs = normal_mul(m, singlet_project(f))
    assert lhs == rhs


def test_contraction_singlets_frozen():
    """The invariant parts of (x+)^n y^n, derived independently by solving
    the weight-zero block by hand."""
    m = m_elt()
    u1 = singlet_project(normal_mul(xp_elt(), y_elt()))
    assert u1 == m - scalar(Fraction(3, 2))
    u2 = singlet_project(normal_mul(xp_elt() ** 2, y_elt() ** 2))
    expect2 = ((m - scalar(Fraction(3, 2))) * (m - scalar(3))).scale(Fraction(4, 3))
    assert u2 == expect2
    u3 = singlet_project(normal_mul(xp_elt() ** 3, y_elt() ** 3))
    expect3 = ((m - scalar(Fraction(3, 2))) * (m - scalar(3))
               * (m - scalar(Fraction(9, 2)))).scale(2)
    assert u3 == expect3
    # mirrored pair: ((y+)^n x^n)_0 is the reflection
    v1 = singlet_project(normal_mul(yp_elt(), x_elt()))
    assert v1 == -(m + scalar(Fraction(3, 2)))


def test_cube_contraction_polynomial():
    # (y^3 (x+)^3)_0 = 2 (m + 3/2)(m + 3)(m + 9/2)
    cube = normal_mul(y_elt() ** 3, xp_elt() ** 3)
    m = m_elt()
    expect = ((m + scalar(Fraction(3, 2))) * (m + scalar(3))
              * (m + scalar(Fraction(9, 2)))).scale(2)
    assert singlet_project(cube) == expect


def test_highest_vector_ascend():
    m = m_elt()
    assert highest_vector_ascend(m) == m
    assert highest_vector_ascend(x_elt()) == x_elt()
    assert highest_vector_ascend(xp_elt()) == x_elt().scale(2)
    with pytest.raises(ValueError):
        highest_vector_ascend(Element.zero())


def test_graded_matrices_satisfy_bracket_relations():
    for deg in range(4):
        words = slice_words(deg)
        n = len(words)
        E = ad_matrix((1, 1), words, graded=True)
        F = ad_matrix((0, 0), words, graded=True)
        H = ad_matrix((0, 1), words, graded=True)
        for i in range(n):
            for j in range(n):
                # [ad T11, ad T00] = ad [T11, T00] = -4 ad T01
                ef = sum((E.entries[i][k] * F.entries[k][j] for k in range(n)), ZERO)
                fe = sum((F.entries[i][k] * E.entries[k][j] for k in range(n)), ZERO)
                assert ef - fe == H.entries[i][j] * (-4)
                he = sum((H.entries[i][k] * E.entries[k][j] for k in range(n)), ZERO)
                eh = sum((E.entries[i][k] * H.entries[k][j] for k in range(n)), ZERO)
                assert he - eh == E.entries[i][j] * 2
