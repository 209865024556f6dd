"""Named relation suites behind `verify`: every structure relation of the
algebra as an exact Element (or operator) identity, reported one by one."""

from __future__ import annotations

from fractions import Fraction

from . import s3
from .algebra import (Element, Monomial, commutator, l_elt, m_elt,
                      normal_mul, q_elt, scalar, t_elt, x_elt, xp_elt,
                      y_elt, yp_elt)
from .cyclotomic import ZERO
from .dunkl import abstract_embedding_check, aa_commutator_suite, hamiltonian_check
from .sl2 import ad_matrix, isotypic_decompose, singlet_project, slice_words

__all__ = ["core_suite", "sl2_suite", "dunkl_suite", "run_suites"]


def _delta(k):
    return 1 if k % 3 == 0 else 0


def core_suite():
    """Group tables, transport rules, oscillator and m commutators."""
    checks = {}
    x, xp, y, yp = x_elt(), xp_elt(), y_elt(), yp_elt()
    m = m_elt()
    for i in range(3):
        for j in range(3):
            Li, Lj = l_elt(i), l_elt(j)
            Qi, Qj = q_elt(i), q_elt(j)
            checks["L%d*L%d" % (i, j)] = normal_mul(Li, Lj) == Qj.scale(_delta(i + j))
            checks["L%d*Q%d" % (i, j)] = normal_mul(Li, Qj) == Lj.scale(_delta(i - j))
            checks["Q%d*L%d" % (i, j)] = normal_mul(Qi, Lj) == Lj.scale(_delta(i + j))
            checks["Q%d*Q%d" % (i, j)] = normal_mul(Qi, Qj) == Qj.scale(_delta(i - j))
    for i in range(3):
        Li, Qi = l_elt(i), q_elt(i)
        for tag, xv, yv in (("", x, y), ("p", xp, yp)):
            checks["L%d_x%s" % (i, tag)] = (normal_mul(Li, xv)
                                            == normal_mul(yv, l_elt(i + 1)))
            checks["L%d_y%s" % (i, tag)] = (normal_mul(Li, yv)
                                            == normal_mul(xv, l_elt(i - 1)))
            checks["Q%d_x%s" % (i, tag)] = (normal_mul(Qi, xv)
                                            == normal_mul(xv, q_elt(i + 1)))
            checks["Q%d_y%s" % (i, tag)] = (normal_mul(Qi, yv)
                                            == normal_mul(yv, q_elt(i - 1)))
        checks["L%d_m" % i] = normal_mul(Li, m) == -normal_mul(m, Li)
        checks["Q%d_m" % i] = normal_mul(Qi, m) == normal_mul(m, Qi)
    zero = Element.zero()
    three = scalar(3)
    checks["comm_x_xp"] = commutator(x, xp) == zero
    checks["comm_y_yp"] = commutator(y, yp) == zero
    checks["comm_y_xp"] = commutator(y, xp) == three
    checks["comm_x_yp"] = commutator(x, yp) == three
    checks["comm_x_y"] = commutator(x, y) == zero
    checks["comm_xp_yp"] = commutator(xp, yp) == zero
    th = Fraction(3, 2)
    checks["comm_m_x"] = commutator(m, x) == x.scale(th)
    checks["comm_m_xp"] = commutator(m, xp) == xp.scale(th)
    checks["comm_m_y"] = commutator(m, y) == y.scale(-th)
    checks["comm_m_yp"] = commutator(m, yp) == yp.scale(-th)
    for name, letter in (("x", x), ("xp", xp), ("y", y), ("yp", yp)):
        cube = letter ** 3
        for i in range(3):
            checks["cube_%s_Q%d" % (name, i)] = commutator(cube, q_elt(i)) == zero
    return checks


def _csl2_rhs(ab, cd):
    def eps(a, b):
        return 1 if (a, b) == (0, 1) else -1 if (a, b) == (1, 0) else 0

    out = Element.zero()
    a, b = ab
    c, d = cd
    for e, pair in ((eps(a, c), (b, d)), (eps(a, d), (b, c)),
                    (eps(b, c), (a, d)), (eps(b, d), (a, c))):
        if e:
            out = out + t_elt(min(pair), max(pair)).scale(e)
    return out


def sl2_suite(max_degree=4):
    """Element identities for the sl2 structure plus exact slice checks."""
    checks = {}
    pairs = ((0, 0), (0, 1), (1, 1))
    for ab in pairs:
        for cd in pairs:
            lhs = commutator(t_elt(*ab), t_elt(*cd))
            checks["csl2_T%d%d_T%d%d" % (ab + cd)] = lhs == _csl2_rhs(ab, cd)
    x, xp, y, yp = x_elt(), xp_elt(), y_elt(), yp_elt()
    vecs = {("x", 0): x, ("x", 1): xp, ("y", 0): y, ("y", 1): yp}

    def eps(a, b):
        return 1 if (a, b) == (0, 1) else -1 if (a, b) == (1, 0) else 0

    for ab in pairs:
        a, b = ab
        for fam in ("x", "y"):
            for g in (0, 1):
                lhs = commutator(t_elt(a, b), vecs[(fam, g)])
                rhs = (vecs[(fam, b)].scale(eps(a, g))
                       + vecs[(fam, a)].scale(eps(b, g)))
                checks["sl2vec_T%d%d_%s%d" % (a, b, fam, g)] = lhs == rhs
        for e in range(6):
            ge = Element({Monomial(0, 0, 0, 0, e): 1})
            checks["Tgroup_T%d%d_%s" % (a, b, s3.name_of(e))] = \
                commutator(t_elt(a, b), ge).is_zero()
    # graded slice checks: matrix structure constants and dimension counts
    for deg in range(0, max_degree + 1):
        words = slice_words(deg)
        E = ad_matrix((1, 1), words, graded=True)
        F = ad_matrix((0, 0), words, graded=True)
        H = ad_matrix((0, 1), words, graded=True)
        n = len(words)
        ok = True
        # [ad T11, ad T00] = ad [T11, T00] = -4 ad T01 on every slice
        for i in range(n):
            for j in range(n):
                ef = sum((E.entries[i][k] * F.entries[k][j] for k in range(n)),
                         ZERO)
                fe = sum((F.entries[i][k] * E.entries[k][j] for k in range(n)),
                         ZERO)
                if ef - fe != H.entries[i][j] * (-4):
                    ok = False
        checks["slice%d_EF_commutator" % deg] = ok
        rep = isotypic_decompose(deg)
        checks["slice%d_dimension_count" % deg] = rep.check_dimension()
    m = m_elt()
    checks["singlet_m_fixed"] = singlet_project(m) == m
    checks["singlet_idempotent_sample"] = (
        singlet_project(normal_mul(xp_elt(), y_elt()))
        == singlet_project(singlet_project(normal_mul(xp_elt(), y_elt()))))
    return checks


def dunkl_suite(nus=(0, Fraction(1, 2)), cap=4):
    checks = {}
    for nu in nus:
        aa = aa_commutator_suite(nu, max(1, cap - 2))
        for k, v in aa.items():
            checks["nu=%s_%s" % (Fraction(nu), k)] = v
        ham = hamiltonian_check(nu, cap)
        for k, v in ham.items():
            checks["nu=%s_%s" % (Fraction(nu), k)] = v
    for k, v in abstract_embedding_check(max(3, cap)).items():
        checks["embed_%s" % k] = v
    return checks


def run_suites(which="all", max_degree=4, nus=(0, Fraction(1, 2)), cap=4):
    suites = {}
    if which in ("all", "core"):
        suites["core"] = core_suite()
    if which in ("all", "sl2"):
        suites["sl2"] = sl2_suite(max_degree)
    if which in ("all", "dunkl"):
        suites["dunkl"] = dunkl_suite(nus, cap)
    return suites
