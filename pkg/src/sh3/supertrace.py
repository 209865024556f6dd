"""The two-parameter supertrace and its invariant bilinear forms.

A supertrace is a linear functional with str(fg) = (-1)^(pi(f)pi(g)) str(gf);
here the whole two-dimensional family is carried symbolically as values
u*S1 + v*S2.  On the invariant subalgebra the values come from exact
generating series in a formal variable:

    str(exp(2/3 t m) Q0) = P0 / Delta
    str(exp(2/3 t m) Q1) = Pplus / Delta
    str(exp(2/3 t m) Q2) = Pminus / Delta
    str(exp(2/3 t m) L_i) = 0

with Delta = exp(3t) + 2 + exp(-3t) (value 4 at t = 0, so series division
is well posed) and

    P0     = -2 S1 + S2/2 (e^{2t} + e^{-2t} - 2 e^{t} - 2 e^{-t})
    Pplus  = 2/3 S1 (-e^{2t} + 2 e^{-t}) + S2/2 (e^{-2t} - 2 e^{t} + 3)
    Pminus = 2/3 S1 (-e^{-2t} + 2 e^{t}) + S2/2 (e^{2t} - 2 e^{-t} + 3)

so that str(m^n Q_i) = (3/2)^n n! [t^n] P_i/Delta.  A general element is
evaluated through its singlet projection; an independent constraint solver
re-derives the whole functional from the supertrace condition alone and is
used to cross-check every value.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial

from . import s3
from .algebra import Element, Monomial, normal_mul
from .cyclotomic import CycMatrix, CycNum, ONE, ZERO, SparseEchelon
from .sl2 import _projector, ad_t, filtered_words, singlet_project, slice_words

__all__ = [
    "StrValue", "SeriesQ", "series_QL", "str_m_power",
    "str_eval", "str_table", "str_eval_with_table",
    "str_constraint_oracle", "gram", "GramReport",
]


class StrValue:
    """A supertrace value u*S1 + v*S2, linear in the two parameters."""

    __slots__ = ("s1_coef", "s2_coef")

    def __init__(self, s1_coef=0, s2_coef=0):
        object.__setattr__(self, "s1_coef", CycNum.of(s1_coef))
        object.__setattr__(self, "s2_coef", CycNum.of(s2_coef))

    def __setattr__(self, name, value):
        raise AttributeError("StrValue is immutable")

    def __add__(self, other):
        return StrValue(self.s1_coef + other.s1_coef, self.s2_coef + other.s2_coef)

    def __sub__(self, other):
        return StrValue(self.s1_coef - other.s1_coef, self.s2_coef - other.s2_coef)

    def __neg__(self):
        return StrValue(-self.s1_coef, -self.s2_coef)

    def scale(self, c):
        c = CycNum.of(c)
        return StrValue(self.s1_coef * c, self.s2_coef * c)

    def __eq__(self, other):
        if not isinstance(other, StrValue):
            return NotImplemented
        return self.s1_coef == other.s1_coef and self.s2_coef == other.s2_coef

    def __hash__(self):
        return hash((self.s1_coef, self.s2_coef))

    def __bool__(self):
        return bool(self.s1_coef) or bool(self.s2_coef)

    def at_params(self, s1, s2):
        return self.s1_coef * CycNum.of(s1) + self.s2_coef * CycNum.of(s2)

    def __str__(self):
        parts = []
        for coef, name in ((self.s1_coef, "S1"), (self.s2_coef, "S2")):
            if not coef:
                continue
            sign, mag = coef.sign_split()
            cs = str(mag)
            if mag.is_composite():
                cs = "(%s)" % cs
            body = name if mag == ONE else "%s*%s" % (cs, name)
            if not parts:
                parts.append(body if sign > 0 else "-" + body)
            else:
                parts.append(("+ " if sign > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return "StrValue(%s)" % self

    def to_json(self):
        return json.dumps({"s1_coef": str(self.s1_coef),
                           "s2_coef": str(self.s2_coef)})


ZERO_STR = StrValue()


# ---------------------------------------------------------------------------
# Generating series.
# ---------------------------------------------------------------------------


def _exp_series(k, order):
    """Coefficients of exp(k t) up to t^order."""
    k = Fraction(k)
    out = [Fraction(1)]
    for n in range(1, order + 1):
        out.append(out[-1] * k / n)
    return out


class SeriesQ:
    """Truncated series whose coefficients are linear forms in (S1, S2)."""

    def __init__(self, order, coeffs):
        self.order = order
        self.coeffs = coeffs  # list of (Fraction, Fraction)

    def coeff(self, n):
        return self.coeffs[n]


def _numerator_series(i, order):
    """(S1, S2) coefficient pairs of the numerator for Q_i."""
    e2 = _exp_series(2, order)
    em2 = _exp_series(-2, order)
    e1 = _exp_series(1, order)
    em1 = _exp_series(-1, order)
    three = [Fraction(3)] + [Fraction(0)] * order
    half = Fraction(1, 2)
    twothird = Fraction(2, 3)
    out = []
    for n in range(order + 1):
        if i == 0:
            s1 = Fraction(-2) if n == 0 else Fraction(0)
            s2 = half * (e2[n] + em2[n] - 2 * e1[n] - 2 * em1[n])
        elif i == 1:
            s1 = twothird * (-e2[n] + 2 * em1[n])
            s2 = half * (em2[n] - 2 * e1[n] + three[n])
        else:
            s1 = twothird * (-em2[n] + 2 * e1[n])
            s2 = half * (e2[n] - 2 * em1[n] + three[n])
        out.append((s1, s2))
    return out


def _delta_series(order):
    e3 = _exp_series(3, order)
    em3 = _exp_series(-3, order)
    out = [e3[n] + em3[n] for n in range(order + 1)]
    out[0] += 2
    return out


_SERIES_CACHE = {}


def series_QL(i, order, l_type=False):
    """The supertrace generating series for Q_i (or the zero series for
    L-type elements), exact to the requested order."""
    if l_type:
        return SeriesQ(order, [(Fraction(0), Fraction(0))] * (order + 1))
    i = i % 3
    cached = _SERIES_CACHE.get(i)
    if cached is not None and cached.order >= order:
        return SeriesQ(order, cached.coeffs[:order + 1])
    num = _numerator_series(i, order)
    den = _delta_series(order)
    d0 = den[0]
    out = []
    for n in range(order + 1):
        s1, s2 = num[n]
        for j in range(n):
            c = den[n - j]
            if c:
                s1 -= out[j][0] * c
                s2 -= out[j][1] * c
        out.append((s1 / d0, s2 / d0))
    series = SeriesQ(order, out)
    _SERIES_CACHE[i] = series
    return series


def str_m_power(n, i, l_type=False):
    """Exact value of str(m^n Q_i), or zero for str(m^n L_i)."""
    if l_type:
        return ZERO_STR
    series = series_QL(i, n)
    s1, s2 = series.coeff(n)
    scale = Fraction(3, 2) ** n * factorial(n)
    return StrValue(s1 * scale, s2 * scale)


def str_eval(f):
    """Supertrace of an element, symbolic in (S1, S2).

    The value is read from the singlet projection: the supertrace kills both
    odd elements and the span of the adjoint images, and on the invariant
    part it is determined by the generating series above.
    """
    out = ZERO_STR
    for coeffs, e in singlet_project(f, as_polynomials=True):
        if s3.is_l(e):
            continue
        i = s3.index_of(e)
        for n, c in enumerate(coeffs):
            if c:
                out = out + str_m_power(n, i).scale(c)
    return out


# ---------------------------------------------------------------------------
# Monomial table and fast evaluation.
# ---------------------------------------------------------------------------


def str_table(max_degree):
    """dict monomial -> StrValue for every basis monomial of degree <= cap.

    Only weight-zero, rho-zero words in the Q sectors are nonzero; their
    projections are columns of the cached projector inverse.
    """
    proj = _projector(max_degree)
    table = {}
    for w in proj.words:
        col = proj.index[w]
        coeffs = [proj._solve.entries[n][col] for n in range(proj.n_inv)]
        for i in range(3):
            val = ZERO_STR
            for n, c in enumerate(coeffs):
                if c:
                    val = val + str_m_power(n, i).scale(c)
            if val:
                table[Monomial(w[0], w[1], w[2], w[3], s3.qe(i))] = val
    return table


def str_eval_with_table(f, table):
    out = ZERO_STR
    for mono, c in f.terms.items():
        val = table.get(mono)
        if val is not None:
            out = out + val.scale(c)
    return out


# ---------------------------------------------------------------------------
# Constraint-solver oracle.
# ---------------------------------------------------------------------------


def _basis_monomials(cap):
    out = []
    for n in range(cap + 1):
        for w in slice_words(n):
            for e in range(6):
                out.append(Monomial(w[0], w[1], w[2], w[3], e))
    return out


def str_constraint_oracle(degree_cap):
    """Re-derive the space of supertraces from first principles.

    The value on every basis monomial of degree <= cap is treated as an
    unknown.  Constraints: str(fg) - (-1)^(pi pi) str(gf) = 0 for every
    monomial pair whose product stays under the cap, and vanishing on the
    adjoint images [T, f] (the non-singlet part of the block).  Returns the
    kernel dimension together with the functional pinned to (S1, S2)
    coordinates through its values on the unit and on Q1.

    An inconsistent or unpinnable system raises, since it would falsify the
    generating-series evaluator.
    """
    if degree_cap < 2:
        raise ValueError("degree_cap must be at least 2")
    basis = _basis_monomials(degree_cap)
    index = {m: i for i, m in enumerate(basis)}

    def vec_of(elem, sign_elem=None, sign=1):
        row = {}
        for mono, c in elem.terms.items():
            i = index[mono]
            row[i] = row.get(i, ZERO) + c
        if sign_elem is not None:
            for mono, c in sign_elem.terms.items():
                i = index[mono]
                cur = row.get(i, ZERO) + (c if sign > 0 else -c)
                if cur:
                    row[i] = cur
                else:
                    row.pop(i, None)
        return {i: c for i, c in row.items() if c}

    ech = SparseEchelon()
    by_degree = {}
    for m in basis:
        by_degree.setdefault(m.degree, []).append(m)
    for d1 in range(degree_cap + 1):
        for d2 in range(d1, degree_cap - d1 + 1):
            for m1 in by_degree[d1]:
                e1 = Element({m1: ONE})
                for m2 in by_degree[d2]:
                    if d1 == d2 and m2 < m1:
                        continue
                    if m1 == m2 and m1.parity == 0:
                        continue
                    e2 = Element({m2: ONE})
                    fg = normal_mul(e1, e2)
                    gf = normal_mul(e2, e1)
                    sign = -1 if (m1.parity and m2.parity) else 1
                    row = vec_of(fg, gf, -sign)
                    if row:
                        ech.insert(row)
    # adjoint images must vanish
    for key in ((0, 0), (0, 1), (1, 1)):
        for m in basis:
            img = ad_t(key, (m.b, m.d, m.a, m.c))
            row = {}
            for w, c in img.items():
                i = index[Monomial(w[0], w[1], w[2], w[3], m.e)]
                row[i] = row.get(i, ZERO) + c
            row = {i: c for i, c in row.items() if c}
            if row:
                ech.insert(row)
    kernel = ech.kernel(len(basis))
    dim = len(kernel)
    table = None
    if dim == 2:
        k1, k2 = kernel
        unit_cols = [index[Monomial(0, 0, 0, 0, s3.qe(i))] for i in range(3)]
        q1_col = index[Monomial(0, 0, 0, 0, s3.qe(1))]

        def pins(k):
            on_unit = sum((k.get(c, ZERO) for c in unit_cols), ZERO)
            on_q1 = k.get(q1_col, ZERO)
            # S1 = 3 (str(Q1) - str(1)), S2 = 2 (str(1) + str(Q1))
            return (CycNum.of(3) * (on_q1 - on_unit),
                    CycNum.of(2) * (on_unit + on_q1))

        a1, b1 = pins(k1)
        a2, b2 = pins(k2)
        det = a1 * b2 - a2 * b1
        if not det:
            raise AssertionError("supertrace kernel cannot be pinned to "
                                 "(S1, S2) coordinates")
        # functionals with (S1, S2) = (1, 0) and (0, 1)
        inv = det.inverse()
        c11, c12 = b2 * inv, -a2 * inv
        c21, c22 = -b1 * inv, a1 * inv
        table = {}
        for i, mono in enumerate(basis):
            v1 = k1.get(i, ZERO)
            v2 = k2.get(i, ZERO)
            s1 = c11 * v1 + c21 * v2
            s2 = c12 * v1 + c22 * v2
            if s1 or s2:
                table[mono] = StrValue(s1, s2)
    return dim, table


# ---------------------------------------------------------------------------
# Gram matrices of the invariant bilinear form.
# ---------------------------------------------------------------------------


class GramReport:
    def __init__(self, labels, params, entries, rank):
        self.labels = labels
        self.params = params            # (s1, s2) pair or "symbolic"
        self.entries = entries          # StrValue or CycNum grid
        self.size = len(labels)
        self.rank = rank

    @property
    def nullity(self):
        return self.size - self.rank

    def nullspace(self):
        if self.params == "symbolic":
            raise ValueError("nullspace needs numeric parameters")
        return CycMatrix(self.entries).nullspace()

    def to_json(self):
        if self.params == "symbolic":
            grid = [[str(v) for v in row] for row in self.entries]
            params = "symbolic"
        else:
            grid = [[str(v) for v in row] for row in self.entries]
            params = [str(p) for p in self.params]
        return json.dumps({
            "size": self.size,
            "params": params,
            "rank": self.rank,
            "nullity": self.nullity,
            "labels": self.labels,
            "entries": grid,
        })

    def to_csv(self):
        lines = []
        for row in self.entries:
            cells = []
            for v in row:
                if isinstance(v, StrValue):
                    cells.append('"%s,%s"' % (v.s1_coef, v.s2_coef))
                else:
                    cells.append(str(v))
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


_SYMBOLIC_POINTS = ((Fraction(3), Fraction(5)),
                    (Fraction(7), Fraction(2)),
                    (Fraction(2), Fraction(13)))


def gram(basis, params="symbolic", labels=None):
    """Gram matrix G[i][j] = str(b_i b_j) with exact rank.

    Symbolic parameters give StrValue entries; the rank over the parameter
    field is taken as the maximum over two generic rational points with a
    third as tiebreaker.  Numeric parameters give exact CycNum entries with
    rank and nullspace available.
    """
    if labels is None:
        labels = [str(b) for b in basis]
    max_deg = max((b.degree for b in basis), default=0)
    table = str_table(2 * max(0, max_deg))
    sym = [[str_eval_with_table(normal_mul(bi, bj), table) for bj in basis]
           for bi in basis]
    if params == "symbolic":
        rank = 0
        for s1, s2 in _SYMBOLIC_POINTS:
            num = [[v.at_params(s1, s2) for v in row] for row in sym]
            rank = max(rank, CycMatrix(num).rank())
        return GramReport(labels, "symbolic", sym, rank)
    s1, s2 = params
    num = [[v.at_params(s1, s2) for v in row] for row in sym]
    rank = CycMatrix(num).rank()
    return GramReport(labels, (CycNum.of(s1), CycNum.of(s2)), num, rank)
