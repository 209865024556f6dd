"""The adjoint sl2 action, isotypic decomposition and singlet projection.

The three generators T^00 = 2/3 x y, T^01 = 1/3 (x y+ + x+ y) and
T^11 = 2/3 x+ y+ act by commutators.  On a normal-ordered monomial the
diagonal generator T^01 has the integer eigenvalue

    weight = (creations) - (annihilations)

while T^00 lowers and T^11 raises the weight by two.  The bracket never
touches the group element, so every computation here lives on the pure
oscillator words (b, d, a, c) and is tensored with the six group elements
afterwards.

Commutators preserve the filtration by total degree but not the exact
degree (contractions shed pairs of letters), so:

  * singlet projection works on the degree-filtered space, split as
    (invariants) + (span of images of the three ad operators), which is an
    exact direct sum for a completely reducible action;
  * the per-degree isotypic decomposition uses the leading-term action,
    i.e. the bracket followed by projection onto the exact degree, which
    again satisfies the sl2 relations.

The invariants of the oscillator action are exactly the powers of
m = 1/2 (x+ y - y+ x); the projector construction asserts the dimension
count that certifies this on every filtered block it is built for.

Projectors are cached per degree and read-only afterwards.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import s3
from .algebra import Element, Monomial, m_power, superbracket, t_elt
from .cyclotomic import CycMatrix, CycNum, ONE, ZERO, SparseEchelon

__all__ = [
    "ad_t", "ad_matrix", "slice_words", "filtered_words",
    "SingletProjector", "singlet_project", "highest_vector_ascend",
    "isotypic_decompose", "IsotypicReport",
]

_T_ELEMS = {}


def _t(key):
    if key not in _T_ELEMS:
        _T_ELEMS[key] = t_elt(*key)
    return _T_ELEMS[key]


def slice_words(degree):
    """All oscillator words (b, d, a, c) of exact total degree."""
    out = []
    for b in range(degree + 1):
        for d in range(degree + 1 - b):
            for a in range(degree + 1 - b - d):
                c = degree - a - b - d
                out.append((b, d, a, c))
    return out


def filtered_words(degree, weight=None, rho=None):
    """Oscillator words of degree <= degree with optional weight and
    rho (mod 3) filters."""
    out = []
    for n in range(degree + 1):
        for w in slice_words(n):
            if weight is not None and (w[0] + w[1]) - (w[2] + w[3]) != weight:
                continue
            if rho is not None and ((w[2] + w[0]) - (w[3] + w[1])) % 3 != rho % 3:
                continue
            out.append(w)
    return out


def _word_weight(w):
    return (w[0] + w[1]) - (w[2] + w[3])


def ad_t(key, word):
    """[T^key, word] on the oscillator level, as dict word -> CycNum."""
    elem = Element({Monomial(word[0], word[1], word[2], word[3], s3.qe(0)): ONE})
    br = superbracket(_t(key), elem)
    return {(m.b, m.d, m.a, m.c): c for m, c in br.terms.items()}


def ad_matrix(key, words, graded=False):
    """Matrix of ad T^key on the span of `words` (tensor a group element).

    With graded=True only the exact-degree image components are kept, which
    is the leading-term action on a single degree slice.  Without it the
    word list must be closed under the bracket (a filtered block is).
    """
    index = {w: i for i, w in enumerate(words)}
    cols = []
    for w in words:
        img = ad_t(key, w)
        col = {}
        for w2, c in img.items():
            if graded and sum(w2) != sum(w):
                continue
            if w2 not in index:
                if graded:
                    continue
                raise ValueError("word span not closed under ad T%s" % (key,))
            col[index[w2]] = c
        cols.append(col)
    mat = [[ZERO] * len(words) for _ in words]
    for j, col in enumerate(cols):
        for i, c in col.items():
            mat[i][j] = c
    return CycMatrix(mat)


# ---------------------------------------------------------------------------
# Singlet projection.
# ---------------------------------------------------------------------------


class SingletProjector:
    """Exact projector onto the sl2 invariants of a filtered block.

    Built once per degree cap: the weight-zero words (with balanced x/y
    letter count mod 3) split as span{powers of m} + span{images of the
    raising and lowering operators}, and the projector reads off the m-power
    coordinates through one exact matrix inversion.
    """

    def __init__(self, degree):
        degree = degree - (degree % 2)
        self.degree = degree
        self.words = filtered_words(degree, weight=0, rho=0)
        self.index = {w: i for i, w in enumerate(self.words)}
        dim = len(self.words)
        self.n_inv = degree // 2 + 1
        cols = []
        for n in range(self.n_inv):
            osc = m_power(n).sector(s3.qe(0))
            vec = [ZERO] * dim
            for w, c in osc.items():
                vec[self.index[w]] = c
            cols.append(vec)
        # images of the raising operator from weight -2 and of the lowering
        # operator from weight +2 exhaust the non-singlet weight-zero part
        ech = SparseEchelon()
        image_cols = []
        for key, src_weight in (((1, 1), -2), ((0, 0), 2)):
            for w in filtered_words(degree, weight=src_weight, rho=0):
                img = ad_t(key, w)
                vec = [ZERO] * dim
                row = {}
                for w2, c in img.items():
                    i = self.index[w2]
                    vec[i] = c
                    row[i] = c
                if ech.insert(row):
                    image_cols.append(vec)
        if self.n_inv + len(image_cols) != dim:
            raise AssertionError(
                "invariant + image dimensions do not fill the weight-zero "
                "block at degree %d" % degree)
        square = [[cols[j][i] for j in range(self.n_inv)]
                  + [image_cols[j][i] for j in range(len(image_cols))]
                  for i in range(dim)]
        self._solve = CycMatrix(square).inverse()

    def invariant_coordinates(self, vec):
        """Coefficients of m^0..m^(degree//2) in the invariant part."""
        sol = self._solve.mul_vec(vec)
        return sol[:self.n_inv]

    def project_sector(self, sector_words):
        """dict word -> coeff for one group sector; returns m-power coeffs."""
        vec = [ZERO] * len(self.words)
        for w, c in sector_words.items():
            if _word_weight(w) != 0:
                continue
            if ((w[2] + w[0]) - (w[3] + w[1])) % 3 != 0:
                continue
            vec[self.index[w]] = c
        return self.invariant_coordinates(vec)


_PROJECTORS = {}


def _projector(degree):
    degree = max(0, degree)
    degree = degree - (degree % 2)
    if degree not in _PROJECTORS:
        _PROJECTORS[degree] = SingletProjector(degree)
    return _PROJECTORS[degree]


def singlet_project(f, as_polynomials=False):
    """The component of f invariant under the adjoint sl2 action.

    The result is a combination of m^n E; with as_polynomials=True the
    decomposition is returned as a list of (coefficient list, group element)
    pairs instead of an Element.
    """
    if f.is_zero():
        return [] if as_polynomials else Element.zero()
    proj = _projector(f.degree)
    polys = []
    out = Element.zero()
    for e in sorted(f.sectors_present()):
        coeffs = proj.project_sector(f.sector(e))
        if not any(coeffs):
            continue
        polys.append((coeffs, e))
        for n, c in enumerate(coeffs):
            if not c:
                continue
            osc = m_power(n).sector(s3.qe(0))
            out = out + Element({Monomial(w[0], w[1], w[2], w[3], e): cc * c
                                 for w, cc in osc.items()})
    if as_polynomials:
        return polys
    return out


def highest_vector_ascend(h):
    """Iterate h -> [T^00, h] until the next step vanishes and return the
    last nonzero iterate (an extreme vector of the representation)."""
    if h.is_zero():
        raise ValueError("zero element has no extreme vector")
    bound = h.degree + 2
    cur = h
    for _ in range(bound):
        nxt = superbracket(_t((0, 0)), cur)
        if nxt.is_zero():
            return cur
        cur = nxt
    raise AssertionError("ad T^00 iteration failed to terminate")


# ---------------------------------------------------------------------------
# Isotypic decomposition.
# ---------------------------------------------------------------------------


class IsotypicReport:
    """Spin multiplicities of one exact-degree slice (group factor included)."""

    def __init__(self, degree, multiplicities):
        self.degree = degree
        self.multiplicities = dict(multiplicities)

    @property
    def dimension(self):
        return 6 * len(slice_words(self.degree))

    def check_dimension(self):
        total = 0
        for s, mult in self.multiplicities.items():
            total += mult * (int(2 * s) + 1)
        return total == self.dimension

    def to_json(self):
        mult = {}
        for s in sorted(self.multiplicities):
            label = str(int(s)) if s == int(s) else "%d/2" % int(2 * s)
            mult[label] = self.multiplicities[s]
        return json.dumps({"degree": self.degree, "multiplicities": mult})

    def __repr__(self):
        return "<IsotypicReport %s>" % self.to_json()


def _mat_mul(A, B):
    n = A.rows
    out = [[ZERO] * n for _ in range(n)]
    bt = B.entries
    for i in range(n):
        Ai = A.entries[i]
        row = out[i]
        for k in range(n):
            a = Ai[k]
            if not a:
                continue
            Bk = bt[k]
            for j in range(n):
                b = Bk[j]
                if b:
                    row[j] = row[j] + a * b
    return CycMatrix(out)


def isotypic_decompose(degree):
    """Spin multiplicities on the exact-degree slice via exact eigenspace
    ranks of the quadratic Casimir of the leading-term action."""
    words = slice_words(degree)
    E = ad_matrix((1, 1), words, graded=True)
    F = ad_matrix((0, 0), words, graded=True)
    H = ad_matrix((0, 1), words, graded=True)
    n = len(words)
    # C = -1/4 (E F + F E) + 1/2 H^2 has eigenvalue 2 s (s + 1) on spin s
    EF = _mat_mul(E, F)
    FE = _mat_mul(F, E)
    HH = _mat_mul(H, H)
    quarter = CycNum.of(Fraction(-1, 4))
    half = CycNum.of(Fraction(1, 2))
    C = [[quarter * (EF.entries[i][j] + FE.entries[i][j]) + half * HH.entries[i][j]
          for j in range(n)] for i in range(n)]
    mults = {}
    remaining = n
    s = Fraction(0)
    while remaining > 0 and s <= degree:
        lam = CycNum.of(2 * s * (s + 1))
        shifted = [[C[i][j] - lam if i == j else C[i][j] for j in range(n)]
                   for i in range(n)]
        kdim = n - CycMatrix(shifted).rank()
        size = int(2 * s) + 1
        if kdim:
            if kdim % size:
                raise AssertionError("Casimir eigenspace is not a multiple "
                                     "of the irreducible dimension")
            mults[s] = 6 * (kdim // size)
            remaining -= kdim
        s += Fraction(1, 2)
    if remaining:
        raise AssertionError("Casimir failed to exhaust the slice")
    return IsotypicReport(degree, mults)
