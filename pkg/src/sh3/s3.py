"""The group algebra C[S3] in the idempotent basis {Q0,Q1,Q2,L0,L1,L2}.

The six basis vectors are built from the transpositions with cube-root-of-
unity coefficients:

    L_k = 1/3 (w^k K12 + K23 + w^-k K13)
    Q_k = 1/3 (1 + w^k K12K13 + w^-k K12K23)

with indices periodic mod 3.  Products of basis vectors are again a single
basis vector or zero:

    L_i L_j = d(i+j) Q_j      L_i Q_j = d(i-j) L_j
    Q_i L_j = d(i+j) L_j      Q_i Q_j = d(i-j) Q_j

where d(0) = 1 and d(k) = 0 otherwise (mod 3).  The permutation basis is kept
only for input/output; products are computed in the Q/L basis where they are
monomial to monomial.

Basis elements are encoded as small integers 0..5 = Q0,Q1,Q2,L0,L1,L2.
"""

from __future__ import annotations

from .cyclotomic import CycMatrix, CycNum, OMEGA, ONE, ZERO

__all__ = [
    "Q0", "Q1", "Q2", "L0", "L1", "L2",
    "GROUP_NAMES", "PERM_NAMES",
    "is_q", "is_l", "index_of", "qe", "le", "name_of",
    "mul_table", "mul_basis", "tau_group", "rho_group",
    "lq_from_k", "k_from_lq", "perm_product",
    "GroupAlgebraElem",
]

Q0, Q1, Q2, L0, L1, L2 = range(6)
GROUP_NAMES = ("Q0", "Q1", "Q2", "L0", "L1", "L2")

# Permutation basis order used for conversions.
PERM_NAMES = ("id", "K12", "K13", "K23", "K12K13", "K12K23")


def is_q(e):
    return e < 3


def is_l(e):
    return e >= 3


def index_of(e):
    return e % 3


def qe(i):
    return i % 3


def le(i):
    return 3 + (i % 3)


def name_of(e):
    return GROUP_NAMES[e]


def _delta(i):
    return 1 if i % 3 == 0 else 0


def _build_table():
    # table[e1][e2] is the product basis element or None for zero
    table = [[None] * 6 for _ in range(6)]
    for i in range(3):
        for j in range(3):
            if _delta(i - j):
                table[qe(i)][qe(j)] = qe(j)       # Q_i Q_j = d(i-j) Q_j
                table[le(i)][qe(j)] = le(j)       # L_i Q_j = d(i-j) L_j
            if _delta(i + j):
                table[qe(i)][le(j)] = le(j)       # Q_i L_j = d(i+j) L_j
                table[le(i)][le(j)] = qe(j)       # L_i L_j = d(i+j) Q_j
    return tuple(tuple(row) for row in table)


MUL_TABLE = _build_table()


def mul_table(e1, e2):
    """Product of two basis elements: an encoded element or None for 0."""
    return MUL_TABLE[e1][e2]


def tau_group(e):
    """The antiautomorphism on the group algebra: L_i -> L_-i, Q_i -> Q_i."""
    if is_q(e):
        return e
    return le(-index_of(e))


def rho_group(e):
    """Z3 grade: 0 on Q_i, -i on L_i."""
    if is_q(e):
        return 0
    return (-index_of(e)) % 3


class GroupAlgebraElem:
    """A vector in C[S3] stored as six CycNum coefficients in the Q/L basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = [ZERO] * 6 if coeffs is None else [CycNum.of(c) for c in coeffs]
        if len(self.coeffs) != 6:
            raise ValueError("need six coefficients")

    @staticmethod
    def basis(e):
        g = GroupAlgebraElem()
        g.coeffs[e] = ONE
        return g

    @staticmethod
    def unit():
        return GroupAlgebraElem([ONE, ONE, ONE, ZERO, ZERO, ZERO])

    def __add__(self, other):
        return GroupAlgebraElem([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return GroupAlgebraElem([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return GroupAlgebraElem([-a for a in self.coeffs])

    def scale(self, c):
        c = CycNum.of(c)
        return GroupAlgebraElem([a * c for a in self.coeffs])

    def __mul__(self, other):
        out = GroupAlgebraElem()
        for e1, c1 in enumerate(self.coeffs):
            if not c1:
                continue
            for e2, c2 in enumerate(other.coeffs):
                if not c2:
                    continue
                e = MUL_TABLE[e1][e2]
                if e is not None:
                    out.coeffs[e] = out.coeffs[e] + c1 * c2
        return out

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElem):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        parts = ["%s*%s" % (c, GROUP_NAMES[e]) for e, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


def mul_basis(e1, e2):
    """Product of two basis elements as a GroupAlgebraElem (possibly zero)."""
    e = MUL_TABLE[e1][e2]
    out = GroupAlgebraElem()
    if e is not None:
        out.coeffs[e] = ONE
    return out


# ---------------------------------------------------------------------------
# Permutation basis.
# ---------------------------------------------------------------------------

# Permutations as value tuples p with variable i mapped to p[i-1]; operator
# composition applies the right factor first.
_PERMS = {
    "id": (1, 2, 3),
    "K12": (2, 1, 3),
    "K13": (3, 2, 1),
    "K23": (1, 3, 2),
}


def _compose(p, q):
    # (p q)(i) = p(q(i))
    return tuple(p[q[i] - 1] for i in range(3))


_PERMS["K12K13"] = _compose(_PERMS["K12"], _PERMS["K13"])
_PERMS["K12K23"] = _compose(_PERMS["K12"], _PERMS["K23"])
_PERM_BY_TUPLE = {v: k for k, v in _PERMS.items()}


def perm_product(name1, name2):
    """Name of the product permutation (right factor acts first)."""
    return _PERM_BY_TUPLE[_compose(_PERMS[name1], _PERMS[name2])]


def _qltok_matrix():
    # rows indexed by Q/L basis, columns by PERM_NAMES
    w = OMEGA
    w2 = w * w
    third = CycNum.of("1/3")
    rows = []
    pows = (ONE, w, w2)
    for k in range(3):  # Q_k = 1/3 (1 + w^k K12K13 + w^-k K12K23)
        row = [ZERO] * 6
        row[0] = third
        row[4] = pows[k % 3] * third
        row[5] = pows[(-k) % 3] * third
        rows.append(row)
    for k in range(3):  # L_k = 1/3 (w^k K12 + K23 + w^-k K13)
        row = [ZERO] * 6
        row[1] = pows[k % 3] * third
        row[3] = third
        row[2] = pows[(-k) % 3] * third
        rows.append(row)
    return CycMatrix(rows)


_QL_TO_K = _qltok_matrix()
_K_TO_QL = _QL_TO_K.inverse()


def lq_from_k(k_coeffs):
    """Permutation-basis coefficients (PERM_NAMES order) -> GroupAlgebraElem."""
    if len(k_coeffs) != 6:
        raise ValueError("need six coefficients")
    v = [CycNum.of(c) for c in k_coeffs]
    # columns of _QL_TO_K express Q/L in the K basis, so converting a K
    # vector needs the transpose of the inverse; equivalently solve row-wise.
    out = [ZERO] * 6
    for e in range(6):
        acc = ZERO
        for p in range(6):
            acc = acc + _K_TO_QL.entries[p][e] * v[p]
        out[e] = acc
    return GroupAlgebraElem(out)


def k_from_lq(elem):
    """GroupAlgebraElem -> permutation-basis coefficients (PERM_NAMES order)."""
    out = [ZERO] * 6
    for e, c in enumerate(elem.coeffs):
        if not c:
            continue
        for p in range(6):
            out[p] = out[p] + _QL_TO_K.entries[e][p] * c
    return out
