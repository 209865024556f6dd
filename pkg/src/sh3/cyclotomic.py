"""Exact arithmetic in Q(w), w = exp(2*pi*i/3), and exact linear algebra over it.

Numbers are pairs of rationals a + b*w reduced with w^2 = -1 - w (so w^3 = 1).
Everything downstream stores its coefficients here; there is no floating point
anywhere in the package.

All values are immutable after construction and all operations are pure, so
they are safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["CycNum", "CycMatrix", "SparseEchelon", "ZERO", "ONE", "OMEGA"]

_F0 = Fraction(0)
_F1 = Fraction(1)


def as_fraction(x):
    """Coerce ints, strings like '3/2' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("cannot build a rational from %r" % (x,))


class CycNum:
    """An element a + b*w of the field Q(w).

    The reduction rule w^2 = -1 - w keeps every product in the two
    dimensional representation.  Division is exact: the norm
    a^2 - a*b + b^2 of a nonzero element is a nonzero rational.
    """

    __slots__ = ("one", "omega")

    def __init__(self, one=0, omega=0):
        object.__setattr__(self, "one", as_fraction(one))
        object.__setattr__(self, "omega", as_fraction(omega))

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    @staticmethod
    def of(x):
        """Coerce a rational-like value (or CycNum) to CycNum."""
        if isinstance(x, CycNum):
            return x
        return CycNum(as_fraction(x))

    # ---- field operations -------------------------------------------------

    def __add__(self, other):
        other = CycNum.of(other)
        out = CycNum.__new__(CycNum)
        object.__setattr__(out, "one", self.one + other.one)
        object.__setattr__(out, "omega", self.omega + other.omega)
        return out

    __radd__ = __add__

    def __sub__(self, other):
        other = CycNum.of(other)
        out = CycNum.__new__(CycNum)
        object.__setattr__(out, "one", self.one - other.one)
        object.__setattr__(out, "omega", self.omega - other.omega)
        return out

    def __rsub__(self, other):
        return CycNum.of(other) - self

    def __neg__(self):
        return CycNum(-self.one, -self.omega)

    def __mul__(self, other):
        if isinstance(other, int):
            out = CycNum.__new__(CycNum)
            object.__setattr__(out, "one", self.one * other)
            object.__setattr__(out, "omega", self.omega * other)
            return out
        other = CycNum.of(other)
        a, b = self.one, self.omega
        c, d = other.one, other.omega
        # (a + b w)(c + d w) with w^2 = -1 - w; rational-only fast paths
        out = CycNum.__new__(CycNum)
        if not d:
            if not b:
                object.__setattr__(out, "one", a * c)
                object.__setattr__(out, "omega", _F0)
            else:
                object.__setattr__(out, "one", a * c)
                object.__setattr__(out, "omega", b * c)
            return out
        if not b:
            object.__setattr__(out, "one", a * c)
            object.__setattr__(out, "omega", a * d)
            return out
        bd = b * d
        object.__setattr__(out, "one", a * c - bd)
        object.__setattr__(out, "omega", a * d + b * c - bd)
        return out

    __rmul__ = __mul__

    def norm(self):
        """The rational norm a^2 - a*b + b^2 (zero only for zero)."""
        a, b = self.one, self.omega
        return a * a - a * b + b * b

    def conj(self):
        """The field automorphism w -> w^2, i.e. a + b*w -> (a-b) - b*w."""
        return CycNum(self.one - self.omega, -self.omega)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return CycNum(c.one / n, c.omega / n)

    def __truediv__(self, other):
        other = CycNum.of(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycNum.of(other) * self.inverse()

    # ---- structure --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.of(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.one == other.one and self.omega == other.omega

    def __hash__(self):
        return hash((self.one, self.omega))

    def __bool__(self):
        return bool(self.one) or bool(self.omega)

    def is_rational(self):
        return self.omega == 0

    def rational_part(self):
        """The Fraction value; raises if the omega part is nonzero."""
        if self.omega != 0:
            raise ValueError("not a rational number: %s" % self)
        return self.one

    def sign_split(self):
        """Return (sign, absolute value) keyed off the first nonzero part."""
        lead = self.one if self.one != 0 else self.omega
        if lead < 0:
            return -1, -self
        return 1, self

    def is_composite(self):
        """True when both the rational and the omega part are nonzero."""
        return self.one != 0 and self.omega != 0

    def __str__(self):
        if not self:
            return "0"
        parts = []
        if self.one != 0:
            parts.append(_fmt_frac(self.one))
        if self.omega != 0:
            if self.omega == 1:
                om = "w"
            elif self.omega == -1:
                om = "-w"
            else:
                om = _fmt_frac(self.omega) + "*w"
            if parts:
                if om.startswith("-"):
                    parts.append("- " + om[1:])
                else:
                    parts.append("+ " + om)
            else:
                parts.append(om)
        return " ".join(parts)

    def __repr__(self):
        return "CycNum(%r, %r)" % (str(self.one), str(self.omega))


def _fmt_frac(q):
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


ZERO = CycNum(0)
ONE = CycNum(1)
OMEGA = CycNum(0, 1)


# ---------------------------------------------------------------------------
# Dense exact linear algebra.
# ---------------------------------------------------------------------------


class CycMatrix:
    """A dense matrix of CycNum with exact rank / nullspace / solve.

    Elimination is fraction free in the Bareiss style: rows are first scaled
    to integer coordinates, then the two-term recurrence with exact division
    by the previous pivot keeps intermediate entries integral.  Pivots are
    chosen as the first nonzero entry scanning from the top left, ties broken
    by row order.
    """

    def __init__(self, entries):
        self.entries = [[CycNum.of(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @staticmethod
    def zeros(rows, cols):
        return CycMatrix([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n):
        m = CycMatrix.zeros(n, n)
        for i in range(n):
            m.entries[i][i] = ONE
        return m

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for row in self.entries:
            acc = ZERO
            for x, y in zip(row, v):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return out

    # ---- elimination ------------------------------------------------------

    def _scaled_copy(self, extra=None):
        """Rows with denominators cleared; `extra` columns are appended."""
        out = []
        for i, row in enumerate(self.entries):
            full = list(row)
            if extra is not None:
                full.extend(extra[i])
            dens = [1]
            for x in full:
                dens.append(x.one.denominator)
                dens.append(x.omega.denominator)
            scale = 1
            for d in dens:
                scale = scale * d // _gcd(scale, d)
            s = CycNum(scale)
            out.append([x * s for x in full])
        return out

    @staticmethod
    def _bareiss(rows, ncols):
        """In-place fraction-free echelon; returns list of pivot columns."""
        pivots = []
        prev = ONE
        r = 0
        nrows = len(rows)
        for c in range(ncols):
            pr = None
            for i in range(r, nrows):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                rows[r], rows[pr] = rows[pr], rows[r]
            piv = rows[r][c]
            width = len(rows[r])
            for i in range(r + 1, nrows):
                lead = rows[i][c]
                if lead:
                    ri, rr = rows[i], rows[r]
                    for j in range(c, width):
                        ri[j] = (piv * ri[j] - lead * rr[j]) / prev
                else:
                    ri, rr = rows[i], rows[r]
                    for j in range(c, width):
                        if ri[j]:
                            ri[j] = (piv * ri[j]) / prev
            pivots.append(c)
            prev = piv
            r += 1
            if r == nrows:
                break
        return pivots

    def rank(self):
        rows = self._scaled_copy()
        return len(self._bareiss(rows, self.cols))

    def nullspace(self):
        """Exact basis of the kernel, each vector scaled so its first
        nonzero entry is 1."""
        rows = self._scaled_copy()
        pivots = self._bareiss(rows, self.cols)
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            # back substitution over the echelon rows
            for r in range(len(pivots) - 1, -1, -1):
                pc = pivots[r]
                acc = ZERO
                row = rows[r]
                for c in range(pc + 1, self.cols):
                    if row[c] and v[c]:
                        acc = acc + row[c] * v[c]
                v[pc] = -acc / row[pc]
            # normalize: first nonzero entry 1
            lead = next(x for x in v if x)
            inv = lead.inverse()
            basis.append([x * inv for x in v])
        return basis

    def solve(self, rhs):
        """One exact solution of M x = rhs, or None when inconsistent."""
        if len(rhs) != self.rows:
            raise ValueError("dimension mismatch")
        rows = self._scaled_copy(extra=[[CycNum.of(b)] for b in rhs])
        pivots = self._bareiss(rows, self.cols)
        # consistency: no pivot may fall in the augmented column
        for r in range(len(pivots), self.rows):
            if rows[r][self.cols]:
                return None
        x = [ZERO] * self.cols
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = rows[r]
            acc = row[self.cols]
            for c in range(pc + 1, self.cols):
                if row[c] and x[c]:
                    acc = acc - row[c] * x[c]
            x[pc] = acc / row[pc]
        return x

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("not square")
        n = self.rows
        rows = self._scaled_copy(extra=CycMatrix.identity(n).entries)
        pivots = self._bareiss(rows, n)
        if len(pivots) != n:
            raise ValueError("singular matrix")
        # back substitution for every augmented column
        inv = [[ZERO] * n for _ in range(n)]
        for k in range(n):
            x = [ZERO] * n
            for r in range(n - 1, -1, -1):
                row = rows[r]
                acc = row[n + k]
                for c in range(r + 1, n):
                    if row[c] and x[c]:
                        acc = acc - row[c] * x[c]
                x[r] = acc / row[r]
            for r in range(n):
                inv[r][k] = x[r]
        return CycMatrix(inv)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class SparseEchelon:
    """Incremental exact row echelon over Q(w), keyed by integer columns.

    Rows are sparse dicts column -> CycNum.  Each inserted row is reduced
    against the stored pivot rows; a surviving row is normalized to pivot 1
    and stored.  Column order is the natural integer order, so callers
    control elimination priority by how they number columns.
    """

    def __init__(self):
        self.pivot_rows = {}

    @property
    def rank(self):
        return len(self.pivot_rows)

    def reduce(self, row):
        """Reduce a sparse row against the basis; returns the residue."""
        row = dict(row)
        while row:
            p = min(row)
            if not row[p]:
                del row[p]
                continue
            piv = self.pivot_rows.get(p)
            if piv is None:
                return row
            coef = row[p]
            for c, v in piv.items():
                cur = row.get(c, ZERO) - coef * v
                if cur:
                    row[c] = cur
                else:
                    row.pop(c, None)
        return row

    def insert(self, row):
        """Insert a row; True when it enlarged the span."""
        res = self.reduce(row)
        if not res:
            return False
        p = min(res)
        inv = res[p].inverse()
        self.pivot_rows[p] = {c: v * inv for c, v in res.items()}
        return True

    def contains(self, row):
        return not self.reduce(row)

    def pivot_columns(self):
        return sorted(self.pivot_rows)

    def back_reduce(self):
        """Full reduction so every pivot column is zero in other rows."""
        for p in sorted(self.pivot_rows, reverse=True):
            prow = self.pivot_rows[p]
            for q, qrow in self.pivot_rows.items():
                if q == p:
                    continue
                coef = qrow.get(p)
                if coef:
                    for c, v in prow.items():
                        cur = qrow.get(c, ZERO) - coef * v
                        if cur:
                            qrow[c] = cur
                        else:
                            qrow.pop(c, None)

    def kernel(self, ncols):
        """Basis of {x : R x = 0} for the row space R on columns 0..ncols-1."""
        self.back_reduce()
        pivots = set(self.pivot_rows)
        basis = []
        for fc in range(ncols):
            if fc in pivots:
                continue
            v = {fc: ONE}
            for p, row in self.pivot_rows.items():
                coef = row.get(fc)
                if coef:
                    v[p] = -coef
            basis.append(v)
        return basis
