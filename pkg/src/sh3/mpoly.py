"""Polynomials in the distinguished even element m, coefficients in Q(w).

These carry the commutative side of the structure computations: shifts
m -> m + s, the reflection m -> -m, monic gcds and extended gcds over the
field Q(w).  Coefficients are stored little endian (index = power of m).
"""

from __future__ import annotations

from .cyclotomic import CycNum, ONE, ZERO

__all__ = ["MPolynomial"]


class MPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [CycNum.of(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    @staticmethod
    def of(*coeffs):
        return MPolynomial(coeffs)

    @staticmethod
    def constant(c):
        return MPolynomial([c])

    @staticmethod
    def identity():
        """The polynomial m itself."""
        return MPolynomial([0, 1])

    @staticmethod
    def from_roots(*roots):
        p = MPolynomial([1])
        for r in roots:
            p = p * MPolynomial([-CycNum.of(r), ONE])
        return p

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, n):
        return self.coeffs[n] if n < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if not isinstance(other, MPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return MPolynomial([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return MPolynomial([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return MPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, MPolynomial):
            if not self.coeffs or not other.coeffs:
                return MPolynomial()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return MPolynomial(out)
        c = CycNum.of(other)
        return MPolynomial([a * c for a in self.coeffs])

    __rmul__ = __mul__

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [ZERO] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.leading()
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            k = len(rem) - 1 - dd
            f = rem[-1] / dlead
            quo[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - f * c
            while rem and not rem[-1]:
                rem.pop()
        return MPolynomial(quo), MPolynomial(rem)

    def divides(self, other):
        """True when self divides other exactly."""
        if self.is_zero():
            return other.is_zero()
        _, r = other.divmod(self)
        return r.is_zero()

    def monic(self):
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return MPolynomial([c * inv for c in self.coeffs])

    def shift(self, s):
        """The polynomial p(m + s)."""
        s = CycNum.of(s)
        # Horner in the shifted variable
        out = MPolynomial()
        lin = MPolynomial([s, ONE])
        for c in reversed(self.coeffs):
            out = out * lin + MPolynomial([c])
        return out

    def reflect(self):
        """The polynomial p(-m)."""
        return MPolynomial([c if i % 2 == 0 else -c
                            for i, c in enumerate(self.coeffs)])

    def eval(self, x):
        x = CycNum.of(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @staticmethod
    def gcd(p, q):
        g, _, _ = MPolynomial.xgcd(p, q)
        return g

    @staticmethod
    def xgcd(p, q):
        """Extended gcd: returns monic g and (a, b) with a*p + b*q = g."""
        r0, r1 = p, q
        a0, a1 = MPolynomial([1]), MPolynomial()
        b0, b1 = MPolynomial(), MPolynomial([1])
        while not r1.is_zero():
            quo, rem = r0.divmod(r1)
            r0, r1 = r1, rem
            a0, a1 = a1, a0 - quo * a1
            b0, b1 = b1, b0 - quo * b1
        if r0.is_zero():
            return r0, a0, b0
        inv = r0.leading().inverse()
        return r0 * inv, a0 * inv, b0 * inv

    def coeff_strings(self):
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_coeff_strings(strings):
        out = []
        for s in strings:
            out.append(_parse_cyc(s))
        return MPolynomial(out)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                mono = None
            elif i == 1:
                mono = "m"
            else:
                mono = "m^%d" % i
            sign, mag = c.sign_split()
            if mag == ONE and mono is not None:
                body = mono
            else:
                cs = str(mag)
                if mag.is_composite():
                    cs = "(%s)" % cs
                body = cs if mono is None else "%s*%s" % (cs, mono)
            if not parts:
                parts.append(body if sign > 0 else "-" + body)
            else:
                parts.append(("+ " if sign > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "MPolynomial(%s)" % self


def _parse_cyc(text):
    """Parse the CycNum string forms emitted by CycNum.__str__."""
    from fractions import Fraction

    t = text.strip()
    if t == "0":
        return ZERO
    neg_all = False
    if t.startswith("-"):
        # leading sign applies to the first component only
        pass
    one = Fraction(0)
    omega = Fraction(0)
    # split on " + " / " - " while keeping signs
    tokens = []
    cur = t
    sign = 1
    while cur:
        plus = cur.find(" + ")
        minus = cur.find(" - ")
        if plus == -1 and minus == -1:
            tokens.append((sign, cur))
            break
        if minus == -1 or (plus != -1 and plus < minus):
            tokens.append((sign, cur[:plus]))
            sign = 1
            cur = cur[plus + 3:]
        else:
            tokens.append((sign, cur[:minus]))
            sign = -1
            cur = cur[minus + 3:]
    for sgn, tok in tokens:
        tok = tok.strip()
        if tok.startswith("-"):
            sgn = -sgn
            tok = tok[1:]
        if tok.endswith("w"):
            body = tok[:-1].rstrip("*")
            val = Fraction(body) if body else Fraction(1)
            omega += sgn * val
        else:
            one += sgn * Fraction(tok)
    del neg_all
    return CycNum(one, omega)
