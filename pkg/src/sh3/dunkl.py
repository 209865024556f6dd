"""The concrete three-particle Dunkl representation on polynomials.

Operators act exactly on polynomials in x1, x2, x3 with Q(w) coefficients:
transpositions K_ij swap variables, and the Dunkl operator is

    D_i = d/dx_i + nu * sum_{l != i} (x_i - x_l)^(-1) (1 - K_il)

where the difference part is an exact polynomial division (the remainder is
checked to vanish).  The oscillators are used in scaled form

    at^a_i = x_i + (-1)^a D_i     (i.e. sqrt(2) times the usual ones)

so every identity stays inside Q(w); commutators pick up a factor 2:

    [at^a_i, at^b_j] = 2 eps^(ab) (delta_ij (1 + nu sum_l K_il)
                                   - nu (1 - delta_ij) K_ij).

At nu = 0 the center-of-mass-free combinations

    xt^a = at^a_1 + w at^a_2 + w^2 at^a_3,
    yt^a = at^a_1 + w^2 at^a_2 + w at^a_3

realize the abstract algebra with all commutators doubled, which is the
end-to-end oracle for the normal-ordering engine.

Operators are applied lazily as compositions of primitive maps; only the
equality checks realize them on a basis.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, OMEGA, ONE, ZERO, as_fraction

__all__ = [
    "Poly3", "PolyOperator", "DomainError",
    "k_op", "dunkl_op", "mult_op", "osc_op", "identity_op", "zero_op",
    "group_ops", "vector_ops", "operator_equal", "basis_monomials",
    "aa_commutator_suite", "hamiltonian_check", "abstract_embedding_check",
    "dunkl_check_report",
]


class DomainError(ValueError):
    """An operator was asked to act outside its guarded degree range."""


class Poly3:
    """A polynomial in x1, x2, x3 with CycNum coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for expo, c in terms.items():
                c = CycNum.of(c)
                if c:
                    t[expo] = c
        self.terms = t

    @staticmethod
    def zero():
        return Poly3()

    @staticmethod
    def one():
        return Poly3({(0, 0, 0): ONE})

    @staticmethod
    def variable(i):
        e = [0, 0, 0]
        e[i - 1] = 1
        return Poly3({tuple(e): ONE})

    @staticmethod
    def monomial(expo, coef=ONE):
        return Poly3({tuple(expo): coef})

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Poly3):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            cur = t.get(e, ZERO) + c
            if cur:
                t[e] = cur
            else:
                t.pop(e, None)
        out = Poly3()
        out.terms = t
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = CycNum.of(c)
        out = Poly3()
        if c:
            out.terms = {e: v * c for e, v in self.terms.items()}
        return out

    def swap(self, i, j):
        """Exchange the variables x_i and x_j."""
        a, b = i - 1, j - 1
        t = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[a], e2[b] = e2[b], e2[a]
            t[tuple(e2)] = c
        out = Poly3()
        out.terms = t
        return out

    def diff(self, i):
        a = i - 1
        t = {}
        for e, c in self.terms.items():
            if e[a]:
                e2 = list(e)
                e2[a] -= 1
                t[tuple(e2)] = c * e[a]
        out = Poly3()
        out.terms = t
        return out

    def mul_var(self, i):
        a = i - 1
        t = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[a] += 1
            t[tuple(e2)] = c
        out = Poly3()
        out.terms = t
        return out

    def div_difference(self, i, l):
        """Exact division by (x_i - x_l); a nonzero remainder is a hard error."""
        a, b = i - 1, l - 1
        rem = dict(self.terms)
        quo = {}
        while True:
            dmax = max((e[a] for e in rem), default=0)
            if dmax == 0:
                break
            for e in [e for e in rem if e[a] == dmax]:
                c = rem.pop(e)
                q = list(e)
                q[a] -= 1
                q = tuple(q)
                quo[q] = quo.get(q, ZERO) + c
                # subtract q * (x_i - x_l): the x_i part cancels by design
                low = list(q)
                low[b] += 1
                low = tuple(low)
                cur = rem.get(low, ZERO) + c
                if cur:
                    rem[low] = cur
                else:
                    rem.pop(low, None)
        if any(c for c in rem.values()):
            raise AssertionError("division by x%d - x%d left a remainder" % (i, l))
        out = Poly3()
        out.terms = {e: c for e, c in quo.items() if c}
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join("x%d^%d" % (k + 1, e[k]) if e[k] > 1 else "x%d" % (k + 1)
                            for k in range(3) if e[k])
            cs = str(c)
            if c.is_composite():
                cs = "(%s)" % cs
            parts.append(cs if not mono else "%s*%s" % (cs, mono))
        return " + ".join(parts)

    __repr__ = __str__


def basis_monomials(cap):
    out = []
    for n in range(cap + 1):
        for e1 in range(n + 1):
            for e2 in range(n + 1 - e1):
                out.append((e1, e2, n - e1 - e2))
    return out


class PolyOperator:
    """A linear operator on polynomials with a declared degree shift."""

    __slots__ = ("fn", "shift", "name")

    def __init__(self, fn, shift, name=""):
        self.fn = fn
        self.shift = shift
        self.name = name

    def __call__(self, p):
        return self.fn(p)

    def compose(self, other):
        return PolyOperator(lambda p: self.fn(other.fn(p)),
                            self.shift + other.shift,
                            "%s.%s" % (self.name, other.name))

    def __add__(self, other):
        return PolyOperator(lambda p: self.fn(p) + other.fn(p),
                            max(self.shift, other.shift),
                            "(%s+%s)" % (self.name, other.name))

    def __sub__(self, other):
        return PolyOperator(lambda p: self.fn(p) - other.fn(p),
                            max(self.shift, other.shift),
                            "(%s-%s)" % (self.name, other.name))

    def scale(self, c):
        c = CycNum.of(c)
        return PolyOperator(lambda p: self.fn(p).scale(c), self.shift, self.name)

    def commutator(self, other):
        return PolyOperator(
            lambda p: self.fn(other.fn(p)) - other.fn(self.fn(p)),
            self.shift + other.shift,
            "[%s,%s]" % (self.name, other.name))

    def anticommutator(self, other):
        return PolyOperator(
            lambda p: self.fn(other.fn(p)) + other.fn(self.fn(p)),
            self.shift + other.shift,
            "{%s,%s}" % (self.name, other.name))


def identity_op():
    return PolyOperator(lambda p: p, 0, "1")


def zero_op():
    return PolyOperator(lambda p: Poly3.zero(), 0, "0")


def k_op(i, j):
    if i == j or not (1 <= i <= 3 and 1 <= j <= 3):
        raise ValueError("transposition needs two distinct indices in 1..3")
    return PolyOperator(lambda p: p.swap(i, j), 0, "K%d%d" % (i, j))


def dunkl_op(i, nu):
    nu = as_fraction(nu)

    def fn(p):
        out = p.diff(i)
        if nu:
            for l in (1, 2, 3):
                if l == i:
                    continue
                diffp = p - p.swap(i, l)
                out = out + diffp.div_difference(i, l).scale(nu)
        return out

    return PolyOperator(fn, -1, "D%d" % i)


def mult_op(i):
    return PolyOperator(lambda p: p.mul_var(i), 1, "x%d" % i)


def osc_op(i, alpha, nu):
    """The scaled generator at^alpha_i = x_i + (-1)^alpha D_i."""
    d = dunkl_op(i, nu)
    sign = -1 if alpha else 1
    x = mult_op(i)
    return PolyOperator(lambda p: p.mul_var(i) + d.fn(p).scale(sign), 1,
                        "at%d_%d" % (alpha, i))


def operator_equal(A, B, cap, space_cap=None):
    """True iff A p = B p for every monomial p of total degree <= cap.

    space_cap guards the evaluation: the declared positive shifts must keep
    results inside degree space_cap (defaults to cap plus the larger shift).
    """
    worst = max(A.shift, B.shift, 0)
    if space_cap is None:
        space_cap = cap + worst
    if cap + worst > space_cap:
        raise DomainError("operators shift degree %d inputs beyond the "
                          "guarded space (cap %d)" % (cap, space_cap))
    for expo in basis_monomials(cap):
        p = Poly3.monomial(expo)
        if A(p) != B(p):
            return False
    return True


def group_ops():
    """The Q/L basis of C[S3] realized as polynomial operators."""
    w = OMEGA
    w2 = w * w
    third = CycNum.of(Fraction(1, 3))
    pows = (ONE, w, w2)
    K12, K13, K23 = k_op(1, 2), k_op(1, 3), k_op(2, 3)
    ops = {}
    for k in range(3):
        ops["Q%d" % k] = (identity_op()
                          + K12.compose(K13).scale(pows[k % 3])
                          + K12.compose(K23).scale(pows[(-k) % 3])).scale(third)
        ops["L%d" % k] = (K12.scale(pows[k % 3]) + K23
                          + K13.scale(pows[(-k) % 3])).scale(third)
    return ops


def vector_ops(nu=0):
    """Scaled center-of-mass-free vectors xt, xtp, yt, ytp."""
    w = OMEGA
    w2 = w * w
    out = {}
    for alpha, tag in ((0, ""), (1, "p")):
        a1, a2, a3 = (osc_op(i, alpha, nu) for i in (1, 2, 3))
        out["xt" + tag] = a1 + a2.scale(w) + a3.scale(w2)
        out["yt" + tag] = a1 + a2.scale(w2) + a3.scale(w)
    return out


# ---------------------------------------------------------------------------
# Relation suites.
# ---------------------------------------------------------------------------


def _eps(a, b):
    return (1 if (a, b) == (0, 1) else -1 if (a, b) == (1, 0) else 0)


def aa_commutator_suite(nu, cap):
    """Check [at^a_i, at^b_j] = 2 eps (delta_ij (1 + nu sum K) - nu K_ij)
    for every index combination; returns a name -> bool dict."""
    nu = as_fraction(nu)
    results = {}
    ops = {(i, a): osc_op(i, a, nu) for i in (1, 2, 3) for a in (0, 1)}
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            for a in (0, 1):
                for b in (0, 1):
                    lhs = ops[(i, a)].commutator(ops[(j, b)])
                    eps = _eps(a, b)
                    if eps == 0:
                        rhs = zero_op()
                    elif i == j:
                        rhs = identity_op()
                        for l in (1, 2, 3):
                            if l != i:
                                rhs = rhs + k_op(i, l).scale(nu)
                        rhs = rhs.scale(2 * eps)
                    else:
                        rhs = k_op(i, j).scale(-2 * eps * nu)
                    name = "comm_a%d_%d_a%d_%d" % (a, i, b, j)
                    results[name] = operator_equal(lhs, rhs, cap)
    return results


def hamiltonian_check(nu, cap):
    """The oscillator Hamiltonian H = 1/4 sum_i {at^0_i, at^1_i}.

    Checks [H, at^a_i] = -(-1)^a at^a_i and the normal-ordered split
    H = 1/2 sum at^1_i at^0_i + C with C = 1/2 sum_i (1 + nu sum_l K_il);
    on constants C evaluates to the ground scalar 3/2 (1 + 2 nu).
    """
    if cap < 2:
        raise ValueError("cap must be at least 2")
    nu = as_fraction(nu)
    quarter = Fraction(1, 4)
    terms = [osc_op(i, 0, nu).anticommutator(osc_op(i, 1, nu)) for i in (1, 2, 3)]
    H = (terms[0] + terms[1] + terms[2]).scale(quarter)
    results = {}
    for i in (1, 2, 3):
        for a in (0, 1):
            lhs = H.commutator(osc_op(i, a, nu))
            rhs = osc_op(i, a, nu).scale(-((-1) ** a))
            results["h_comm_a%d_%d" % (a, i)] = operator_equal(
                lhs, rhs, cap - 3, space_cap=cap)
    lowered = None
    for i in (1, 2, 3):
        t = osc_op(i, 1, nu).compose(osc_op(i, 0, nu))
        lowered = t if lowered is None else lowered + t
    const = identity_op().scale(Fraction(3, 2))
    for i in (1, 2, 3):
        for l in (1, 2, 3):
            if l != i:
                const = const + k_op(i, l).scale(nu / 2)
    results["h_normal_ordered"] = operator_equal(
        H, lowered.scale(Fraction(1, 2)) + const, cap - 2, space_cap=cap)
    # H(1) is 1/2 sum x_i^2; the scalar summand of the split is the ground
    # value 3/2 (1 + 2 nu) on constants, frozen as a regression
    ground = H(Poly3.one())
    half_x2 = Poly3.zero()
    for i in (1, 2, 3):
        half_x2 = half_x2 + Poly3.variable(i).mul_var(i).scale(Fraction(1, 2))
    results["h_on_constants"] = ground == half_x2
    results["ground_scalar"] = const(Poly3.one()) == Poly3.one().scale(
        Fraction(3, 2) + 3 * nu)
    return results


def abstract_embedding_check(cap):
    """At nu = 0 the scaled vectors and the group operators satisfy every
    structure relation of the abstract algebra with commutators doubled."""
    if cap < 3:
        raise ValueError("cap must be at least 3")
    vec = vector_ops(0)
    grp = group_ops()
    xt, xtp, yt, ytp = vec["xt"], vec["xtp"], vec["yt"], vec["ytp"]
    results = {}

    def eq(name, A, B, drop):
        results[name] = operator_equal(A, B, cap - drop, space_cap=cap + 2)

    six = identity_op().scale(6)
    eq("comm_x_xp", xt.commutator(xtp), zero_op(), 2)
    eq("comm_y_yp", yt.commutator(ytp), zero_op(), 2)
    eq("comm_x_yp", xt.commutator(ytp), six, 2)
    eq("comm_y_xp", yt.commutator(xtp), six, 2)
    eq("comm_x_y", xt.commutator(yt), zero_op(), 2)
    eq("comm_xp_yp", xtp.commutator(ytp), zero_op(), 2)
    # transport rules: L_i x = y L_{i+1}, L_i y = x L_{i-1},
    #                  Q_i x = x Q_{i+1}, Q_i y = y Q_{i-1}
    for i in range(3):
        Li, Qi = grp["L%d" % i], grp["Q%d" % i]
        Ln, Lp = grp["L%d" % ((i + 1) % 3)], grp["L%d" % ((i - 1) % 3)]
        Qn, Qp = grp["Q%d" % ((i + 1) % 3)], grp["Q%d" % ((i - 1) % 3)]
        for tag, xv, yv in (("", xt, yt), ("p", xtp, ytp)):
            eq("L%d_x%s" % (i, tag), Li.compose(xv), yv.compose(Ln), 1)
            eq("L%d_y%s" % (i, tag), Li.compose(yv), xv.compose(Lp), 1)
            eq("Q%d_x%s" % (i, tag), Qi.compose(xv), xv.compose(Qn), 1)
            eq("Q%d_y%s" % (i, tag), Qi.compose(yv), yv.compose(Qp), 1)
    # the scaled singlet: mt = 1/2 (xtp yt - ytp xt) represents 2m
    mt = (xtp.compose(yt) - ytp.compose(xt)).scale(Fraction(1, 2))
    for tag, v, sign in (("x", xt, 1), ("xp", xtp, 1), ("y", yt, -1), ("yp", ytp, -1)):
        eq("m_comm_%s" % tag, mt.commutator(v), v.scale(3 * sign), 3)
    for i in range(3):
        eq("m_L%d" % i, grp["L%d" % i].compose(mt) + mt.compose(grp["L%d" % i]),
           zero_op(), 2)
        eq("m_Q%d" % i, grp["Q%d" % i].compose(mt) - mt.compose(grp["Q%d" % i]),
           zero_op(), 2)
    # group algebra relations as operators
    def delta(k):
        return 1 if k % 3 == 0 else 0
    for i in range(3):
        for j in range(3):
            Li, Lj = grp["L%d" % i], grp["L%d" % j]
            Qi, Qj = grp["Q%d" % i], grp["Q%d" % j]
            eq("LL%d%d" % (i, j), Li.compose(Lj),
               grp["Q%d" % j].scale(delta(i + j)), 0)
            eq("LQ%d%d" % (i, j), Li.compose(Qj),
               grp["L%d" % j].scale(delta(i - j)), 0)
            eq("QL%d%d" % (i, j), Qi.compose(Lj),
               grp["L%d" % j].scale(delta(i + j)), 0)
            eq("QQ%d%d" % (i, j), Qi.compose(Qj),
               grp["Q%d" % j].scale(delta(i - j)), 0)
    return results


def dunkl_check_report(nus, cap):
    """Aggregate pass/fail report used by the command line interface."""
    report = {"cap": cap, "nus": [str(Fraction(n)) for n in nus], "suites": {}}
    ok = True
    for nu in nus:
        aa = aa_commutator_suite(nu, max(1, cap - 2))
        ham = hamiltonian_check(nu, cap)
        suite = {"aa": aa, "hamiltonian": ham}
        report["suites"]["nu=%s" % Fraction(nu)] = {
            k: all(v.values()) for k, v in suite.items()}
        ok = ok and all(all(v.values()) for v in suite.values())
    emb = abstract_embedding_check(max(3, cap))
    report["suites"]["embedding_nu0"] = all(emb.values())
    ok = ok and all(emb.values())
    report["all_passed"] = ok
    return report
