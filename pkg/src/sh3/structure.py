"""Computational structure theory: center, commutant, invariant forms and
the constructive simplicity certificate.

The certificate machinery carries an arbitrary nonzero element to the unit
inside the two-sided ideal it generates, by a replayable trail of explicit
operations: multiplications by recorded elements, brackets with the sl2
generators, weight and singlet projections (both polynomials in the inner
derivations ad T, hence ideal preserving), and Bezout combinations of
polynomials in m.  The workhorse identities are

    y^3 p(m) Q_i (x+)^3   has singlet part   P(m) p(m + 9/2) Q_i
    x^3 p(m) Q_i (y+)^3   has singlet part   P(-m) p(m - 9/2) Q_i

with P(m) = (y^3 (x+)^3)_0 computed once by projection, together with the
reflection sandwiches L_a (.) L_b that send p(m) Q_i to p(-m) Q_j.  Each
reduction round first makes the polynomial's root set symmetric under
m -> -m and then removes its extreme roots through both shifts, so the
degree strictly drops and the loop always terminates at a constant.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

from . import s3
from .algebra import (Element, Monomial, as_m_polynomial, commutator, l_elt,
                      m_elt, m_power, normal_mul, q_elt, superbracket, unit,
                      x_elt, xp_elt, y_elt, yp_elt)
from .cyclotomic import CycNum, ONE, ZERO, CycMatrix, SparseEchelon
from .mpoly import MPolynomial
from .sl2 import singlet_project, slice_words
from .supertrace import str_eval

__all__ = [
    "CertificateError", "CertStep", "SimplicityCertificate",
    "simplicity_certificate", "replay_certificate", "phi_parity_check",
    "shift_polynomial", "poly_to_element",
    "center_basis", "commutant_slice", "BracketSpan",
    "lie_ideal_experiment", "form_independence_on_commutant",
    "random_element",
]


class CertificateError(Exception):
    """The certificate pipeline could not complete; carries the trail."""


# ---------------------------------------------------------------------------
# The contraction polynomial P(m).
# ---------------------------------------------------------------------------

_SHIFT_POLY = None
_SHIFT_STEP = CycNum.of(Fraction(9, 2))


def shift_polynomial():
    """P(m) = (y^3 (x+)^3)_0, computed once by exact singlet projection."""
    global _SHIFT_POLY
    if _SHIFT_POLY is None:
        cube = normal_mul(y_elt() ** 3, xp_elt() ** 3)
        polys = singlet_project(cube, as_polynomials=True)
        coeffs = None
        for cs, e in polys:
            if coeffs is None:
                coeffs = cs
            elif cs != coeffs:
                raise AssertionError("cube contraction is not sector uniform")
        _SHIFT_POLY = MPolynomial(coeffs)
    return _SHIFT_POLY


def poly_to_element(poly, e):
    """The element p(m) E for a group basis element e."""
    out = Element.zero()
    for n, c in enumerate(poly.coeffs):
        if c:
            out = out + normal_mul(m_power(n), Element({Monomial(0, 0, 0, 0, e): ONE})).scale(c)
    return out


def _poly_as_left_factor(poly):
    """p(m) as an Element usable as a left multiplier."""
    out = Element.zero()
    for n, c in enumerate(poly.coeffs):
        if c:
            out = out + m_power(n).scale(c)
    return out


def _extract_poly(elem):
    """elem must equal p(m) E for a single sector; returns (poly, e)."""
    decomp = as_m_polynomial(elem)
    if decomp is None or len(decomp) != 1:
        raise CertificateError("element is not a single-sector polynomial in m: %s" % elem)
    return decomp[0]


def _split_q0_l0(elem):
    """elem must lie in span{m^n Q0, m^n L0}; returns the two polynomials."""
    decomp = as_m_polynomial(elem)
    if decomp is None:
        raise CertificateError("element left the invariant span: %s" % elem)
    f = MPolynomial()
    g = MPolynomial()
    for poly, e in decomp:
        if e == s3.qe(0):
            f = poly
        elif e == s3.le(0):
            g = poly
        else:
            raise CertificateError("unexpected sector %s" % s3.name_of(e))
    return f, g


# ---------------------------------------------------------------------------
# Certificate data model.
# ---------------------------------------------------------------------------


class CertStep:
    __slots__ = ("rule", "kind", "inputs", "params", "output")

    def __init__(self, rule, kind, inputs, params, output):
        self.rule = rule
        self.kind = kind
        self.inputs = list(inputs)
        self.params = dict(params)
        self.output = output

    def to_json_dict(self):
        return {"rule": self.rule, "kind": self.kind, "inputs": self.inputs,
                "params": self.params, "output": str(self.output)}


class SimplicityCertificate:
    def __init__(self, seed, rng_seed, steps, phi_report, final):
        self.seed = seed
        self.rng_seed = rng_seed
        self.steps = steps
        self.phi_report = phi_report
        self.final = final

    def to_json(self):
        return json.dumps({
            "format_version": "1",
            "rng_seed": self.rng_seed,
            "seed": str(self.seed),
            "steps": [s.to_json_dict() for s in self.steps],
            "phi": self.phi_report,
            "final": str(self.final),
        }, indent=1)

    @staticmethod
    def from_json(text):
        from .parser import parse_element
        doc = json.loads(text)
        steps = [CertStep(s["rule"], s["kind"], s["inputs"], s["params"],
                          parse_element(s["output"]))
                 for s in doc["steps"]]
        return SimplicityCertificate(parse_element(doc["seed"]),
                                     doc.get("rng_seed", 0), steps,
                                     doc.get("phi", {}),
                                     parse_element(doc["final"]))


def _apply_rule(rule, kind, ins, params):
    """Execute one certificate rule on already-resolved input elements.

    Shared by the builder and the replayer so a recorded step is exactly
    reproducible.
    """
    from .parser import parse_element
    m = m_elt()
    if rule == "seed":
        return normal_mul(ins[0], parse_element(params["multiplier"]))
    if rule == "ascend":
        cur = ins[0]
        for _ in range(params["iterations"]):
            cur = superbracket(_T00(), cur)
            if cur.is_zero():
                raise CertificateError("ascend died before the recorded count")
        nxt = superbracket(_T00(), cur)
        if not nxt.is_zero():
            raise CertificateError("ascend did not reach an extreme vector")
        return cur.weight_component(params["weight"])
    if rule == "descend":
        n = params["n"]
        two_s = params["two_s"]
        cre = Element({Monomial(two_s - n, n, 0, 0, s3.qe(i)): ONE for i in range(3)})
        return singlet_project(normal_mul(cre, ins[0]))
    if rule == "symmetrize":
        if kind == "m-average":
            return (normal_mul(m, ins[0]) + normal_mul(ins[0], m)).scale(Fraction(1, 2))
        if kind == "evenize":
            mult = MPolynomial.from_coeff_strings(params["multiplier"])
            return normal_mul(_poly_as_left_factor(mult), ins[0])
        if kind == "normalize":
            return ins[0].scale(MPolynomial.from_coeff_strings([params["scale"]]).coeffs[0])
    if rule == "transport":
        if kind == "swap-sectors":
            return normal_mul(ins[0], l_elt(0))
        if kind == "to-Q1":
            return singlet_project(normal_mul(normal_mul(yp_elt(), ins[0]), x_elt()))
        if kind == "to-Q2":
            return singlet_project(normal_mul(normal_mul(xp_elt(), ins[0]), y_elt()))
        if kind in ("mirror", "sector-shift"):
            left = l_elt(params["left"])
            right = l_elt(params["right"])
            return normal_mul(normal_mul(left, ins[0]), right)
    if rule == "shift-reduce":
        if kind == "up-shift":
            poly, e = _extract_poly(ins[0])
            out = shift_polynomial() * poly.shift(_SHIFT_STEP)
            return poly_to_element(out, e)
        if kind == "down-shift":
            poly, e = _extract_poly(ins[0])
            out = shift_polynomial().reflect() * poly.shift(-_SHIFT_STEP)
            return poly_to_element(out, e)
        if kind == "bezout":
            a = MPolynomial.from_coeff_strings(params["a"])
            b = MPolynomial.from_coeff_strings(params["b"])
            return (normal_mul(_poly_as_left_factor(a), ins[0])
                    + normal_mul(_poly_as_left_factor(b), ins[1]))
        if kind == "assemble":
            out = Element.zero()
            for e in ins:
                out = out + e
            return out
    raise CertificateError("unknown certificate rule %s/%s" % (rule, kind))


_T00_CACHE = None


def _T00():
    global _T00_CACHE
    if _T00_CACHE is None:
        from .algebra import t_elt
        _T00_CACHE = t_elt(0, 0)
    return _T00_CACHE


# ---------------------------------------------------------------------------
# Pipeline.
# ---------------------------------------------------------------------------

_ANCHORS = ("Q0", "L0", "x*Q0", "x*L0", "y*Q0", "y*L0")


class _Builder:
    def __init__(self, seed):
        self.steps = []
        self.elems = []
        self.seed = seed

    def run(self, rule, kind, inputs, params):
        ins = [self.seed if i == -1 else self.elems[i] for i in inputs]
        out = _apply_rule(rule, kind, ins, params)
        self.steps.append(CertStep(rule, kind, inputs, params, out))
        self.elems.append(out)
        return len(self.elems) - 1, out


def _reduce_sector_loop(bld, idx):
    """Shift-reduce p(m) Q_i down to the idempotent, strictly degree-wise.

    The polynomial is read off the recorded element so the trail stays
    exactly consistent; xgcd returns a monic gcd for raw inputs, so after
    the first combination every held polynomial is monic.
    """
    poly, _e = _extract_poly(bld.elems[idx])
    while poly.degree > 0:
        before = poly.degree
        up_idx, _ = bld.run("shift-reduce", "up-shift", [idx], {})
        up_poly = shift_polynomial() * poly.shift(_SHIFT_STEP)
        g1, a1, b1 = MPolynomial.xgcd(poly, up_poly)
        idx, _ = bld.run("shift-reduce", "bezout", [idx, up_idx],
                         {"a": a1.coeff_strings(), "b": b1.coeff_strings()})
        poly = g1
        if poly.degree > 0:
            down_idx, _ = bld.run("shift-reduce", "down-shift", [idx], {})
            down_poly = shift_polynomial().reflect() * poly.shift(-_SHIFT_STEP)
            g2, a2, b2 = MPolynomial.xgcd(poly, down_poly)
            idx, _ = bld.run("shift-reduce", "bezout", [idx, down_idx],
                             {"a": a2.coeff_strings(), "b": b2.coeff_strings()})
            poly = g2
        if poly.degree >= before:
            raise CertificateError("shift reduction stalled at degree %d" % before)
    if poly.is_zero():
        raise CertificateError("reduction collapsed to zero")
    c = poly.coeffs[0]
    if c != ONE:
        idx, _ = bld.run("symmetrize", "normalize", [idx],
                         {"scale": str(c.inverse())})
    return idx


def _attempt_pipeline(bld, base_idx):
    # anchor: reach f Q0 + g L0 with nonzero Q0 part
    anchor_idx = None
    for mult in _ANCHORS:
        idx, h = bld.run("seed", "anchor", [base_idx], {"multiplier": mult})
        if h.is_zero():
            bld.steps.pop(); bld.elems.pop()
            continue
        sectors = h.sectors_present()
        if not sectors <= {s3.qe(0), s3.le(0)}:
            raise CertificateError("anchored element has stray sectors")
        if any(m.e == s3.qe(0) for m in h.terms):
            anchor_idx = idx
            break
        bld.steps.pop(); bld.elems.pop()
    if anchor_idx is None:
        return None
    h = bld.elems[anchor_idx]

    # raise to an extreme vector, then pick a pure-weight component
    iterations = 0
    cur = h
    bound = h.degree + 2
    while True:
        nxt = superbracket(_T00(), cur)
        if nxt.is_zero():
            break
        cur = nxt
        iterations += 1
        if iterations > bound:
            raise CertificateError("ascend failed to terminate")

    for w in sorted(cur.weights_present()):
        if w > 0:
            continue
        two_s = -w
        asc_idx, comp = bld.run("ascend", "raise-to-extreme", [anchor_idx],
                                {"iterations": iterations, "weight": w})
        if comp.is_zero():
            bld.steps.pop(); bld.elems.pop()
            continue
        for n in range(two_s + 1):
            desc_idx, f0 = bld.run("descend", "invariant-part", [asc_idx],
                                   {"n": n, "two_s": two_s})
            if f0.is_zero():
                bld.steps.pop(); bld.elems.pop()
                continue
            fq, gl = _split_q0_l0(f0)
            if fq.is_zero():
                # recover the Q0 sector through right multiplication by L0
                desc_idx, f0 = bld.run("transport", "swap-sectors", [desc_idx], {})
                fq, gl = _split_q0_l0(f0)
            if fq.is_zero():
                bld.steps.pop(); bld.elems.pop()
                bld.steps.pop(); bld.elems.pop()
                continue
            return desc_idx, fq, gl
        bld.steps.pop(); bld.elems.pop()
    return None


def simplicity_certificate(seed, rng_seed=0, max_attempts=100):
    """Build a replayable trail from a nonzero seed to the unit.

    Raises CertificateError after max_attempts randomized restarts; a failure
    would be evidence of a bug, since the pipeline is backed by a
    termination argument.
    """
    if seed.is_zero():
        raise ValueError("seed must be nonzero")
    rng = random.Random(rng_seed)
    extra_multiplier = None
    for attempt in range(max_attempts):
        bld = _Builder(seed)
        base_idx = -1
        if extra_multiplier is not None:
            base_idx, base = bld.run("seed", "random-multiplier", [-1],
                                     {"multiplier": extra_multiplier})
            if base.is_zero():
                extra_multiplier = _random_monomial_text(rng)
                continue
        try:
            got = _attempt_pipeline(bld, base_idx)
            if got is not None:
                return _finish_certificate(seed, rng_seed, bld, got)
        except CertificateError:
            pass
        extra_multiplier = _random_monomial_text(rng)
    raise CertificateError("certificate pipeline failed after %d attempts"
                           % max_attempts)


def _random_monomial_text(rng):
    names = ["x", "xp", "y", "yp"]
    deg = rng.randint(1, 2)
    parts = [rng.choice(names) for _ in range(deg)]
    parts.append(rng.choice(s3.GROUP_NAMES))
    return "*".join(parts)


def _finish_certificate(seed, rng_seed, bld, anchored):
    desc_idx, fq, gl = anchored

    # m-average removes the L0 part; skip when it is already absent
    if gl.is_zero():
        f0_idx = desc_idx
        f0 = fq
    else:
        f0_idx, f0_elem = bld.run("symmetrize", "m-average", [desc_idx], {})
        f0, rest = _split_q0_l0(f0_elem)
        if not rest.is_zero() or f0.is_zero():
            raise CertificateError("m-average did not isolate the Q0 sector")

    # transports to the other idempotent sectors
    g1_idx, g1_elem = bld.run("transport", "to-Q1", [f0_idx], {})
    g2_idx, g2_elem = bld.run("transport", "to-Q2", [f0_idx], {})
    f1, e1 = _extract_poly(g1_elem)
    f2, e2 = _extract_poly(g2_elem)
    if e1 != s3.qe(1) or e2 != s3.qe(2) or f1.is_zero() or f2.is_zero():
        raise CertificateError("sector transport failed")

    # reflections: L0 (.) L0 on Q0, cross reflections between Q1 and Q2
    r0_idx, r0_elem = bld.run("transport", "mirror", [f0_idx],
                              {"left": 0, "right": 0})
    m21_idx, m21_elem = bld.run("transport", "mirror", [g2_idx],
                                {"left": 2, "right": 1})
    m12_idx, m12_elem = bld.run("transport", "mirror", [g1_idx],
                                {"left": 1, "right": 2})

    # symmetric start at Q0
    phi0, a, b = MPolynomial.xgcd(f0, f0.reflect())
    q0_idx, _ = bld.run("shift-reduce", "bezout", [f0_idx, r0_idx],
                        {"a": a.coeff_strings(), "b": b.coeff_strings()})
    # combined starts at Q1 and Q2
    c1, a, b = MPolynomial.xgcd(f1, f2.reflect())
    c1_idx, _ = bld.run("shift-reduce", "bezout", [g1_idx, m21_idx],
                        {"a": a.coeff_strings(), "b": b.coeff_strings()})
    c2, a, b = MPolynomial.xgcd(f2, f1.reflect())
    c2_idx, _ = bld.run("shift-reduce", "bezout", [g2_idx, m12_idx],
                        {"a": a.coeff_strings(), "b": b.coeff_strings()})

    phi_report = phi_parity_check(phi0, c1, c2)
    phi_report["phi0"] = phi0.coeff_strings()
    phi_report["phi1"] = c1.coeff_strings()
    phi_report["phi2"] = c2.coeff_strings()

    # reduce Q0
    q0_final = _reduce_sector_loop(bld, q0_idx)
    # evenize Q1 with the reflected polynomial as a free left factor
    ev_idx, _ = bld.run("symmetrize", "evenize", [c1_idx],
                        {"multiplier": c1.reflect().coeff_strings()})
    q1_final = _reduce_sector_loop(bld, ev_idx)
    # Q2 from Q1 by one sector shift
    q2_final, q2_elem = bld.run("transport", "sector-shift", [q1_final],
                                {"left": 1, "right": 2})
    if bld.elems[q0_final] != q_elt(0) or bld.elems[q1_final] != q_elt(1) \
            or q2_elem != q_elt(2):
        raise CertificateError("sector reduction did not reach the idempotents")

    _, final = bld.run("shift-reduce", "assemble",
                       [q0_final, q1_final, q2_final], {})
    if final != unit():
        raise CertificateError("assembled element is not the unit")
    return SimplicityCertificate(seed, rng_seed, bld.steps, phi_report, final)


def replay_certificate(cert):
    """Re-execute every recorded step and check outputs and the final unit."""
    elems = []
    for k, step in enumerate(cert.steps):
        ins = [cert.seed if i == -1 else elems[i] for i in step.inputs]
        out = _apply_rule(step.rule, step.kind, ins, step.params)
        if out != step.output:
            raise CertificateError("step %d (%s/%s) does not replay"
                                   % (k, step.rule, step.kind))
        elems.append(out)
    if not elems or elems[-1] != unit():
        raise CertificateError("certificate does not end at the unit")
    return True


def phi_parity_check(phi0, phi1, phi2):
    """Check phi0(m) = +-phi0(-m) and phi1(m) = +-phi2(-m) exactly."""
    report = {}
    r0 = phi0.reflect()
    if r0 == phi0:
        report["phi0_parity"] = "+"
    elif r0 == -phi0:
        report["phi0_parity"] = "-"
    else:
        raise CertificateError("phi0 is neither even nor odd: %s" % phi0)
    r2 = phi2.reflect()
    if r2 == phi1:
        report["pair_sign"] = "+"
    elif r2 == -phi1:
        report["pair_sign"] = "-"
    else:
        raise CertificateError("phi1(m) != +-phi2(-m): %s vs %s" % (phi1, phi2))
    report["parity_ok"] = True
    return report


# ---------------------------------------------------------------------------
# Center.
# ---------------------------------------------------------------------------


def center_basis(degree_cap):
    """Exact basis of the degree-capped center.

    A central element commutes with the letters, hence with the quadratic
    sl2 generators, so it is an invariant: it suffices to solve inside
    span{m^n E}, which the singlet machinery certifies to be the full
    invariant space of the block.
    """
    candidates = []
    for n in range(degree_cap // 2 + 1):
        for e in range(6):
            candidates.append(normal_mul(m_power(n), Element({Monomial(0, 0, 0, 0, e): ONE})))
    gens = [x_elt(), y_elt(), xp_elt(), yp_elt()]
    gens += [q_elt(i) for i in range(3)] + [l_elt(i) for i in range(3)]
    rows = {}
    cols = []
    for cand in candidates:
        col = {}
        for gi, g in enumerate(gens):
            br = commutator(cand, g)
            for mono, c in br.terms.items():
                col[(gi, mono)] = c
        cols.append(col)
        for key in col:
            rows.setdefault(key, len(rows))
    mat = [[ZERO] * len(cols) for _ in range(len(rows))]
    for j, col in enumerate(cols):
        for key, c in col.items():
            mat[rows[key]][j] = c
    if not rows:
        kernel = [[ONE if i == j else ZERO for j in range(len(cols))]
                  for i in range(len(cols))]
    else:
        kernel = CycMatrix(mat).nullspace()
    out = []
    for vec in kernel:
        elem = Element.zero()
        for c, cand in zip(vec, candidates):
            if c:
                elem = elem + cand.scale(c)
        out.append(elem)
    return out


# ---------------------------------------------------------------------------
# Commutant.
# ---------------------------------------------------------------------------


class BracketSpan:
    """The span of all superbrackets of degree-bounded basis monomials.

    Peeling the left factor letter by letter with

        [f g, h} = [f, g h} + (-1)^(pi(f)(pi(g)+pi(h))) [g, h f}

    shows the span is already generated by brackets whose first factor is a
    single letter or group element, which is what gets enumerated.  Rows are
    kept in per-sector echelons keyed by (weight, rho, parity); columns are
    ordered high degree first, so the echelon rows whose pivot sits in a
    degree <= d column are supported entirely there and count the
    intersection with any capped block at once.

    fill_to(cap) is incremental: raising the bracket degree budget extends
    the same echelons, which is what makes stabilization checks cheap.
    """

    def __init__(self, max_source_cap):
        self.max_source_cap = max_source_cap
        self.filled_to = -1
        self.col_index = {}
        self.col_degree = {}
        self.echelons = {}
        self._sector_dims = {}
        self._build_columns()

    @staticmethod
    def _sector_of(mono):
        return (mono.weight, mono.rho, mono.parity)

    def _build_columns(self):
        sectors = {}
        for n in range(self.max_source_cap + 1):
            for w in slice_words(n):
                for e in range(6):
                    mono = Monomial(w[0], w[1], w[2], w[3], e)
                    sectors.setdefault(self._sector_of(mono), []).append(mono)
        base = 0
        for sec in sorted(sectors):
            monos = sorted(sectors[sec], key=lambda m: (-m.degree, m.sort_key()))
            self.echelons[sec] = SparseEchelon()
            for i, mono in enumerate(monos):
                self.col_index[mono] = base + i
                self.col_degree[base + i] = mono.degree
            self._sector_dims[sec] = len(monos)
            base += len(monos)

    def _sector_full(self, sec):
        ech = self.echelons.get(sec)
        return ech is not None and ech.rank == self._sector_dims[sec]

    def _row_of(self, elem):
        return {self.col_index[m]: c for m, c in elem.terms.items()}

    def fill_to(self, source_cap):
        """Insert all brackets with factor degrees summing <= source_cap."""
        if source_cap > self.max_source_cap:
            raise ValueError("beyond the allocated column universe")
        if source_cap <= self.filled_to:
            return self
        gens = [(x_elt(), 1, -1, 1, 1), (y_elt(), 1, -1, -1, 1),
                (xp_elt(), 1, 1, 1, 1), (yp_elt(), 1, 1, -1, 1)]
        for i in range(3):
            gens.append((q_elt(i), 0, 0, 0, 0))
            gens.append((l_elt(i), 0, 0, 0, 0))
        for g, dg, wg, rg, pg in gens:
            if dg == 0:
                mono_g = next(iter(g.terms))
                wg, rg, pg = mono_g.weight, mono_g.rho, mono_g.parity
            lo = max(0, self.filled_to + 1 - dg)
            for n in range(lo, source_cap + 1 - dg):
                for w in slice_words(n):
                    for e in range(6):
                        mono = Monomial(w[0], w[1], w[2], w[3], e)
                        sec = ((wg + mono.weight),
                               (rg + mono.rho) % 3,
                               (pg + mono.parity) % 2)
                        if self._sector_full(sec):
                            continue
                        br = superbracket(g, Element({mono: ONE}))
                        if br.is_zero():
                            continue
                        self.echelons[sec].insert(self._row_of(br))
        self.filled_to = source_cap
        return self

    def low_dimension(self, degree_cap):
        """dim of (bracket span) intersected with the degree-capped block."""
        cd = self.col_degree
        total = 0
        for ech in self.echelons.values():
            total += sum(1 for p in ech.pivot_rows if cd[p] <= degree_cap)
        return total

    def contains(self, elem):
        rows = {}
        for mono, c in elem.terms.items():
            rows.setdefault(self._sector_of(mono), {})[self.col_index[mono]] = c
        return all(self.echelons[sec].contains(row)
                   for sec, row in rows.items())


def commutant_slice(degree_cap, source_cap=None, check_stabilization=True):
    """Dimension and codimension of the commutant inside the capped block.

    Returns (dimension, codimension, stabilized); stabilized reports whether
    raising the source cap by two left the result unchanged.
    """
    if source_cap is None:
        source_cap = degree_cap + 4
    if source_cap < degree_cap:
        raise ValueError("source_cap must be at least degree_cap")
    top = source_cap + 2 if check_stabilization else source_cap
    span = BracketSpan(top).fill_to(source_cap)
    dim = span.low_dimension(degree_cap)
    n_low = sum(6 * len(slice_words(n)) for n in range(degree_cap + 1))
    stabilized = False
    if check_stabilization:
        span.fill_to(source_cap + 2)
        stabilized = span.low_dimension(degree_cap) == dim
    return dim, n_low - dim, stabilized


# ---------------------------------------------------------------------------
# Lie ideal experiments.
# ---------------------------------------------------------------------------


def lie_ideal_experiment(seed, degree_cap, rng_seed=0, generator_cap=2,
                         max_rounds=12):
    """Close a commutant element under brackets with low-degree monomials.

    Brackets whose degree exceeds the cap are dropped entirely, so this is a
    truncated experiment and the report is evidence, not proof.
    """
    if seed.is_zero():
        raise ValueError("seed must be nonzero")
    span = BracketSpan(max(seed.degree, degree_cap) + 2)
    span.fill_to(span.max_source_cap)
    in_commutant = span.contains(seed)
    if not in_commutant:
        raise ValueError("seed is not in the degree-capped commutant span")
    monos = []
    for n in range(generator_cap + 1):
        for w in slice_words(n):
            for e in range(6):
                monos.append(Element({Monomial(w[0], w[1], w[2], w[3], e): ONE}))
    # echelon over all monomials of degree <= cap, high degree first
    order = []
    for n in range(degree_cap, -1, -1):
        for w in slice_words(n):
            for e in range(6):
                order.append(Monomial(w[0], w[1], w[2], w[3], e))
    index = {m: i for i, m in enumerate(order)}
    ech = SparseEchelon()
    closure = []

    def insert(elem):
        row = {index[m]: c for m, c in elem.terms.items()}
        if ech.insert(row):
            closure.append(elem)
            return True
        return False

    insert(seed)
    frontier = [seed]
    rounds = 0
    while frontier and rounds < max_rounds:
        rounds += 1
        new = []
        for v in frontier:
            for g in monos:
                br = superbracket(g, v)
                if br.is_zero() or br.degree > degree_cap:
                    continue
                if insert(br):
                    new.append(br)
        frontier = new
    by_slice = {}
    for p in ech.pivot_rows:
        deg = order[p].degree
        by_slice[deg] = by_slice.get(deg, 0) + 1
    degree1 = all(
        ech.contains({index[Monomial(w[0], w[1], w[2], w[3], e)]: ONE})
        for w in slice_words(1) for e in range(6)) if degree_cap >= 1 else False
    return {
        "rng_seed": rng_seed,
        "degree_cap": degree_cap,
        "generator_cap": generator_cap,
        "rounds": rounds,
        "closure_dimension": ech.rank,
        "slice_dimensions": {str(k): v for k, v in sorted(by_slice.items())},
        "contains_degree1_slice": degree1,
    }


# ---------------------------------------------------------------------------
# Independence of the invariant forms on the commutant.
# ---------------------------------------------------------------------------


def form_independence_on_commutant():
    """Evaluate the two pairing differences that pin (S1, S2) on the
    commutant and check the resulting 2x2 system is nonsingular."""
    x, yp = x_elt(), yp_elt()
    v1 = str_eval(normal_mul(x, yp)) - str_eval(normal_mul(yp, x))
    q1 = q_elt(1)
    v2 = (str_eval(normal_mul(x, normal_mul(yp, q1)))
          - str_eval(normal_mul(yp, normal_mul(x, q1))))
    det = v1.s1_coef * v2.s2_coef - v2.s1_coef * v1.s2_coef
    if not det:
        raise AssertionError("invariant forms degenerate on the commutant")
    return {
        "pair_x_yp": str(v1),
        "pair_x_ypQ1": str(v2),
        "determinant": str(det),
        "only_zero_solution": True,
    }


# ---------------------------------------------------------------------------
# Random elements (deterministic in the rng).
# ---------------------------------------------------------------------------


def random_element(rng, degree, terms=3, allow_omega=True):
    """A nonzero random element of the given maximal degree."""
    out = Element.zero()
    while out.is_zero():
        picked = {}
        for _ in range(terms):
            n = rng.randint(0, degree)
            b = rng.randint(0, n)
            d = rng.randint(0, n - b)
            a = rng.randint(0, n - b - d)
            c = n - b - d - a
            e = rng.randrange(6)
            coef = CycNum(rng.randint(-3, 3),
                          rng.randint(-1, 1) if allow_omega else 0)
            if not coef:
                coef = ONE
            picked[Monomial(b, d, a, c, e)] = coef
        out = Element(picked)
    return out
