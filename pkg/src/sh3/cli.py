"""Command line interface.

Subcommands: verify, str, gram, center, commutant, certificate, dunkl-check.
Every command prints a JSON report (CSV available for gram) that embeds the
command line, a format version and the rng seed, so runs are reproducible
byte for byte apart from the timing field.

Exit codes: 0 success, 1 verification failure, 2 certificate failure,
64 usage error.  The default degree guard of 6 keeps runtimes in seconds;
set SH3_MAX_DEGREE to raise it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CERTIFICATE_FAILED = 2
EXIT_USAGE = 64

FORMAT_VERSION = "1"


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _max_degree_guard():
    raw = os.environ.get("SH3_MAX_DEGREE", "6")
    try:
        return int(raw)
    except ValueError:
        raise _UsageError("SH3_MAX_DEGREE must be an integer, got %r" % raw)


def _check_degree(value):
    guard = _max_degree_guard()
    if value > guard:
        raise _UsageError(
            "degree %d exceeds the guard %d (set SH3_MAX_DEGREE to override)"
            % (value, guard))
    return value


def _report(command, inputs, results, rng_seed=None, started=None):
    doc = {
        "command": command,
        "format_version": FORMAT_VERSION,
        "inputs": inputs,
        "results": results,
        "versions": {"sh3": __version__,
                     "python": "%d.%d" % sys.version_info[:2]},
        "rng_seed": rng_seed,
    }
    if started is not None:
        doc["elapsed_ms"] = int((time.monotonic() - started) * 1000)
    return doc


def _parse_nu_list(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if part:
            out.append(Fraction(part))
    return out or [Fraction(0)]


def _parse_params(text):
    if text == "symbolic":
        return "symbolic"
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise _UsageError("--params expects 'S1,S2' or 'symbolic'")
    return (Fraction(parts[0]), Fraction(parts[1]))


def build_parser():
    p = _ArgumentParser(prog="sh3", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="run the relation suites")
    v.add_argument("--suite", choices=["all", "core", "sl2", "dunkl"],
                   default="all")
    v.add_argument("--max-degree", type=int, default=4)
    v.add_argument("--nu", default="0,1/2",
                   help="comma separated couplings for the dunkl suite")

    s = sub.add_parser("str", help="supertrace of an expression")
    s.add_argument("expr")
    s.add_argument("--params", default="symbolic",
                   help="'S1,S2' rationals or 'symbolic'")

    g = sub.add_parser("gram", help="Gram matrix of the invariant form")
    g.add_argument("--degree", type=int, default=1,
                   help="all basis monomials of degree <= this")
    g.add_argument("--params", default="symbolic")
    g.add_argument("--format", choices=["json", "csv"], default="json")

    c = sub.add_parser("center", help="basis of the degree-capped center")
    c.add_argument("--degree", type=int, default=4)

    k = sub.add_parser("commutant", help="codimension of the bracket span")
    k.add_argument("--degree", type=int, default=2)
    k.add_argument("--source-degree", type=int, default=None)

    t = sub.add_parser("certificate", help="simplicity certificate runs")
    t.add_argument("--expr", default=None, help="seed element expression")
    t.add_argument("--random-element-degree", type=int, default=None)
    t.add_argument("--seed", type=int, default=0, help="rng seed")
    t.add_argument("--output", default=None, help="write the trail here")
    t.add_argument("--replay", default=None,
                   help="re-verify a recorded trail instead of building one")

    d = sub.add_parser("dunkl-check", help="Dunkl representation relation report")
    d.add_argument("--nu", default="0,1/3,1/2,1")
    d.add_argument("--cap", type=int, default=4)
    return p


def _cmd_verify(args, argv):
    from .verify import run_suites
    started = time.monotonic()
    nus = _parse_nu_list(args.nu)
    _check_degree(args.max_degree)
    suites = run_suites(args.suite, max_degree=args.max_degree, nus=nus,
                        cap=max(4, args.max_degree))
    failed = []
    results = {}
    for name, checks in suites.items():
        bad = sorted(k for k, v in checks.items() if not v)
        results[name] = {"checked": len(checks), "failed": bad}
        failed.extend("%s:%s" % (name, k) for k in bad)
    doc = _report(argv, {"suite": args.suite, "max_degree": args.max_degree,
                         "nu": [str(n) for n in nus]},
                  results, started=started)
    doc["ok"] = not failed
    print(json.dumps(doc, indent=1))
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def _cmd_str(args, argv):
    from .parser import parse_element
    from .supertrace import str_eval
    started = time.monotonic()
    elem = parse_element(args.expr)
    _check_degree(max(0, elem.degree))
    value = str_eval(elem)
    params = _parse_params(args.params)
    if params == "symbolic":
        results = {"value": str(value), "s1_coef": str(value.s1_coef),
                   "s2_coef": str(value.s2_coef)}
    else:
        results = {"value": str(value.at_params(*params))}
    doc = _report(argv, {"expr": args.expr, "params": args.params},
                  results, started=started)
    print(json.dumps(doc, indent=1))
    return EXIT_OK


def _cmd_gram(args, argv):
    from .algebra import Element, Monomial
    from .sl2 import slice_words
    from .supertrace import gram
    started = time.monotonic()
    _check_degree(args.degree)
    basis = []
    labels = []
    for n in range(args.degree + 1):
        for w in slice_words(n):
            for e in range(6):
                mono = Monomial(w[0], w[1], w[2], w[3], e)
                basis.append(Element({mono: 1}))
                labels.append(mono.text())
    params = _parse_params(args.params)
    rep = gram(basis, params=params, labels=labels)
    if args.format == "csv":
        sys.stdout.write(rep.to_csv())
        return EXIT_OK
    doc = _report(argv, {"degree": args.degree, "params": args.params},
                  json.loads(rep.to_json()), started=started)
    print(json.dumps(doc, indent=1))
    return EXIT_OK


def _cmd_center(args, argv):
    from .structure import center_basis
    started = time.monotonic()
    _check_degree(args.degree)
    basis = center_basis(args.degree)
    doc = _report(argv, {"degree": args.degree},
                  {"dimension": len(basis), "basis": [str(b) for b in basis]},
                  started=started)
    print(json.dumps(doc, indent=1))
    return EXIT_OK


def _cmd_commutant(args, argv):
    from .structure import commutant_slice
    started = time.monotonic()
    _check_degree(args.degree)
    dim, codim, stabilized = commutant_slice(args.degree, args.source_degree)
    doc = _report(argv, {"degree": args.degree,
                         "source_degree": args.source_degree},
                  {"dimension": dim, "codimension": codim,
                   "stabilized": stabilized}, started=started)
    print(json.dumps(doc, indent=1))
    return EXIT_OK


def _cmd_certificate(args, argv):
    from .structure import (CertificateError, SimplicityCertificate,
                            random_element, replay_certificate,
                            simplicity_certificate)
    started = time.monotonic()
    if args.replay:
        with open(args.replay) as fh:
            cert = SimplicityCertificate.from_json(fh.read())
        try:
            replay_certificate(cert)
        except CertificateError as exc:
            doc = _report(argv, {"replay": args.replay},
                          {"replayed": False, "error": str(exc)},
                          rng_seed=cert.rng_seed, started=started)
            print(json.dumps(doc, indent=1))
            return EXIT_CERTIFICATE_FAILED
        doc = _report(argv, {"replay": args.replay},
                      {"replayed": True, "steps": len(cert.steps),
                       "final": str(cert.final)},
                      rng_seed=cert.rng_seed, started=started)
        print(json.dumps(doc, indent=1))
        return EXIT_OK
    import random as _random
    if args.expr is not None:
        from .parser import parse_element
        seed_elem = parse_element(args.expr)
        seed_desc = args.expr
    else:
        deg = args.random_element_degree
        if deg is None:
            raise _UsageError("need --expr or --random-element-degree")
        _check_degree(deg)
        seed_elem = random_element(_random.Random(args.seed), deg)
        seed_desc = "random(degree<=%d)" % deg
    _check_degree(max(0, seed_elem.degree))
    try:
        cert = simplicity_certificate(seed_elem, rng_seed=args.seed)
        replay_certificate(cert)
    except CertificateError as exc:
        doc = _report(argv, {"seed_expr": seed_desc},
                      {"ok": False, "error": str(exc)},
                      rng_seed=args.seed, started=started)
        print(json.dumps(doc, indent=1))
        return EXIT_CERTIFICATE_FAILED
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(cert.to_json())
    doc = _report(argv, {"seed_expr": seed_desc},
                  {"ok": True, "steps": len(cert.steps),
                   "final": str(cert.final),
                   "phi": cert.phi_report,
                   "written": args.output},
                  rng_seed=args.seed, started=started)
    print(json.dumps(doc, indent=1))
    return EXIT_OK


def _cmd_dunkl_check(args, argv):
    from .dunkl import dunkl_check_report
    started = time.monotonic()
    nus = _parse_nu_list(args.nu)
    rep = dunkl_check_report(nus, args.cap)
    doc = _report(argv, {"nu": [str(n) for n in nus], "cap": args.cap},
                  rep, started=started)
    print(json.dumps(doc, indent=1))
    return EXIT_OK if rep["all_passed"] else EXIT_VERIFY_FAILED


_HANDLERS = {
    "verify": _cmd_verify,
    "str": _cmd_str,
    "gram": _cmd_gram,
    "center": _cmd_center,
    "commutant": _cmd_commutant,
    "certificate": _cmd_certificate,
    "dunkl-check": _cmd_dunkl_check,
}


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        from .parser import ParseError
        try:
            return _HANDLERS[args.cmd](args, ["sh3"] + list(argv))
        except ParseError as exc:
            print("syntax error: %s" % exc, file=sys.stderr)
            return EXIT_USAGE
    except _UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
