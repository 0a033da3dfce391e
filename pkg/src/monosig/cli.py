"""Command-line interface: ``monosig <command> ...``.

Ideals are given either as a string such as ``"(x1*x2, x2^2)"`` (with
``-n`` when trailing variables do not occur), as a path to an ideal
document, or as ``-`` for a document on standard input.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import catalog
from .decomposition import irreducible_decomposition
from .io import ParseError, dumps, parse_ideal, parse_ideal_string, serialize_ideal, serialize_matrix
from .linalg import parse_field
from .monomials import IdealError, format_monomial, incidence_matrix
from .reports import (
    classify,
    entries_from_text,
    generators,
    invariant_report,
    render_classify,
    render_invariants,
    render_trace,
    trace_report,
)
from .signature import enumerate_signature_matrices, signature_matrix, signature_of_ideal
from .verify import THEOREMS, Bounds, run_verify
from .vnumber import v_witnesses


class UsageError(Exception):
    pass


def _read_ideal(args):
    src = args.ideal
    if src == "-":
        return parse_ideal(sys.stdin.read())
    if os.path.isfile(src):
        with open(src) as fh:
            return parse_ideal(fh.read())
    return parse_ideal_string(src, args.n)


def _weights(text):
    if text is None:
        return None
    try:
        return tuple(int(w) for w in text.split(","))
    except ValueError:
        raise UsageError(f"--weights expects comma-separated integers, got {text!r}") from None


def _emit(args, obj, text):
    print(dumps(obj) if args.json else text)


def cmd_sgn(args):
    I = _read_ideal(args)
    S = signature_of_ideal(I)
    out = {"ideal": generators(I), "signature": generators(S)}
    if I.is_proper():
        A = signature_matrix(incidence_matrix(I))
        out["signature_matrix"] = [list(r) for r in A.rows]
    if args.document:
        print(serialize_ideal(S, symbolic=True), end="")
        return 0
    text = "sgn(I) = (" + ", ".join(out["signature"]) + ")"
    if "signature_matrix" in out and S.q > 0:
        text += "\n" + serialize_matrix(signature_matrix(incidence_matrix(I))).rstrip()
    _emit(args, out, text)
    return 0


def cmd_trace(args):
    report = trace_report(_read_ideal(args), args.field)
    _emit(args, report, render_trace(report))
    return 0


def cmd_invariants(args):
    I = _read_ideal(args)
    w = _weights(args.weights)
    if w is not None and len(w) != I.n:
        raise UsageError(f"--weights needs {I.n} entries")
    report = invariant_report(I, args.field, w, trace=not args.no_trace)
    _emit(args, report, render_invariants(report))
    return 0


def cmd_ass(args):
    I = _read_ideal(args)
    comps = irreducible_decomposition(I)
    primes = sorted({c.radical for c in comps}, key=lambda P: (P.height, P.variables))
    out = {"ideal": generators(I), "components": [str(c) for c in comps], "ass": [str(P) for P in primes]}
    text = "\n".join(["components: " + " cap ".join(out["components"]),
                      "Ass(I) = {" + ", ".join(out["ass"]) + "}"])
    _emit(args, out, text)
    return 0


def cmd_vnum(args):
    I = _read_ideal(args)
    ws = v_witnesses(I)
    rows = [{"prime": str(P), "witness": format_monomial(w.witness), "degree": w.degree} for P, w in ws.items()]
    v = min(w.degree for w in ws.values())
    out = {"ideal": generators(I), "v": v, "witnesses": rows}
    text = "\n".join([f"{r['prime']}: (I : {r['witness']}), degree {r['degree']}" for r in rows] + [f"v(I) = {v}"])
    _emit(args, out, text)
    return 0


_BUILTIN = {
    "matrices3x3": lambda: [(f"M{k}", A) for k, A in enumerate(catalog.matrices_3x3(), 1)],
    "cm3x3": lambda: [(f"a{k}", I) for k, I in enumerate(catalog.cm_ideals("3x3"), 1)],
    "cm4x3": lambda: [(f"b{k}", I) for k, I in enumerate(catalog.cm_ideals("4x3"), 1)],
    "cm3x4": lambda: [(f"c{k}", I) for k, I in enumerate(catalog.cm_ideals("3x4"), 1)],
}


def cmd_classify(args):
    entries = []
    for name in args.builtin or []:
        keys = list(_BUILTIN) if name == "all" else [name]
        for k in keys:
            entries.extend(_BUILTIN[k]())
    for path in args.files:
        text = sys.stdin.read() if path == "-" else open(path).read()
        entries.extend(entries_from_text(text, "matrix" if args.matrices else "ideal"))
    if not entries:
        raise UsageError("nothing to classify; give files or --builtin")
    report = classify(entries, args.field, args.filter)
    _emit(args, report, render_classify(report))
    return 2 if report["summary"]["errors"] else 0


def cmd_verify(args):
    bounds = Bounds(n_max=args.n_max, q_max=args.q_max, exp_max=args.exp_max, n_min=args.n_min)
    names = THEOREMS if args.theorem == "all" else [args.theorem]
    reports = [run_verify(t, args.count, bounds, args.seed, args.field) for t in names]
    if args.json:
        print(dumps([r.as_dict() for r in reports]))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures:
                print(f"  case {f.case}: " + "; ".join(f.messages))
                print("    " + f.document.rstrip().replace("\n", "\n    "))
    return 0 if all(r.ok for r in reports) else 1


def cmd_enumerate(args):
    mats = sorted(enumerate_signature_matrices(args.n, args.q), key=lambda A: A.rows)
    if args.json:
        print(dumps({"n": args.n, "q": args.q, "count": len(mats), "matrices": [[list(r) for r in A.rows] for A in mats]}))
    else:
        for A in mats:
            print(serialize_matrix(A))
        print(f"# {len(mats)} signature matrices of size {args.n}x{args.q}")
    return 0


def _field(text):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--field", type=_field, default=0, help="q (rationals, default) or p=<prime>")

    ideal = argparse.ArgumentParser(add_help=False)
    ideal.add_argument("ideal", help="ideal string, document path, or - for stdin")
    ideal.add_argument("-n", type=int, default=None, help="number of variables for ideal strings")

    p = argparse.ArgumentParser(prog="monosig", description="Signatures and invariants of monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sgn", parents=[common, ideal], help="signature ideal and matrix")
    s.add_argument("--document", action="store_true", help="print sgn(I) as an ideal document")
    s.set_defaults(func=cmd_sgn)

    s = sub.add_parser("trace", parents=[common, ideal], help="gap-closing steps from I to sgn(I)")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("invariants", parents=[common, ideal], help="depth, reg, v, CM and friends")
    s.add_argument("--weights", help="comma-separated variable degrees for a weighted regularity")
    s.add_argument("--no-trace", action="store_true", help="omit the step trace from JSON")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("ass", parents=[common, ideal], help="irreducible components and associated primes")
    s.set_defaults(func=cmd_ass)

    s = sub.add_parser("vnum", parents=[common, ideal], help="v-number with a witness per associated prime")
    s.set_defaults(func=cmd_vnum)

    s = sub.add_parser("classify", parents=[common], help="CM/Gorenstein verdicts for lists of ideals")
    s.add_argument("files", nargs="*", help="documents separated by blank lines")
    s.add_argument("--matrices", action="store_true", help="files hold matrix documents")
    s.add_argument("--builtin", action="append", choices=list(_BUILTIN) + ["all"],
                   help="classify a built-in list (repeatable)")
    s.add_argument("--filter", choices=["cm", "gorenstein"])
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", parents=[common], help="randomized checks of the invariance results")
    s.add_argument("theorem", choices=list(THEOREMS) + ["all"])
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n-min", type=int, default=2)
    s.add_argument("--n-max", type=int, default=4)
    s.add_argument("--q-max", type=int, default=5)
    s.add_argument("--exp-max", type=int, default=6)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", parents=[common], help="all n x q signature matrices")
    s.add_argument("n", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, IdealError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
