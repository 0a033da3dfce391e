"""Machine-readable and text reports used by the command-line tool.

JSON reports share one top-level shape::

    {"ideal": [...], "signature": [...], "invariants": {...},
     "ass": [...], "trace": [...], ...}

``ideal`` and ``signature`` are lists of symbolic generators (``["1"]`` for
the unit ideal), ``ass`` lists primes as strings such as ``"(x1, x3)"`` and
``trace`` lists one object per gap-closing step.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .decomposition import associated_primes, is_unmixed
from .homology import homological_invariants
from .io import ParseError, parse_documents, parse_matrices
from .linalg import field_name, parse_field
from .monomials import IdealError, IncidenceMatrix, MonomialIdeal, format_monomial, gcd_factor, incidence_matrix
from .signature import full_polarization_trace, has_height_two, signature_matrix, signature_of_ideal
from .vnumber import v_number

HEIGHT_ONE_NOTE = ("height one: I = f*L with f = {f}; signature and trace are computed "
                   "for L, depth(R/I) = depth(R/L) and reg(R/I) = reg(R/L) + {deg}")
PRINCIPAL_NOTE = "sgn(I) = R"


def generators(I: MonomialIdeal, names=None) -> list:
    if I.is_zero():
        return []
    return [format_monomial(g, names) for g in I.gens]


def _route(I: MonomialIdeal):
    """(ideal the trace runs on, note or None)."""
    if I.is_principal() or I.is_unit():
        return None, PRINCIPAL_NOTE
    if not has_height_two(I):
        f, L = gcd_factor(I)
        return L, HEIGHT_ONE_NOTE.format(f=format_monomial(f), deg=sum(f))
    return I, None


def _step_dict(s, char) -> dict:
    n = s.ideal.n
    x = f"x{s.variable + 1}"
    names = [f"x{i + 1}" for i in range(n)] + ["x0"]
    return {
        "variable": x,
        "p": s.p,
        "q": list(s.qs),
        "q1": s.q1,
        "substitution": f"x0 -> {x}^{s.weight}" if s.weight > 1 else f"x0 -> {x}",
        "polarized": generators(s.polarized, names),
        "shifted": generators(s.shifted),
        "reg": [homological_invariants(s.ideal, char).reg, homological_invariants(s.shifted, char).reg],
        "v": [v_number(s.ideal), v_number(s.shifted)],
    }


def trace_report(I: MonomialIdeal, field=0) -> dict:
    """Step table of the gap-closing recursion plus the final polarization."""
    char = parse_field(field)
    J, note = _route(I)
    out = {"ideal": generators(I), "note": note, "trace": []}
    if J is None:
        out["signature"] = ["1"]
        return out
    t = full_polarization_trace(J)
    out["trace"] = [_step_dict(s, char) for s in t.steps]
    out["signature"] = generators(t.signature)
    out["polarized"] = generators(t.polarized, t.variable_names())
    out["polarized_n"] = t.polarized.n
    out["weights"] = list(t.weights)
    out["degree_weights"] = list(t.degree_weights())
    if t.r:
        inv = homological_invariants(t.polarized, char)
        out["polarized_invariants"] = {k: getattr(inv, k) for k in ("dim", "depth", "pd", "reg")}
    return out


def invariant_report(I: MonomialIdeal, field=0, weights=None, trace: bool = True) -> dict:
    """Invariants of R/I and of R/sgn(I), Ass(I), v(I) and the trace."""
    char = parse_field(field)
    if not I.is_proper():
        raise IdealError("invariants need a proper nonzero ideal")
    inv = homological_invariants(I, char, weights)
    S = signature_of_ideal(I)
    out = {
        "ideal": generators(I),
        "signature": generators(S),
        "invariants": inv.as_dict(),
        "ass": [str(P) for P in associated_primes(I)],
        "trace": [],
    }
    out["invariants"]["v"] = v_number(I)
    out["invariants"]["unmixed"] = is_unmixed(I)
    if S.is_proper():
        sinv = homological_invariants(S, char)
        out["signature_invariants"] = sinv.as_dict()
        out["signature_invariants"]["v"] = v_number(S)
    out["field"] = field_name(char)
    J, note = _route(I)
    out["note"] = note
    if trace and J is not None:
        out["trace"] = trace_report(J, char)["trace"]
    return out


def check_report(report: dict) -> bool:
    """pd + depth = n and cm iff depth = dim."""
    inv = report["invariants"]
    return inv["pd"] + inv["depth"] == inv["n"] and inv["cm"] == (inv["depth"] == inv["dim"])


def render_invariants(report: dict) -> str:
    inv = report["invariants"]
    lines = [
        "I      = (" + ", ".join(report["ideal"]) + ")",
        "sgn(I) = (" + ", ".join(report["signature"]) + ")",
    ]
    if report.get("note"):
        lines.append(f"note: {report['note']}")
    lines.append(f"field  = {inv['field']}")
    keys = ("n", "height", "dim", "depth", "pd", "reg", "v", "type", "cm", "gorenstein", "unmixed")
    lines.append("R/I    : " + "  ".join(f"{k}={inv[k]}" for k in keys))
    if inv.get("reg_weighted") is not None:
        lines.append(f"         weighted reg={inv['reg_weighted']}")
    s = report.get("signature_invariants")
    if s:
        lines.append("R/sgn I: " + "  ".join(f"{k}={s[k]}" for k in keys if k in s))
    lines.append("Ass(I) = {" + ", ".join(report["ass"]) + "}")
    return "\n".join(lines)


def render_trace(report: dict) -> str:
    lines = ["I = (" + ", ".join(report["ideal"]) + ")"]
    if report.get("note"):
        lines.append(f"note: {report['note']}")
    if report["signature"] == ["1"]:
        return "\n".join(lines)
    for k, s in enumerate(report["trace"], 1):
        lines.append(f"step {k}: {s['variable']}  p={s['p']}  q=({', '.join(map(str, s['q']))})  {s['substitution']}")
        lines.append("  I_pol = (" + ", ".join(s["polarized"]) + ")")
        lines.append("  I_sft = (" + ", ".join(s["shifted"]) + ")")
        lines.append(f"  reg(I), reg(I_sft) = {s['reg'][0]}, {s['reg'][1]}   v(I), v(I_sft) = {s['v'][0]}, {s['v'][1]}")
    if not report["trace"]:
        lines.append("no gaps: every row is already tight")
    lines.append("sgn(I) = (" + ", ".join(report["signature"]) + ")")
    lines.append(f"full I_pol in {report['polarized_n']} variables = (" + ", ".join(report["polarized"]) + ")")
    lines.append("weighted degrees of z: (" + ", ".join(map(str, report["weights"])) + ")")
    p = report.get("polarized_invariants")
    if p:
        lines.append("S/I_pol: " + "  ".join(f"{k}={v}" for k, v in p.items()))
    return "\n".join(lines)


# -- classification -----------------------------------------------------------

@dataclass
class ClassifyEntry:
    label: str
    ideal: MonomialIdeal | None = None
    signature: MonomialIdeal | None = None
    signature_matrix: IncidenceMatrix | None = None
    cm: bool | None = None
    gorenstein: bool | None = None
    warnings: list = field(default_factory=list)
    error: str | None = None

    def as_dict(self) -> dict:
        if self.error:
            return {"label": self.label, "error": self.error}
        return {
            "label": self.label,
            "ideal": generators(self.ideal),
            "signature_matrix": [list(r) for r in self.signature_matrix.rows],
            "signature": generators(self.signature),
            "cm": self.cm,
            "gorenstein": self.gorenstein,
            "warnings": self.warnings,
        }


def classify_ideal(label: str, I: MonomialIdeal, field=0) -> ClassifyEntry:
    e = ClassifyEntry(label, ideal=I)
    try:
        if not I.is_proper() or I.is_principal():
            raise IdealError("entry must be a non-principal proper ideal")
        S = signature_of_ideal(I)
        e.signature = S
        e.signature_matrix = signature_matrix(incidence_matrix(I))
        if S != I:
            e.warnings.append("ideal differs from its signature; verdict is for sgn(I)")
        inv = homological_invariants(S, field)
        e.cm, e.gorenstein = inv.cm, inv.gorenstein
    except (IdealError, ValueError) as exc:
        e.error = str(exc)
    return e


def _classify_job(args):
    label, I, error, char = args
    if error is not None:
        return ClassifyEntry(label, error=error)
    return classify_ideal(label, I, char)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("MONOSIG_WORKERS", "1")))
    except ValueError:
        return 1


def classify(entries, field=0, filter: str | None = None) -> dict:
    """Classify ``(label, ideal-or-error)`` entries, keeping input order.

    Each entry is either ``(label, MonomialIdeal)``, ``(label, IncidenceMatrix)``
    or ``(label, str)`` where the string is a parse error to report.
    """
    if filter not in (None, "cm", "gorenstein"):
        raise ValueError("filter must be cm or gorenstein")
    char = parse_field(field)
    jobs = []
    for label, obj in entries:
        if isinstance(obj, str):
            jobs.append((label, None, obj, char))
        elif isinstance(obj, IncidenceMatrix):
            jobs.append((label, obj.to_ideal(), None, char))
        else:
            jobs.append((label, obj, None, char))
    nw = _workers()
    if nw > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(nw) as ex:
            results = list(ex.map(_classify_job, jobs))
    else:
        results = [_classify_job(j) for j in jobs]
    good = [r for r in results if not r.error]
    summary = {
        "entries": len(results),
        "errors": sum(1 for r in results if r.error),
        "self_signature": sum(1 for r in good if r.signature == r.ideal),
        "cm": sum(1 for r in good if r.cm),
        "gorenstein": sum(1 for r in good if r.gorenstein),
        "distinct_cm_signatures": len({r.signature for r in good if r.cm}),
    }
    if filter == "cm":
        shown = [r for r in results if r.error or r.cm]
    elif filter == "gorenstein":
        shown = [r for r in results if r.error or r.gorenstein]
    else:
        shown = results
    return {"field": field_name(char), "filter": filter, "summary": summary,
            "entries": [r.as_dict() for r in shown]}


def entries_from_text(text: str, kind: str = "ideal") -> list:
    """Split a multi-document file into entries; a bad document becomes an error entry.

    Documents are separated by blank lines.
    """
    blocks, cur = [], []
    for line in text.splitlines():
        if line.strip():
            cur.append(line)
        elif cur:
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    out = []
    for k, block in enumerate(blocks, 1):
        chunk = "\n".join(block) + "\n"
        label = f"#{k}"
        try:
            if kind == "matrix":
                for lab, A in parse_matrices(chunk):
                    out.append((lab or label, A))
            else:
                for doc in parse_documents(chunk):
                    out.append((doc.label or label, doc.ideal()))
        except (ParseError, ValueError) as exc:
            out.append((label, f"parse error: {exc}"))
    return out


def render_classify(report: dict) -> str:
    lines = []
    for e in report["entries"]:
        if "error" in e:
            lines.append(f"{e['label']}: ERROR {e['error']}")
            continue
        verdict = "Gorenstein" if e["gorenstein"] else ("CM" if e["cm"] else "not CM")
        rows = " / ".join(" ".join(map(str, r)) for r in e["signature_matrix"])
        lines.append(f"{e['label']}: sgn = (" + ", ".join(e["signature"]) + f")  [{rows}]  {verdict}")
        for w in e["warnings"]:
            lines.append(f"  warning: {w}")
    s = report["summary"]
    lines.append(f"summary: {s['entries']} entries, {s['errors']} errors, {s['self_signature']} self-signature, "
                 f"{s['cm']} CM ({s['distinct_cm_signatures']} distinct), {s['gorenstein']} Gorenstein")
    return "\n".join(lines)


run_trace = trace_report
run_classify = classify
