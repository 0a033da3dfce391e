"""Plain-text ideal and matrix documents.

An ideal document is a header line ``n q`` followed by q generator lines,
each either n whitespace-separated naturals (an exponent row) or one
symbolic monomial such as ``x1*x2^2`` (``1`` is the unit monomial). A
matrix document has the header ``n q`` followed by n rows of q entries,
so columns are generators. ``#`` starts a comment; a comment of the form
``# label: <text>`` names the document that follows. Several documents may
be concatenated in one file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .monomials import IncidenceMatrix, MonomialIdeal, format_monomial, minimalize

_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")
_JSON_INT_LIMIT = 2 ** 53 - 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class IdealDocument:
    n: int
    monomials: tuple
    label: str | None = None

    def ideal(self) -> MonomialIdeal:
        return minimalize(self.monomials, self.n)


def parse_monomial(text: str, n: int | None = None, line: int = 0, column: int = 1) -> tuple:
    """Symbolic monomial ``x1*x3^2`` -> exponent tuple of length n.

    If n is None the length is the largest variable index present.
    """
    text = text.strip()
    if text == "1":
        if n is None:
            raise ParseError("cannot infer n from the monomial 1", line, column)
        return (0,) * n
    exps: dict = {}
    pos = column
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise ParseError(f"malformed factor {factor.strip()!r}", line, pos)
        k = int(m.group(1))
        if k < 1 or (n is not None and k > n):
            raise ParseError(f"variable x{k} outside x1..x{n}", line, pos)
        exps[k] = exps.get(k, 0) + (int(m.group(2)) if m.group(2) else 1)
        pos += len(factor) + 1
    size = n if n is not None else max(exps)
    return tuple(exps.get(k, 0) for k in range(1, size + 1))


def parse_ideal_string(text: str, n: int | None = None) -> MonomialIdeal:
    """``"(x1*x2, x2^2)"`` -> ideal; n defaults to the largest index used."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    items = [s for s in body.split(",") if s.strip()]
    if not items:
        if n is None:
            raise ParseError("empty ideal needs an explicit n")
        return minimalize([], n)
    if n is None:
        sizes = [len(parse_monomial(s)) for s in items if s.strip() != "1"]
        if not sizes:
            raise ParseError("cannot infer n from the unit ideal")
        n = max(sizes)
    col = 1
    mons = []
    for s in items:
        mons.append(parse_monomial(s, n, 1, col))
        col += len(s) + 1
    return minimalize(mons, n)


def _content_lines(text: str):
    """(line number, stripped content, label) for non-blank lines."""
    label = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        c = comment.strip()
        if c.lower().startswith("label:"):
            label = c[6:].strip()
        if body.strip():
            yield lineno, body.rstrip(), label
            label = None


def _naturals(body: str, lineno: int):
    out = []
    for m in re.finditer(r"\S+", body):
        tok = m.group(0)
        if not tok.isdigit():
            raise ParseError(f"expected a natural number, got {tok!r}", lineno, m.start() + 1)
        out.append(int(tok))
    return out


def _header(lines, kind: str):
    lineno, body, label = next(lines)
    vals = _naturals(body, lineno)
    if len(vals) != 2:
        raise ParseError(f"{kind} header must be 'n q'", lineno, 1)
    return lineno, vals[0], vals[1], label


def _take(lines, k: int, after: int):
    out = []
    for _ in range(k):
        try:
            out.append(next(lines))
        except StopIteration:
            raise ParseError(f"document ended early, expected {k} lines after line {after}", after, 1) from None
    return out


def _generator_line(lineno: int, body: str, n: int) -> tuple:
    stripped = body.strip()
    if re.fullmatch(r"[-+\d\s]+", stripped):
        vals = _naturals(body, lineno)
        if len(vals) != n:
            raise ParseError(f"exponent row has {len(vals)} entries, expected n={n}", lineno, 1)
        return tuple(vals)
    col = body.index(stripped[0]) + 1
    return parse_monomial(stripped, n, lineno, col)


def parse_documents(text: str) -> list:
    """All ideal documents in ``text``."""
    lines = iter(list(_content_lines(text)))
    docs = []
    while True:
        try:
            lineno, n, q, label = _header(lines, "ideal")
        except StopIteration:
            return docs
        mons = tuple(_generator_line(ln, body, n) for ln, body, _ in _take(lines, q, lineno))
        docs.append(IdealDocument(n, mons, label))


def parse_ideal(text: str) -> MonomialIdeal:
    docs = parse_documents(text)
    if len(docs) != 1:
        raise ParseError(f"expected one ideal document, found {len(docs)}")
    return docs[0].ideal()


def serialize_ideal(I: MonomialIdeal, symbolic: bool = False, label: str | None = None) -> str:
    """Canonical document; parsing it back gives the same ideal."""
    out = [f"# label: {label}"] if label else []
    out.append(f"{I.n} {I.q}")
    for g in I.gens:
        out.append(format_monomial(g) if symbolic else " ".join(str(e) for e in g))
    return "\n".join(out) + "\n"


def parse_matrices(text: str) -> list:
    """All matrix documents in ``text`` as ``(label, IncidenceMatrix)`` pairs."""
    lines = iter(list(_content_lines(text)))
    out = []
    while True:
        try:
            lineno, n, q, label = _header(lines, "matrix")
        except StopIteration:
            return out
        rows = []
        for ln, body, _ in _take(lines, n, lineno):
            vals = _naturals(body, ln)
            if len(vals) != q:
                raise ParseError(f"matrix row has {len(vals)} entries, expected q={q}", ln, 1)
            rows.append(vals)
        out.append((label, IncidenceMatrix.from_rows(rows)))


def parse_matrix(text: str) -> IncidenceMatrix:
    mats = parse_matrices(text)
    if len(mats) != 1:
        raise ParseError(f"expected one matrix document, found {len(mats)}")
    return mats[0][1]


def serialize_matrix(A: IncidenceMatrix) -> str:
    return f"{A.n} {A.q}\n" + "".join(" ".join(str(x) for x in r) + "\n" for r in A.rows)


def json_safe(obj):
    """Recursively render ints beyond 2^53 - 1 as decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _JSON_INT_LIMIT else obj
    if isinstance(obj, dict):
        return {str(k): json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_safe(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(json_safe(obj), indent=2, sort_keys=False)
