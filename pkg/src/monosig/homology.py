"""Multigraded Betti numbers of R/I and the invariants read off from them.

For a monomial ideal I and a multidegree a, the upper Koszul simplicial
complex K^a(I) consists of the squarefree b <= supp(a) with x^(a-b) in I;
beta_{i,a}(R/I) is the rank of its reduced homology in degree i - 2. Only
multidegrees in the lcm lattice of G(I) can carry nonzero Betti numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .decomposition import dimension_and_height
from .linalg import field_name, parse_field, rank
from .monomials import IdealError, MonomialIdeal, contains, lcm, sort_key


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces are sorted tuples of vertex indices; no faces means void."""

    vertices: frozenset
    faces: frozenset

    @property
    def is_void(self) -> bool:
        return not self.faces

    def faces_of_dim(self, d: int) -> list:
        return sorted(f for f in self.faces if len(f) == d + 1)

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-2)


def koszul_complex_at_degree(I: MonomialIdeal, a) -> SimplicialComplex:
    a = tuple(a)
    if len(a) != I.n:
        raise ValueError("multidegree length does not match the ring")
    supp = [i for i, e in enumerate(a) if e >= 1]
    faces = set()
    for k in range(len(supp) + 1):
        for face in itertools.combinations(supp, k):
            b = list(a)
            for i in face:
                b[i] -= 1
            if contains(I, b):
                faces.add(face)
    return SimplicialComplex(frozenset(supp), frozenset(faces))


def _boundary(C: SimplicialComplex, d: int):
    """Matrix of the boundary map from d-faces to (d-1)-faces."""
    rows_faces = C.faces_of_dim(d - 1)
    cols = C.faces_of_dim(d)
    index = {f: k for k, f in enumerate(rows_faces)}
    mat = [[0] * len(cols) for _ in rows_faces]
    for j, face in enumerate(cols):
        for k in range(len(face)):
            sub = face[:k] + face[k + 1:]
            mat[index[sub]][j] = -1 if k % 2 else 1
    return mat


def reduced_homology(C: SimplicialComplex, field=0) -> dict:
    """Nonzero ranks of reduced homology, keyed by degree (>= -1)."""
    char = parse_field(field)
    if C.is_void:
        return {}
    top = C.dimension
    counts = {d: len(C.faces_of_dim(d)) for d in range(-1, top + 1)}
    ranks = {d: rank(_boundary(C, d), char) if counts[d] and counts[d - 1] else 0
             for d in range(0, top + 1)}
    out = {}
    for d in range(-1, top + 1):
        h = counts[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def reduced_homology_rank(C: SimplicialComplex, i: int, field=0) -> int:
    if i < -1:
        raise ValueError("reduced homology starts in degree -1")
    return reduced_homology(C, field).get(i, 0)


def lcm_lattice(I: MonomialIdeal) -> list:
    """lcms of all nonempty subsets of G(I)."""
    seen = set(I.gens)
    frontier = list(I.gens)
    while frontier:
        new = []
        for m in frontier:
            for g in I.gens:
                l = lcm(m, g)
                if l not in seen:
                    seen.add(l)
                    new.append(l)
        frontier = new
    return sorted(seen, key=sort_key)


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,a}(R/I) keyed by (i, a); beta_{0,0} = 1 is included."""

    n: int
    entries: dict
    field: int = 0

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    def totals(self) -> list:
        return [self.total(i) for i in range(self.pd + 1)]

    def graded(self, weights=None) -> dict:
        """Coarse table b_{i,j} with j the (weighted) degree of a."""
        out: dict = {}
        for (i, a), b in self.entries.items():
            j = sum(a) if weights is None else sum(w * e for w, e in zip(weights, a))
            out[(i, j)] = out.get((i, j), 0) + b
        return out

    def regularity(self, weights=None) -> int:
        return max(j - i for (i, j) in self.graded(weights))

    @property
    def type(self) -> int:
        return self.total(self.pd)

    def __str__(self) -> str:
        g = self.graded()
        pd = self.pd
        reg = self.regularity()
        lines = ["      " + " ".join(f"{i:>4}" for i in range(pd + 1))]
        for r in range(reg + 1):
            cells = [g.get((i, i + r), 0) for i in range(pd + 1)]
            lines.append(f"{r:>4}: " + " ".join(f"{c:>4}" if c else "   ." for c in cells))
        lines.append("total " + " ".join(f"{self.total(i):>4}" for i in range(pd + 1)))
        return "\n".join(lines)


@lru_cache(maxsize=8192)
def _betti_entries(I: MonomialIdeal, char: int) -> tuple:
    entries = [((0, (0,) * I.n), 1)]
    for a in lcm_lattice(I):
        for d, h in reduced_homology(koszul_complex_at_degree(I, a), char).items():
            entries.append(((d + 2, a), h))
    return tuple(entries)


def betti_table(I: MonomialIdeal, field=0) -> BettiTable:
    if not I.is_proper():
        raise IdealError("Betti numbers need a proper nonzero ideal")
    char = parse_field(field)
    return BettiTable(I.n, dict(_betti_entries(I, char)), char)


@dataclass(frozen=True)
class HomologicalInvariants:
    n: int
    height: int
    dim: int
    pd: int
    depth: int
    reg: int
    type: int
    cm: bool
    gorenstein: bool
    reg_weighted: int | None = None
    field: int = 0

    def as_dict(self) -> dict:
        d = {k: getattr(self, k) for k in (
            "n", "height", "dim", "depth", "pd", "reg", "reg_weighted",
            "type", "cm", "gorenstein")}
        d["field"] = field_name(self.field)
        return d


def homological_invariants(I: MonomialIdeal, field=0, weights=None, table: BettiTable | None = None):
    """depth, pd, dim, reg, type and the Cohen-Macaulay/Gorenstein verdicts of R/I."""
    if weights is not None:
        weights = tuple(int(w) for w in weights)
        if len(weights) != I.n or any(w < 1 for w in weights):
            raise ValueError("weights must be n positive integers")
    B = table if table is not None else betti_table(I, field)
    ht, dim = dimension_and_height(I)
    pd = B.pd
    depth = I.n - pd
    cm = depth == dim
    t = B.type
    return HomologicalInvariants(
        n=I.n, height=ht, dim=dim, pd=pd, depth=depth,
        reg=B.regularity(), type=t, cm=cm, gorenstein=cm and t == 1,
        reg_weighted=None if weights is None else B.regularity(weights),
        field=B.field,
    )


def depth(I: MonomialIdeal, field=0) -> int:
    return I.n - betti_table(I, field).pd


def regularity(I: MonomialIdeal, field=0) -> int:
    return betti_table(I, field).regularity()


def is_cohen_macaulay(I: MonomialIdeal, field=0) -> bool:
    return homological_invariants(I, field).cm


def is_gorenstein(I: MonomialIdeal, field=0) -> bool:
    return homological_invariants(I, field).gorenstein
