"""Monomials and monomial ideals over K[x_1, ..., x_n].

A monomial is a tuple of non-negative Python ints (its exponent vector), so
exponents never overflow. A :class:`MonomialIdeal` stores its minimal
generators in a canonical order: total degree ascending, then
lexicographically descending exponent vectors (x1 before x2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Monomial = tuple


class DimensionMismatch(ValueError):
    """Monomials or ideals living in rings with different variable counts."""


class IdealError(ValueError):
    """An operation was called on an ideal outside its domain (zero/unit)."""


def monomial(exponents: Iterable[int]) -> Monomial:
    m = tuple(int(e) for e in exponents)
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m}")
    return m


def one(n: int) -> Monomial:
    return (0,) * n


def var(i: int, n: int, power: int = 1) -> Monomial:
    """The monomial x_{i+1}^power (0-based index i)."""
    return tuple(power if k == i else 0 for k in range(n))


def degree(m: Monomial, weights: Sequence[int] | None = None) -> int:
    if weights is None:
        return sum(m)
    return sum(w * e for w, e in zip(weights, m))


def support(m: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(m) if e > 0)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b), i.e. the colon of (a) by b."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def sort_key(m: Monomial):
    """Canonical order: degree ascending, then x1 before x2 before ... ."""
    return (sum(m), tuple(-e for e in m))


def format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = [f"x{i + 1}" for i in range(len(m))]
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its canonical minimal generating set.

    Build instances with :func:`minimalize` (or :meth:`from_generators`);
    the constructor trusts that ``gens`` is already a canonical antichain.
    """

    n: int
    gens: tuple

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], n: int | None = None) -> "MonomialIdeal":
        return minimalize(gens, n)

    @property
    def q(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (one(self.n),)

    def is_proper(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def is_principal(self) -> bool:
        return len(self.gens) == 1

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def lcm(self) -> Monomial:
        out = one(self.n)
        for g in self.gens:
            out = lcm(out, g)
        return out

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def issubset(self, other: "MonomialIdeal") -> bool:
        _check_same_ring(self, other)
        return all(contains(other, g) for g in self.gens)

    def scale(self, m: Monomial) -> "MonomialIdeal":
        """The ideal m*I."""
        return MonomialIdeal(self.n, tuple(sorted((mul(g, m) for g in self.gens), key=sort_key)))

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(format_monomial(g, names) for g in self.gens) + ")"

    def __str__(self) -> str:
        return self.to_str()


def _check_same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise DimensionMismatch(f"ideals live in {I.n} and {J.n} variables")


def minimalize(monomials: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Ideal generated by ``monomials``, reduced to its minimal generators.

    ``n`` is required when ``monomials`` is empty (the zero ideal).
    """
    ms = {monomial(m) for m in monomials}
    lengths = {len(m) for m in ms}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise DimensionMismatch(f"mixed ambient lengths {sorted(lengths)}")
    if not lengths:
        raise DimensionMismatch("cannot infer the number of variables of an empty ideal")
    (n,) = lengths
    # Ascending degree: a divisor always precedes its proper multiples.
    keep = []
    for m in sorted(ms, key=sort_key):
        if not any(divides(g, m) for g in keep):
            keep.append(m)
    return MonomialIdeal(n, tuple(keep))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (one(n),))


def prime_ideal(variables: Iterable[int], n: int) -> MonomialIdeal:
    return minimalize([var(i, n) for i in variables], n)


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != I.n:
        raise DimensionMismatch(f"monomial of length {len(m)} in a ring with {I.n} variables")
    return any(divides(g, m) for g in I.gens)


def colon(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """(I : m) = ({g / gcd(g, m) : g in G(I)})."""
    if len(m) != I.n:
        raise DimensionMismatch(f"monomial of length {len(m)} in a ring with {I.n} variables")
    if I.is_zero():
        raise IdealError("colon of the zero ideal")
    return minimalize((quotient(g, m) for g in I.gens), I.n)


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return minimalize(I.gens + J.gens, I.n)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return minimalize((lcm(a, b) for a in I.gens for b in J.gens), I.n)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return minimalize((mul(a, b) for a in I.gens for b in J.gens), I.n)


def gcd_factor(I: MonomialIdeal):
    """Split I = f*L with f = gcd(G(I)).

    Returns ``(f, L)``. For non-principal I every variable misses some
    generator of L, so ht(L) >= 2.
    """
    if not I.is_proper():
        raise IdealError("gcd_factor needs a proper nonzero ideal")
    f = I.gens[0]
    for g in I.gens[1:]:
        f = gcd(f, g)
    L = minimalize((quotient(g, f) for g in I.gens), I.n)
    return f, L


@dataclass(frozen=True)
class IncidenceMatrix:
    """n x q matrix whose columns are exponent vectors of generators."""

    rows: tuple

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def q(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def columns(self) -> tuple:
        return tuple(zip(*self.rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IncidenceMatrix":
        return cls(tuple(zip(*columns)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IncidenceMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if len({len(r) for r in rows}) > 1:
            raise DimensionMismatch("ragged matrix rows")
        return cls(rows)

    def to_ideal(self) -> MonomialIdeal:
        return minimalize(self.columns, self.n)

    def __str__(self) -> str:
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in self.rows)


def incidence_matrix(I: MonomialIdeal) -> IncidenceMatrix:
    if not I.is_proper():
        raise IdealError("the zero and unit ideals have no incidence matrix")
    return IncidenceMatrix.from_columns(I.gens)
