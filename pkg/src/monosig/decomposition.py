"""Irreducible decomposition, associated primes, height and dimension."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .monomials import (
    IdealError,
    MonomialIdeal,
    add,
    intersect,
    minimalize,
    prime_ideal,
    unit_ideal,
    var,
)


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """The prime generated by the variables with the given 0-based indices."""

    variables: tuple

    @classmethod
    def of(cls, variables) -> "MonomialPrime":
        return cls(tuple(sorted(set(variables))))

    @property
    def height(self) -> int:
        return len(self.variables)

    def ideal(self, n: int) -> MonomialIdeal:
        return prime_ideal(self.variables, n)

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i + 1}" for i in self.variables) + ")"


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """(x_{i1}^{e1}, ..., x_{ik}^{ek}) stored as sorted (index, exponent) pairs."""

    powers: tuple

    @property
    def radical(self) -> MonomialPrime:
        return MonomialPrime(tuple(i for i, _ in self.powers))

    def ideal(self, n: int) -> MonomialIdeal:
        return minimalize([var(i, n, e) for i, e in self.powers], n)

    def contains_component(self, other: "IrreducibleComponent") -> bool:
        mine = dict(self.powers)
        return all(i in mine and mine[i] <= e for i, e in other.powers)

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in self.powers) + ")"


def _require_proper(I: MonomialIdeal) -> None:
    if not I.is_proper():
        raise IdealError("need a proper nonzero monomial ideal")


def _split(I: MonomialIdeal, out: set, seen: set) -> None:
    if I.gens in seen:
        return
    seen.add(I.gens)
    for g in I.gens:
        supp = [i for i, e in enumerate(g) if e > 0]
        if len(supp) >= 2:
            i = supp[0]
            pure = var(i, I.n, g[i])
            rest = g[:i] + (0,) + g[i + 1:]
            _split(add(I, minimalize([pure], I.n)), out, seen)
            _split(add(I, minimalize([rest], I.n)), out, seen)
            return
    # Only pure powers remain, at most one per variable.
    out.add(IrreducibleComponent(tuple(sorted((i, e) for g in I.gens for i, e in enumerate(g) if e))))


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """Irredundant irreducible components of I, sorted.

    Splits on a generator x^a with two or more variables,
    I = (I, x_i^{a_i}) cap (I, x^a / x_i^{a_i}), until only pure powers
    remain. An irreducible monomial ideal containing an intersection of
    monomial ideals contains one of them, so dropping every component that
    contains another leaves an irredundant decomposition.
    """
    _require_proper(I)
    return list(_decompose(I))


@lru_cache(maxsize=8192)
def _decompose(I: MonomialIdeal) -> tuple:
    found: set = set()
    _split(I, found, set())
    comps = sorted(found)
    return tuple(
        c for c in comps
        if not any(o != c and c.contains_component(o) for o in comps)
    )


def intersect_components(components, n: int) -> MonomialIdeal:
    return reduce(intersect, (c.ideal(n) for c in components), unit_ideal(n))


def associated_primes(I: MonomialIdeal) -> list:
    """Ass(I): radicals of the irredundant irreducible components."""
    return sorted({c.radical for c in irreducible_decomposition(I)}, key=lambda P: (P.height, P.variables))


def minimal_primes(I: MonomialIdeal) -> list:
    ass = associated_primes(I)
    return [P for P in ass if not any(set(Q.variables) < set(P.variables) for Q in ass)]


def height(I: MonomialIdeal) -> int:
    if I.is_unit():
        raise IdealError("the unit ideal has no height")
    if I.is_zero():
        return 0
    return min(P.height for P in associated_primes(I))


def dimension_and_height(I: MonomialIdeal):
    """(ht(I), dim(R/I))."""
    h = height(I)
    return h, I.n - h


def is_unmixed(I: MonomialIdeal) -> bool:
    heights = {P.height for P in associated_primes(I)}
    return len(heights) == 1
