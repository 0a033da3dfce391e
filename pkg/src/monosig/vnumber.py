"""v-number of a monomial ideal by degree-ordered search.

A witness for an associated prime P is a monomial w with (I : w) = P. Since
(I : x^a) does not change once a_i exceeds the largest i-th exponent among
the generators, it suffices to search the box bounded by lcm(G(I)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import MonomialPrime, associated_primes
from .monomials import IdealError, MonomialIdeal, colon, contains


@dataclass(frozen=True)
class VWitness:
    prime: MonomialPrime
    witness: tuple
    degree: int


def box_monomials(bounds):
    """Monomials x^a with 0 <= a <= bounds in canonical monomial order."""
    bounds = tuple(bounds)

    def rec(k, d):
        if k == len(bounds) - 1:
            if d <= bounds[k]:
                yield (d,)
            return
        for e in range(min(d, bounds[k]), -1, -1):
            for rest in rec(k + 1, d - e):
                yield (e,) + rest

    if not bounds:
        yield ()
        return
    for d in range(sum(bounds) + 1):
        yield from rec(0, d)


def prime_of_colon(I: MonomialIdeal, w) -> MonomialPrime | None:
    """The prime (I : w) if that colon is generated by variables, else None."""
    if contains(I, w):
        return None
    C = colon(I, w)
    if all(sum(g) == 1 for g in C.gens):
        return MonomialPrime.of(g.index(1) for g in C.gens)
    return None


def _require_proper(I: MonomialIdeal) -> None:
    if not I.is_proper():
        raise IdealError("the v-number needs a proper nonzero ideal")


def v_witness_for_prime(I: MonomialIdeal, prime: MonomialPrime) -> VWitness:
    _require_proper(I)
    if prime not in associated_primes(I):
        raise IdealError(f"{prime} is not an associated prime of {I}")
    for w in box_monomials(I.lcm()):
        if prime_of_colon(I, w) == prime:
            return VWitness(prime, w, sum(w))
    raise AssertionError("associated prime without a witness in the lcm box")


def v_witnesses(I: MonomialIdeal) -> dict:
    """Minimum-degree witness for every associated prime."""
    _require_proper(I)
    todo = set(associated_primes(I))
    found = {}
    for w in box_monomials(I.lcm()):
        P = prime_of_colon(I, w)
        if P in todo:
            found[P] = VWitness(P, w, sum(w))
            todo.discard(P)
            if not todo:
                break
    return dict(sorted(found.items()))


def v_number(I: MonomialIdeal) -> int:
    """min{deg w : (I : w) is an associated prime of I}."""
    _require_proper(I)
    for w in box_monomials(I.lcm()):
        if prime_of_colon(I, w) is not None:
            return sum(w)
    raise AssertionError("no witness found in the lcm box")
