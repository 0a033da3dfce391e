import itertools

import pytest
from hypothesis import given, settings

from monosig.decomposition import (
    IrreducibleComponent,
    MonomialPrime,
    associated_primes,
    dimension_and_height,
    height,
    intersect_components,
    irreducible_decomposition,
    is_unmixed,
    minimal_primes,
)
from monosig.io import parse_ideal_string
from monosig.monomials import IdealError, colon, contains, unit_ideal, zero_ideal

from conftest import box, ideals


def brute_ass(I):
    """Primes (I : w) = P found by scanning the lcm box."""
    out = set()
    for w in box(I.lcm()):
        if contains(I, w):
            continue
        C = colon(I, w)
        if all(sum(g) == 1 for g in C.gens):
            out.add(MonomialPrime.of(g.index(1) for g in C.gens))
    return out


def brute_height(I):
    """Smallest set of variables meeting the support of every generator."""
    supports = [{i for i, e in enumerate(g) if e} for g in I.gens]
    for k in range(I.n + 1):
        for S in itertools.combinations(range(I.n), k):
            if all(s & set(S) for s in supports):
                return k


def test_example_decomposition():
    I = parse_ideal_string("x1*x2*x3, x1*x2^2")
    comps = irreducible_decomposition(I)
    assert [str(c) for c in comps] == ["(x1)", "(x2)", "(x2^2, x3)"]
    assert [str(P) for P in associated_primes(I)] == ["(x1)", "(x2)", "(x2, x3)"]
    assert [str(P) for P in minimal_primes(I)] == ["(x1)", "(x2)"]
    assert not is_unmixed(I)
    assert dimension_and_height(I) == (1, 2)


def test_height_edge_cases():
    assert height(zero_ideal(3)) == 0
    with pytest.raises(IdealError):
        height(unit_ideal(3))
    with pytest.raises(IdealError):
        irreducible_decomposition(unit_ideal(2))


def test_component_containment():
    a = IrreducibleComponent(((0, 2), (1, 1)))
    b = IrreducibleComponent(((0, 3),))
    assert a.contains_component(b)
    assert not b.contains_component(a)


@settings(max_examples=80, deadline=None)
@given(ideals(n_max=4, exp_max=4))
def test_components_intersect_back_irredundantly(I):
    comps = irreducible_decomposition(I)
    assert intersect_components(comps, I.n) == I
    for k in range(len(comps)):
        rest = comps[:k] + comps[k + 1:]
        if rest:
            assert intersect_components(rest, I.n) != I


@settings(max_examples=60, deadline=None)
@given(ideals(n_max=3, exp_max=3))
def test_ass_matches_colon_scan(I):
    assert set(associated_primes(I)) == brute_ass(I)


@settings(max_examples=80)
@given(ideals(n_max=5, exp_max=3))
def test_height_matches_transversal(I):
    assert height(I) == brute_height(I)
