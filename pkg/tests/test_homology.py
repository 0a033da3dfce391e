import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from monosig.homology import (
    SimplicialComplex,
    betti_table,
    homological_invariants,
    koszul_complex_at_degree,
    lcm_lattice,
    reduced_homology,
)
from monosig.io import parse_ideal_string
from monosig.linalg import field_name, parse_field, rank
from monosig.monomials import add, colon, minimalize, var
from monosig.signature import signature_of_ideal

from conftest import box, ideals, nonprincipal_ideals


def fraction_rank(rows):
    """Plain Gaussian elimination over Q with Fractions."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=6))


@given(matrices)
def test_rank_over_q_matches_fractions(rows):
    assert rank(rows, 0) == fraction_rank(rows)


@given(matrices)
def test_rank_mod_p_bounded_by_rational_rank(rows):
    assert rank(rows, 2) <= rank(rows, 0)
    # Minors are at most (4 * sqrt(6))^6 < 1000003 in size, so none vanish mod it.
    assert rank(rows, 1000003) == fraction_rank(rows)


def test_rank_mod_small_prime_can_drop():
    assert rank([[2, 0], [0, 1]], 0) == 2
    assert rank([[2, 0], [0, 1]], 2) == 1


def test_parse_field():
    assert parse_field("q") == 0
    assert parse_field("p=7") == 7
    assert field_name(7) == "GF(7)"
    with pytest.raises(ValueError):
        parse_field("p=6")


def test_reduced_homology_of_small_complexes():
    circle = SimplicialComplex(frozenset({0, 1, 2}), frozenset({(), (0,), (1,), (2,), (0, 1), (1, 2), (0, 2)}))
    assert reduced_homology(circle) == {1: 1}
    empty_face_only = SimplicialComplex(frozenset(), frozenset({()}))
    assert reduced_homology(empty_face_only) == {-1: 1}
    two_points = SimplicialComplex(frozenset({0, 1}), frozenset({(), (0,), (1,)}))
    assert reduced_homology(two_points) == {0: 1}


def test_koszul_complex_of_maximal_ideal():
    m = minimalize([var(i, 3) for i in range(3)])
    C = koszul_complex_at_degree(m, (1, 1, 1))
    assert reduced_homology(C) == {1: 1}


def test_complete_intersection_and_koszul_betti():
    B = betti_table(parse_ideal_string("x1^2, x2^3"))
    assert B.totals() == [1, 2, 1]
    assert B.regularity() == 3
    B = betti_table(parse_ideal_string("x1, x2, x3"))
    assert B.totals() == [1, 3, 3, 1]
    assert B.regularity() == 0


def rp2_ideal():
    facets = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
              (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
    faces = {frozenset(s) for f in facets for k in range(4) for s in itertools.combinations(f, k)}
    gens = []
    for t in itertools.combinations(range(1, 7), 3):
        if frozenset(t) not in faces:
            gens.append(tuple(1 if i + 1 in t else 0 for i in range(6)))
    return minimalize(gens, 6)


def test_betti_numbers_depend_on_characteristic():
    I = rp2_ideal()
    q, two = homological_invariants(I, 0), homological_invariants(I, 2)
    assert q.cm and not two.cm
    assert q.depth == 3 and two.depth < 3


def test_alldepth_example():
    I = parse_ideal_string("x1^2*x3, x2^2*x3, x1^2*x4")
    x4 = minimalize([var(3, 4)])
    regs = tuple(homological_invariants(J).reg for J in (I, colon(I, var(3, 4)), add(I, x4)))
    assert regs == (3, 3, 3)
    S = signature_of_ideal(I)
    assert S == parse_ideal_string("x1*x3, x2*x3, x1*x4")
    assert homological_invariants(S).reg == 1


def test_weighted_regularity():
    I = parse_ideal_string("x1^2, x2^3")
    assert homological_invariants(I, weights=(1, 1)).reg_weighted == 3
    assert homological_invariants(I, weights=(2, 1)).reg_weighted == 5
    with pytest.raises(ValueError):
        homological_invariants(I, weights=(1,))


@settings(max_examples=40, deadline=None)
@given(ideals(n_max=4, exp_max=3))
def test_euler_characteristic_matches_inclusion_exclusion(I):
    B = betti_table(I)
    euler = {}
    for k in range(1, I.q + 1):
        for S in itertools.combinations(I.gens, k):
            a = tuple(max(c) for c in zip(*S))
            euler[a] = euler.get(a, 0) + (-1) ** k
    degrees = {a for _, a in B.entries} | set(euler)
    for a in degrees - {(0,) * I.n}:
        chi = sum((-1) ** i * b for (i, c), b in B.entries.items() if c == a)
        assert chi == euler.get(a, 0)


@settings(max_examples=40, deadline=None)
@given(ideals(n_max=3, exp_max=3))
def test_betti_support_in_lcm_lattice(I):
    B = betti_table(I)
    lattice = set(lcm_lattice(I)) | {(0,) * I.n}
    assert {a for _, a in B.entries} <= lattice
    for a in box(I.lcm()):
        if a not in lattice:
            assert reduced_homology(koszul_complex_at_degree(I, a)) == {}


@settings(max_examples=60, deadline=None)
@given(ideals(n_max=4, exp_max=4))
def test_invariants_are_consistent(I):
    inv = homological_invariants(I)
    assert inv.pd + inv.depth == inv.n
    assert inv.cm == (inv.depth == inv.dim)
    assert inv.depth <= inv.dim
    assert inv.height <= inv.pd
    assert betti_table(I).total(1) == I.q


@settings(max_examples=40, deadline=None)
@given(nonprincipal_ideals(n_max=4, exp_max=4))
def test_signature_keeps_depth_and_lowers_regularity(I):
    S = signature_of_ideal(I)
    a, b = homological_invariants(I), homological_invariants(S)
    assert a.depth == b.depth
    assert a.reg >= b.reg
