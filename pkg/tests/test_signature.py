import itertools

import pytest
from hypothesis import given, settings

from monosig.catalog import MATRICES_3X3, ONE_GAP_EXAMPLE, SIGNATURE_EXAMPLE
from monosig.io import parse_ideal_string
from monosig.monomials import IdealError, IncidenceMatrix, incidence_matrix, unit_ideal, var
from monosig.signature import (
    GapError,
    canonical_matrix,
    enumerate_signature_matrices,
    find_gap,
    full_polarization_trace,
    has_height_two,
    is_tight,
    polarization_step,
    row_signature,
    shift_step,
    signature_matrix,
    signature_of_ideal,
    signature_via_shifts,
    substitute,
)

from conftest import height_two_ideals, ideals

WORKED = parse_ideal_string(SIGNATURE_EXAMPLE)


def P(text, n=None):
    return parse_ideal_string(text, n)


def test_row_signature_ranks_distinct_values():
    rs = row_signature((2, 7, 0, 3, 0))
    assert rs.positions == (1, 3, 0, 2, 0)
    assert rs.r == 3 and not rs.tight
    assert is_tight((0, 2, 1, 1))
    assert not is_tight((1, 2))


def test_worked_example_matrix_in_displayed_column_order():
    cols = [(1, 1, 2, 0), (6, 0, 7, 0), (0, 3, 0, 1), (0, 1, 3, 1), (0, 1, 0, 3)]
    A = IncidenceMatrix.from_columns(cols)
    assert A.rows == ((1, 6, 0, 0, 0), (1, 0, 3, 1, 1), (2, 7, 0, 3, 0), (0, 0, 1, 1, 3))
    assert signature_matrix(A).rows == (
        (1, 2, 0, 0, 0), (1, 0, 2, 1, 1), (1, 3, 0, 2, 0), (0, 0, 1, 1, 2))


def test_worked_example_signature_ideal():
    want = P("x1*x2*x3, x1^2*x3^3, x2^2*x4, x2*x3^2*x4, x2*x4^2")
    assert signature_of_ideal(WORKED) == want
    assert signature_via_shifts(WORKED) == want


def test_worked_example_trace_steps():
    t = full_polarization_trace(WORKED)
    got = [(s.variable, s.p, s.qs) for s in t.steps]
    assert got == [(0, 1, (6,)), (1, 1, (3,)), (2, 0, (2, 3, 7)), (2, 2, (6,)), (3, 1, (3,))]
    assert t.weights == (5, 2, 2, 4, 2)
    shifted = [s.shifted for s in t.steps]
    assert shifted[0] == P("x2^3*x4, x2*x3^3*x4, x2*x4^3, x1*x2*x3^2, x1^2*x3^7")
    assert shifted[2] == P("x2*x4^3, x2^2*x4, x1*x2*x3, x2*x3^2*x4, x1^2*x3^6")
    # Per-step polarizations, the new variable last.
    x0 = lambda s: parse_ideal_string(s.replace("x0", "x5"), 5)
    assert t.steps[0].polarized == x0("x2^3*x4, x2*x3^3*x4, x2*x4^3, x1*x2*x3^2, x0*x1*x3^7")
    assert t.steps[2].polarized == x0("x2*x4^3, x2^2*x4, x1*x2*x0, x2*x0*x3*x4, x1^2*x0*x3^5")
    assert t.steps[3].polarized == x0("x2*x4^3, x2^2*x4, x1*x2*x3, x2*x3^2*x4, x1^2*x0*x3^2")


def test_worked_example_full_polarization():
    t = full_polarization_trace(WORKED)
    names = "x1 x2 x3 x4 z1 z2 z3 z4 z5".split()
    text = "z2*x2*x4, x1*x2*z3, x2*z3*x3*x4, z1*x1*z3*z4*x3, x2*x4*z5"
    for k, name in reversed(list(enumerate(names))):
        text = text.replace(name, f"x{k + 1}")
    assert t.polarized == parse_ideal_string(text, 9)
    assert t.specialize_f() == WORKED
    assert t.specialize_g() == signature_of_ideal(WORKED)
    assert t.f_sequence == ((4, 0, 5), (5, 1, 2), (6, 2, 2), (7, 2, 4), (8, 3, 2))


def test_principal_maps_to_unit():
    assert signature_of_ideal(P("x1^3*x2", 3)) == unit_ideal(3)
    assert signature_via_shifts(P("x1^3*x2", 3)) == unit_ideal(3)


def test_height_one_example():
    I = P("x1*x2, x1*x3^2", 3)
    assert not has_height_two(I)
    assert signature_of_ideal(I) == P("x3, x2", 3)
    assert signature_via_shifts(I) == P("x2, x3", 3)
    with pytest.raises(IdealError):
        find_gap(I, 2)


def test_squarefree_height_one_is_not_its_own_signature():
    # A common variable of all generators collapses to exponent 0.
    I = P("x1*x2, x1*x3")
    assert signature_of_ideal(I) == P("x2, x3", 3)


def test_not_antichain_example():
    I = P("x2*x3^2, x1*x3, x1^2")
    J = P("x2*x3, x1*x3, x1^2")
    assert signature_of_ideal(I) == I
    assert signature_of_ideal(J) == J
    assert I.issubset(J) and I != J


def test_one_gap_example():
    I = P(ONE_GAP_EXAMPLE)
    gap = find_gap(I, 0)
    assert (gap.p, gap.qs, gap.weight) == (1, (3, 4), 2)
    J, d = polarization_step(I, gap)
    assert d == 2
    assert J == parse_ideal_string("x2^3, x1*x2^2, x4*x1*x3^2, x4*x1^2*x2*x3", 4)
    assert shift_step(I, gap) == P("x2^3, x1*x2^2, x1^2*x3^2, x1^3*x2*x3")
    t = full_polarization_trace(I)
    assert t.r == 1


def test_stale_gap_rejected():
    I = P(ONE_GAP_EXAMPLE)
    gap = find_gap(I, 0)
    with pytest.raises(GapError):
        shift_step(shift_step(I, gap), gap)


def test_enumerate_two_by_two_brute_force():
    found = set()
    for entries in itertools.product(range(2), repeat=4):
        A = IncidenceMatrix((entries[:2], entries[2:]))
        cols = A.columns
        if cols[0] == cols[1] or all(a <= b for a, b in zip(*cols)) or all(b <= a for a, b in zip(*cols)):
            continue
        if all(is_tight(r) for r in A.rows):
            found.add(canonical_matrix(A))
    assert found == enumerate_signature_matrices(2, 2)
    assert len(found) == 1


def test_enumeration_contains_three_by_three_list():
    mats = enumerate_signature_matrices(3, 3)
    assert len(mats) == 73
    for rows in MATRICES_3X3:
        A = IncidenceMatrix(rows)
        assert signature_matrix(A) == A
        assert canonical_matrix(A) in mats


def test_enumeration_single_generator():
    assert enumerate_signature_matrices(3, 1) == {IncidenceMatrix(((0,), (0,), (0,)))}


@settings(max_examples=60)
@given(ideals())
def test_signature_is_idempotent_and_tight(I):
    S = signature_of_ideal(I)
    assert signature_of_ideal(S) == S
    if S.is_proper():
        assert all(is_tight(r) for r in incidence_matrix(S).rows)


@settings(max_examples=60)
@given(ideals())
def test_signature_invariant_under_variable_scaling(I):
    S = signature_of_ideal(I)
    for i in range(I.n):
        assert signature_of_ideal(I.scale(var(i, I.n))) == S


@settings(max_examples=60)
@given(ideals())
def test_signature_has_height_two_unless_principal(I):
    S = signature_of_ideal(I)
    if I.q > 1:
        assert has_height_two(S)
        assert S.q == I.q


@settings(max_examples=60, deadline=None)
@given(height_two_ideals())
def test_shift_recursion_reaches_signature(I):
    t = full_polarization_trace(I)
    assert t.signature == signature_of_ideal(I)
    assert t.specialize_f() == I
    assert t.specialize_g() == t.signature
    assert all(d >= 2 for d in t.weights)
    # Lowering exponents only enlarges the ideal.
    for s in t.steps:
        assert s.ideal.issubset(s.shifted)
        assert substitute(s.polarized, s.ideal.n, [(s.variable, s.weight)]) == s.ideal
        assert substitute(s.polarized, s.ideal.n, [(s.variable, 1)]) == s.shifted


@settings(max_examples=60)
@given(height_two_ideals())
def test_shift_preserves_other_rows(I):
    for i in range(I.n):
        gap = find_gap(I, i)
        if gap is None:
            continue
        J = shift_step(I, gap)
        # Closing a gap keeps the relative order within every row.
        assert signature_of_ideal(J) == signature_of_ideal(I)
        assert J.q == I.q
        drop = lambda g: g[:i] + g[i + 1:]
        assert sorted(map(drop, J.gens)) == sorted(map(drop, I.gens))
