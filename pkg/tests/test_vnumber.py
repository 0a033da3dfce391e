import itertools

import pytest
from hypothesis import given, settings, strategies as st

from monosig.catalog import SIGNATURE_EXAMPLE
from monosig.decomposition import MonomialPrime, associated_primes
from monosig.io import parse_ideal_string
from monosig.monomials import IdealError, colon, contains, prime_ideal, unit_ideal
from monosig.signature import signature_of_ideal
from monosig.vnumber import box_monomials, v_number, v_witness_for_prime, v_witnesses

from conftest import height_two_ideals, ideals


def monomials_of_degree(n, d):
    for c in itertools.combinations_with_replacement(range(n), d):
        m = [0] * n
        for i in c:
            m[i] += 1
        yield tuple(m)


def brute_v(I):
    """Smallest d with a degree-d monomial w and (I : w) an associated prime."""
    ass = set(associated_primes(I))
    for d in itertools.count():
        for w in monomials_of_degree(I.n, d):
            if not contains(I, w) and colon(I, w) in {P.ideal(I.n) for P in ass}:
                return d


def test_worked_example():
    I = parse_ideal_string(SIGNATURE_EXAMPLE)
    assert v_number(I) == 4
    assert v_number(signature_of_ideal(I)) == 3


def test_prime_ideal_has_v_zero():
    assert v_number(prime_ideal([0, 2], 3)) == 0


def test_witnesses_are_correct():
    I = parse_ideal_string("x1*x2*x3, x1*x2^2")
    ws = v_witnesses(I)
    assert set(ws) == set(associated_primes(I))
    for P, w in ws.items():
        assert colon(I, w.witness) == P.ideal(I.n)
        assert w.degree == sum(w.witness)


def test_errors():
    with pytest.raises(IdealError):
        v_number(unit_ideal(2))
    with pytest.raises(IdealError):
        v_witness_for_prime(parse_ideal_string("x1^2"), MonomialPrime.of([1]))


def test_box_order_is_graded_and_complete():
    ms = list(box_monomials((2, 1)))
    assert ms == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1)]


@settings(max_examples=50, deadline=None)
@given(ideals(n_max=3, exp_max=4))
def test_v_number_matches_unbounded_search(I):
    assert v_number(I) == brute_v(I)


@settings(max_examples=40, deadline=None)
@given(height_two_ideals(n_max=4, exp_max=4))
def test_signature_does_not_raise_v_number(I):
    S = signature_of_ideal(I)
    assert associated_primes(S) == associated_primes(I)
    assert v_number(S) <= v_number(I)


@settings(max_examples=60)
@given(ideals(n_max=4, exp_max=5), st.data())
def test_raising_exponents_past_the_lcm_does_not_change_colons(I, data):
    top = I.lcm()
    w = tuple(data.draw(st.integers(0, t)) for t in top)
    k = data.draw(st.integers(0, I.n - 1))
    at_top = w[:k] + (top[k],) + w[k + 1:]
    raised = w[:k] + (top[k] + data.draw(st.integers(1, 5)),) + w[k + 1:]
    assert colon(I, raised) == colon(I, at_top)
