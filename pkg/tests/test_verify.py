import pytest

from monosig import verify
from monosig.io import parse_ideal, parse_ideal_string
from monosig.verify import THEOREMS, Bounds, check_ideal, check_regularity, run_verify


@pytest.mark.parametrize("theorem", THEOREMS)
def test_every_suite_passes_on_a_small_sample(theorem):
    r = run_verify(theorem, count=12, bounds=Bounds(n_max=3, q_max=4, exp_max=4), seed=5)
    assert r.ok, r.failures
    assert r.cases == 12


def test_unknown_theorem():
    with pytest.raises(KeyError):
        run_verify("nonsense")


def test_height_one_is_outside_ass_hypotheses():
    I = parse_ideal_string("x1*x2, x1*x3^2")
    assert check_ideal("ass", I) is None
    assert check_ideal("vnumber", I) is None
    assert check_ideal("height-one", I) == []


def test_regularity_strict_drop_case():
    I = parse_ideal_string("x1^2*x3, x2^2*x3, x1^2*x4")
    assert check_regularity(I) == []


def test_failures_carry_the_ideal_document(monkeypatch):
    def always_fails(I, field=0):
        return ["forced"]
    monkeypatch.setitem(verify._IDEAL_CHECKS, "depth", (always_fails, {"nonprincipal": True}))
    r = run_verify("depth", count=3, seed=1)
    assert not r.ok and len(r.failures) == 3
    f = r.failures[0]
    assert f.messages == ["forced"]
    assert parse_ideal(f.document).q > 1
    assert r.summary().startswith("FAIL depth: 0/3")


def test_prime_field_run():
    assert run_verify("cohen-macaulay", count=10, seed=2, field=2).ok
