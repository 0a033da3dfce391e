import itertools

from hypothesis import strategies as st

from monosig.monomials import gcd_factor, minimalize


@st.composite
def ideals(draw, n_min=2, n_max=4, q_max=5, exp_max=6, proper=True):
    n = draw(st.integers(n_min, n_max))
    mon = st.tuples(*[st.integers(0, exp_max)] * n)
    I = minimalize(draw(st.lists(mon, min_size=1, max_size=q_max)), n)
    if proper:
        from hypothesis import assume
        assume(I.is_proper())
    return I


def height_two_ideals(**kw):
    # Dividing out the gcd of the generators leaves height >= 2.
    return nonprincipal_ideals(**kw).map(lambda I: gcd_factor(I)[1])


def nonprincipal_ideals(**kw):
    return ideals(**kw).filter(lambda I: I.q > 1)


def box(bounds):
    """Every exponent vector 0 <= a <= bounds."""
    return itertools.product(*(range(b + 1) for b in bounds))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
