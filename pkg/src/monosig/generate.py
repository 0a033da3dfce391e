"""Seeded random monomial ideals."""

from __future__ import annotations

import random

from .monomials import MonomialIdeal, minimalize
from .signature import has_height_two


class GenerationError(RuntimeError):
    pass


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def generate_random_ideal(n: int, q_max: int, exp_max: int, seed=None, *,
                          nonprincipal: bool = False, height_two: bool = False,
                          squarefree: bool = False, retries: int = 1000) -> MonomialIdeal:
    """Draw up to ``q_max`` monomials from the box [0, exp_max]^n and minimalize.

    ``seed`` may be an int or a ``random.Random`` (which is advanced).
    Zero and unit ideals are rejected; the flags add further constraints.
    """
    if n < 1 or q_max < 1 or exp_max < 1:
        raise ValueError("need n, q_max, exp_max >= 1")
    rng = _rng(seed)
    top = 1 if squarefree else exp_max
    for _ in range(retries):
        k = rng.randint(1, q_max)
        I = minimalize(([rng.randint(0, top) for _ in range(n)] for _ in range(k)), n)
        if not I.is_proper():
            continue
        if nonprincipal and I.is_principal():
            continue
        if height_two and not has_height_two(I):
            continue
        return I
    raise GenerationError(f"no ideal met the constraints within {retries} draws")


def random_ideals(count: int, n_max: int, q_max: int, exp_max: int, seed=None,
                  n_min: int = 2, **flags) -> list:
    """``count`` ideals with n drawn uniformly from [n_min, n_max]."""
    rng = _rng(seed)
    return [generate_random_ideal(rng.randint(n_min, n_max), q_max, exp_max, rng, **flags)
            for _ in range(count)]
