"""Signature of a monomial ideal, gap removal, and weighted polarization.

The signature replaces every entry of a row of the incidence matrix by its
rank among the distinct entries of that row. For ideals of height >= 2 it
is reached by repeatedly closing gaps in the rows (the shift operation);
recording each step as a new variable gives a full weighted polarization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .monomials import (
    IdealError,
    IncidenceMatrix,
    MonomialIdeal,
    format_monomial,
    gcd_factor,
    incidence_matrix,
    minimalize,
    sort_key,
    unit_ideal,
)


class GapError(ValueError):
    """A gap descriptor does not describe the ideal it was applied to."""


@dataclass(frozen=True)
class RowSignature:
    input_row: tuple
    distinct_sorted: tuple
    positions: tuple

    @property
    def r(self) -> int:
        return len(self.distinct_sorted) - 1

    @property
    def tight(self) -> bool:
        return self.distinct_sorted == tuple(range(len(self.distinct_sorted)))


def row_signature(row) -> RowSignature:
    row = tuple(int(c) for c in row)
    if not row:
        raise ValueError("empty row")
    m = tuple(sorted(set(row)))
    rank = {v: k for k, v in enumerate(m)}
    return RowSignature(row, m, tuple(rank[c] for c in row))


def is_tight(row) -> bool:
    return row_signature(row).tight


def signature_matrix(A: IncidenceMatrix) -> IncidenceMatrix:
    return IncidenceMatrix(tuple(row_signature(r).positions for r in A.rows))


def signature_of_ideal(I: MonomialIdeal) -> MonomialIdeal:
    """sgn(I). Principal ideals (and R itself) map to the unit ideal."""
    if I.is_zero():
        raise IdealError("the zero ideal has no signature")
    if I.is_unit():
        return unit_ideal(I.n)
    return signature_matrix(incidence_matrix(I)).to_ideal()


def is_signature_ideal(I: MonomialIdeal) -> bool:
    return signature_of_ideal(I) == I


def has_height_two(I: MonomialIdeal) -> bool:
    """True iff no variable divides every generator, i.e. ht(I) >= 2.

    The ideal must be proper and nonzero.
    """
    return I.q > 1 and not any(all(g[i] > 0 for g in I.gens) for i in range(I.n))


def _require_height_two(I: MonomialIdeal) -> None:
    if not I.is_proper() or not has_height_two(I):
        raise IdealError(f"ideal {I} does not have height >= 2")


@dataclass(frozen=True)
class GapDescriptor:
    """Splitting of G(I) at the lowest gap of one variable's exponents.

    ``gamma_blocks[j]`` holds the generators whose exponent of the variable
    is j (0 <= j <= p); ``epsilon_block`` holds ``(q_i, generator)`` pairs
    with q_1 <= ... <= q_s and q_1 - p >= 2.
    """

    variable: int
    p: int
    gamma_blocks: tuple
    epsilon_block: tuple

    @property
    def qs(self) -> tuple:
        return tuple(q for q, _ in self.epsilon_block)

    @property
    def q1(self) -> int:
        return self.epsilon_block[0][0]

    @property
    def weight(self) -> int:
        """Degree q_1 - p of the substituted power."""
        return self.q1 - self.p

    @property
    def shift_amounts(self) -> tuple:
        return tuple(q - self.q1 + self.p + 1 for q in self.qs)

    def generators(self) -> frozenset:
        return frozenset(itertools.chain(*self.gamma_blocks, (g for _, g in self.epsilon_block)))


def find_gap(I: MonomialIdeal, variable: int) -> GapDescriptor | None:
    """Lowest gap of ``variable`` in G(I), or None if its row is tight."""
    _require_height_two(I)
    return lowest_gap(I, variable)


def lowest_gap(I: MonomialIdeal, variable: int) -> GapDescriptor | None:
    """As :func:`find_gap`, only requiring a zero in the variable's row."""
    if not 0 <= variable < I.n:
        raise IndexError(f"variable index {variable} out of range for n={I.n}")
    if not I.is_proper() or all(g[variable] > 0 for g in I.gens):
        raise IdealError(f"x{variable + 1} divides every generator of {I}")
    values = sorted({g[variable] for g in I.gens})
    p = 0
    while p + 1 < len(values) and values[p + 1] == p + 1:
        p += 1
    if p + 1 == len(values):
        return None
    q1 = values[p + 1]
    gens = sorted(I.gens, key=lambda g: (g[variable], sort_key(g)))
    gamma = tuple(tuple(g for g in gens if g[variable] == j) for j in range(p + 1))
    eps = tuple((g[variable], g) for g in gens if g[variable] >= q1)
    return GapDescriptor(variable, p, gamma, eps)


def find_first_gap(I: MonomialIdeal) -> GapDescriptor | None:
    for i in range(I.n):
        gap = find_gap(I, i)
        if gap is not None:
            return gap
    return None


def _check_gap(I: MonomialIdeal, gap: GapDescriptor) -> None:
    if gap.generators() != frozenset(I.gens):
        raise GapError("gap descriptor does not match the ideal's generators")


def _lower(g, i, amount):
    return g[:i] + (g[i] - amount,) + g[i + 1:]


def _build(n, gens) -> MonomialIdeal:
    J = minimalize(gens, n)
    if J.q != len(gens):
        raise AssertionError("generators of a shifted ideal must stay minimal")
    return J


def shift_step(I: MonomialIdeal, gap: GapDescriptor) -> MonomialIdeal:
    """Close the gap: lower the high block's exponents by q_1 - p - 1."""
    _check_gap(I, gap)
    drop = gap.q1 - gap.p - 1
    gens = [g for block in gap.gamma_blocks for g in block]
    gens += [_lower(g, gap.variable, drop) for _, g in gap.epsilon_block]
    return _build(I.n, gens)


def polarization_step(I: MonomialIdeal, gap: GapDescriptor):
    """Weighted partial polarization along ``gap``.

    Returns ``(J, d)`` where J lives in n + 1 variables (the new variable is
    appended last) and replaces x^d, d = q_1 - p, by the new variable in the
    high block.
    """
    _check_gap(I, gap)
    d = gap.weight
    gens = [g + (0,) for block in gap.gamma_blocks for g in block]
    gens += [_lower(g, gap.variable, d) + (1,) for _, g in gap.epsilon_block]
    return _build(I.n + 1, gens), d


def substitute(J: MonomialIdeal, n: int, subs) -> MonomialIdeal:
    """Specialize the trailing variables of J back into the first ``n``.

    ``subs[k] = (j, d)`` sends the variable at index n + k to x_j^d.
    """
    if J.n != n + len(subs):
        raise ValueError(f"ideal has {J.n} variables, expected {n} + {len(subs)}")
    out = []
    for g in J.gens:
        m = list(g[:n])
        for k, (j, d) in enumerate(subs):
            m[j] += d * g[n + k]
        out.append(m)
    return minimalize(out, n)


@dataclass(frozen=True)
class PolarizationStep:
    variable: int
    p: int
    qs: tuple
    weight: int
    ideal: MonomialIdeal
    polarized: MonomialIdeal
    shifted: MonomialIdeal

    @property
    def q1(self) -> int:
        return self.qs[0]


@dataclass(frozen=True)
class PolarizationTrace:
    """Record of the gap-closing recursion from I to sgn(I).

    ``polarized`` lives in n + r variables; variable n + k is z_{k+1} and
    corresponds to ``steps[k]``.
    """

    ideal: MonomialIdeal
    steps: tuple
    polarized: MonomialIdeal
    signature: MonomialIdeal = field(repr=False)

    @property
    def n(self) -> int:
        return self.ideal.n

    @property
    def r(self) -> int:
        return len(self.steps)

    @property
    def weights(self) -> tuple:
        return tuple(s.weight for s in self.steps)

    @property
    def f_sequence(self) -> tuple:
        """(z index, x index, power) triples for z_k -> x_j^{d_k}."""
        return tuple((self.n + k, s.variable, s.weight) for k, s in enumerate(self.steps))

    @property
    def g_sequence(self) -> tuple:
        return tuple((self.n + k, s.variable, 1) for k, s in enumerate(self.steps))

    def variable_names(self) -> list:
        return [f"x{i + 1}" for i in range(self.n)] + [f"z{k + 1}" for k in range(self.r)]

    def degree_weights(self) -> tuple:
        """Grading of S making each z_k - x_j^{d_k} homogeneous."""
        return (1,) * self.n + self.weights

    def specialize_f(self) -> MonomialIdeal:
        return substitute(self.polarized, self.n, [(s.variable, s.weight) for s in self.steps])

    def specialize_g(self) -> MonomialIdeal:
        return substitute(self.polarized, self.n, [(s.variable, 1) for s in self.steps])


def full_polarization_trace(I: MonomialIdeal) -> PolarizationTrace:
    """Close all gaps, variable by variable in ascending order.

    Each variable is revisited until its row is tight before moving on.
    Requires ht(I) >= 2; for height one use :func:`gcd_factor` first.
    """
    _require_height_two(I)
    n = I.n
    # Each pair is (polarized generator, current generator in R); the shift
    # keeps generators minimal so the pairing stays one-to-one.
    pairs = [(g, g) for g in I.gens]
    current = I
    steps = []
    for i in range(n):
        while True:
            gap = find_gap(current, i)
            if gap is None:
                break
            d = gap.weight
            pol, _ = polarization_step(current, gap)
            sft = shift_step(current, gap)
            new_pairs = []
            for P, G in pairs:
                if G[i] >= gap.q1:
                    new_pairs.append((_lower(P, i, d) + (1,), _lower(G, i, d - 1)))
                else:
                    new_pairs.append((P + (0,), G))
            pairs = new_pairs
            if sorted(G for _, G in pairs) != sorted(sft.gens):
                raise AssertionError("polarized generators lost track of the shift")
            steps.append(PolarizationStep(i, gap.p, gap.qs, d, current, pol, sft))
            current = sft
    polarized = _build(n + len(steps), [P for P, _ in pairs])
    return PolarizationTrace(I, tuple(steps), polarized, current)


def signature_via_shifts(I: MonomialIdeal) -> MonomialIdeal:
    """sgn(I) computed by the shift recursion, routing height one via gcd."""
    if I.is_zero():
        raise IdealError("the zero ideal has no signature")
    if I.is_unit() or I.is_principal():
        return unit_ideal(I.n)
    if not has_height_two(I):
        _, I = gcd_factor(I)
    return full_polarization_trace(I).signature


def _tight_rows(q: int):
    for row in itertools.product(range(q), repeat=q):
        values = set(row)
        if len(values) > 1 and values == set(range(len(values))):
            yield row


def _is_antichain(columns) -> bool:
    for a, b in itertools.combinations(columns, 2):
        if all(x <= y for x, y in zip(a, b)) or all(y <= x for x, y in zip(a, b)):
            return False
    return True


def enumerate_signature_matrices(n: int, q: int) -> set:
    """All n x q signature matrices with every variable used.

    Rows are tight and nonzero, columns form an antichain; each matrix is
    returned once, with its columns sorted lexicographically. For q = 1 the
    only signature is the zero column (the class of principal ideals).
    """
    if n < 1 or q < 1:
        raise ValueError("need n >= 1 and q >= 1")
    if q == 1:
        return {IncidenceMatrix(((0,),) * n)}
    rows = list(_tight_rows(q))
    out = set()
    for choice in itertools.product(rows, repeat=n):
        columns = list(zip(*choice))
        if _is_antichain(columns):
            out.add(IncidenceMatrix.from_columns(sorted(columns)))
    return out


def canonical_matrix(A: IncidenceMatrix) -> IncidenceMatrix:
    """Representative of A under column permutation."""
    return IncidenceMatrix.from_columns(sorted(A.columns))


def describe_gap(gap: GapDescriptor, names=None) -> str:
    name = names[gap.variable] if names else f"x{gap.variable + 1}"
    qs = ", ".join(str(q) for q in gap.qs)
    return f"{name}: p={gap.p}, q=({qs}), x0 -> {format_monomial((gap.weight,), [name])}"
