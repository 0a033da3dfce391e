"""Randomized verification of the signature invariance results.

Each check takes one random instance and returns ``None`` when the instance
falls outside the result's hypotheses, otherwise a list of failure messages
(empty on success). :func:`run_verify` draws seeded instances, applies a
check and collects counterexamples together with their ideal documents.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .decomposition import associated_primes, dimension_and_height, height, intersect_components, irreducible_decomposition, is_unmixed
from .generate import generate_random_ideal
from .graphs import cap_weights, edge_ideal, random_oriented_graph, signature_weights, weighted_squarefree
from .homology import betti_table, homological_invariants, koszul_complex_at_degree, lcm_lattice, reduced_homology
from .io import serialize_ideal
from .monomials import (
    MonomialIdeal,
    colon,
    contains,
    gcd_factor,
    incidence_matrix,
    minimalize,
    mul,
    var,
)
from .signature import (
    find_gap,
    full_polarization_trace,
    has_height_two,
    lowest_gap,
    polarization_step,
    shift_step,
    signature_of_ideal,
    substitute,
)
from .vnumber import box_monomials, v_number


@dataclass(frozen=True)
class Bounds:
    n_max: int = 4
    q_max: int = 5
    exp_max: int = 6
    n_min: int = 2


def _inv(I, field):
    return homological_invariants(I, field)


def _cmp(label, a, b, ok):
    return [] if ok else [f"{label}: {a!r} vs {b!r}"]


# -- whole-ideal results ----------------------------------------------------

def check_depth(I, field=0):
    if I.is_principal():
        return None
    a, b = _inv(I, field).depth, _inv(signature_of_ideal(I), field).depth
    return _cmp("depth(R/I) vs depth(R/sgn I)", a, b, a == b)


def check_regularity(I, field=0):
    if I.is_principal():
        return None
    a, b = _inv(I, field).reg, _inv(signature_of_ideal(I), field).reg
    return _cmp("reg(R/I) >= reg(R/sgn I)", a, b, a >= b)


def check_ass(I, field=0):
    if not has_height_two(I):
        return None
    a, b = associated_primes(I), associated_primes(signature_of_ideal(I))
    return _cmp("Ass(I) vs Ass(sgn I)", [str(p) for p in a], [str(p) for p in b], a == b)


def check_vnumber(I, field=0):
    if not has_height_two(I):
        return None
    a, b = v_number(I), v_number(signature_of_ideal(I))
    return _cmp("v(I) >= v(sgn I)", a, b, a >= b)


def check_unmixed(I, field=0):
    if not has_height_two(I):
        return None
    a, b = is_unmixed(I), is_unmixed(signature_of_ideal(I))
    return _cmp("unmixed(I) vs unmixed(sgn I)", a, b, a == b)


def check_dimension(I, field=0):
    if not has_height_two(I):
        return None
    a, b = dimension_and_height(I), dimension_and_height(signature_of_ideal(I))
    return _cmp("(ht, dim) of I vs sgn I", a, b, a == b)


def check_cohen_macaulay(I, field=0):
    if not has_height_two(I):
        return None
    a, b = _inv(I, field).cm, _inv(signature_of_ideal(I), field).cm
    return _cmp("CM(I) vs CM(sgn I)", a, b, a == b)


def check_gorenstein(I, field=0):
    if not has_height_two(I):
        return None
    a, b = _inv(I, field).gorenstein, _inv(signature_of_ideal(I), field).gorenstein
    return _cmp("Gorenstein(I) vs Gorenstein(sgn I)", a, b, a == b)


def check_height_one(I, field=0):
    """I = f*L with ht(I) = 1: same depth and signature, reg shifted by deg f."""
    if I.is_principal() or has_height_two(I):
        return None
    f, L = gcd_factor(I)
    out = []
    iI, iL = _inv(I, field), _inv(L, field)
    out += _cmp("depth(R/I) vs depth(R/L)", iI.depth, iL.depth, iI.depth == iL.depth)
    out += _cmp("reg(R/I) vs reg(R/L) + deg f", iI.reg, iL.reg + sum(f), iI.reg == iL.reg + sum(f))
    out += _cmp("sgn(I) vs sgn(L)", signature_of_ideal(I), signature_of_ideal(L),
                signature_of_ideal(I) == signature_of_ideal(L))
    out += _cmp("ht(L) >= 2", height(L), 2, has_height_two(L) and height(L) >= 2)
    return out


def check_signature_basics(I, field=0):
    """Idempotence, invariance under x_i*I, and ht(sgn I) >= 2."""
    S = signature_of_ideal(I)
    out = _cmp("sgn(sgn I) vs sgn I", signature_of_ideal(S), S, signature_of_ideal(S) == S)
    for i in range(I.n):
        T = signature_of_ideal(I.scale(var(i, I.n)))
        out += _cmp(f"sgn(x{i + 1} I) vs sgn I", T, S, T == S)
    if not I.is_principal():
        out += _cmp("ht(sgn I) >= 2", height(S), 2, has_height_two(S) and height(S) >= 2)
    return out


# -- single gap steps ---------------------------------------------------------

def _steps(I):
    return full_polarization_trace(I).steps


def _step_gap(step):
    return find_gap(step.ideal, step.variable)


def check_shift_depth_dim(I, field=0):
    if not has_height_two(I):
        return None
    out = []
    for s in _steps(I):
        a, b = _inv(s.ideal, field), _inv(s.shifted, field)
        out += _cmp("(depth, dim) before/after shift", (a.depth, a.dim), (b.depth, b.dim),
                    (a.depth, a.dim) == (b.depth, b.dim))
        out += _cmp("CM before/after shift", a.cm, b.cm, a.cm == b.cm)
        out += _cmp("Gorenstein before/after shift", a.gorenstein, b.gorenstein, a.gorenstein == b.gorenstein)
    return out


def check_polarization_regularity(I, field=0):
    """reg(S/I_pol) = reg(R/I_sft); depth and dim of S/I_pol go up by one."""
    if not has_height_two(I):
        return None
    out = []
    for s in _steps(I):
        p, a, b = _inv(s.polarized, field), _inv(s.ideal, field), _inv(s.shifted, field)
        out += _cmp("reg(S/I_pol) vs reg(R/I_sft)", p.reg, b.reg, p.reg == b.reg)
        out += _cmp("depth(S/I_pol) vs depth(R/I)+1", p.depth, a.depth + 1, p.depth == a.depth + 1)
        out += _cmp("dim(S/I_pol) vs dim(R/I)+1", p.dim, a.dim + 1, p.dim == a.dim + 1)
    return out


def check_regularity_bounds(I, field=0):
    """|reg(R/I) - reg(S/I_pol)| <= d - 1 for the substituted power x^d."""
    if not has_height_two(I):
        return None
    out = []
    for s in _steps(I):
        a, p = _inv(s.ideal, field).reg, _inv(s.polarized, field).reg
        d = s.weight
        out += _cmp(f"reg(R/I) <= reg(S/I_pol) + {d - 1}", a, p, a <= p + d - 1)
        out += _cmp(f"reg(S/I_pol) <= reg(R/I) + {d - 1}", p, a, p <= a + d - 1)
    return out


def check_colon_shift(I, field=0):
    """(I_sft : x) = (I : x)_sft when p >= 1, (I : x^(q1-1)) = I_sft when p = 0."""
    if not has_height_two(I):
        return None
    out = []
    for s in _steps(I):
        i, n = s.variable, s.ideal.n
        if s.p >= 1:
            C = colon(s.ideal, var(i, n))
            induced = lowest_gap(C, i)
            if induced is None or induced.weight != s.weight:
                out.append(f"colon by x{i + 1} lost the gap of weight {s.weight}")
                continue
            lhs, rhs = colon(s.shifted, var(i, n)), shift_step(C, induced)
        else:
            lhs, rhs = colon(s.ideal, var(i, n, s.q1 - 1)), s.shifted
        out += _cmp(f"colon/shift exchange at x{i + 1} (p={s.p})", lhs, rhs, lhs == rhs)
    return out


def check_regular_element(I, field=0):
    """No associated prime of I_pol contains both the new variable and x."""
    if not has_height_two(I):
        return None
    out = []
    for s in _steps(I):
        new = s.polarized.n - 1
        bad = [str(P) for P in associated_primes(s.polarized)
               if new in P.variables and s.variable in P.variables]
        out += _cmp("primes of I_pol containing both variables", bad, [], not bad)
    return out


def check_shift_consistency(I, field=0):
    """Specializing the new variable to x or x^d gives I_sft or I."""
    if not has_height_two(I):
        return None
    out = []
    for s in _steps(I):
        g, f = substitute(s.polarized, s.ideal.n, [(s.variable, 1)]), substitute(s.polarized, s.ideal.n, [(s.variable, s.weight)])
        out += _cmp("I_pol at new = x", g, s.shifted, g == s.shifted)
        out += _cmp("I_pol at new = x^d", f, s.ideal, f == s.ideal)
        out += _cmp("I contained in I_sft", s.ideal, s.shifted, s.ideal.issubset(s.shifted))
    return out


def check_shift_ass_v(I, field=0):
    """Ass is preserved and v does not grow along each shift."""
    if not has_height_two(I):
        return None
    out = []
    for s in _steps(I):
        a, b = associated_primes(s.ideal), associated_primes(s.shifted)
        out += _cmp("Ass before/after shift", a, b, a == b)
        va, vb = v_number(s.ideal), v_number(s.shifted)
        out += _cmp("v before >= v after shift", va, vb, va >= vb)
    return out


def check_full_polarization(I, field=0):
    """Trace invariants: specializations, heights, depth/dim offsets by r."""
    if not has_height_two(I):
        return None
    t = full_polarization_trace(I)
    S = signature_of_ideal(I)
    out = _cmp("shift endpoint vs sgn(I)", t.signature, S, t.signature == S)
    out += _cmp("f-specialization vs I", t.specialize_f(), I, t.specialize_f() == I)
    out += _cmp("g-specialization vs sgn(I)", t.specialize_g(), S, t.specialize_g() == S)
    out += _cmp("weights >= 2", t.weights, 2, all(d >= 2 for d in t.weights))
    a, p, b = _inv(I, field), _inv(t.polarized, field), _inv(S, field)
    out += _cmp("ht(I), ht(I_pol), ht(sgn I)", (a.height, p.height), b.height, a.height == p.height == b.height)
    out += _cmp("dim(S/I_pol) vs dim(R/I)+r", p.dim, a.dim + t.r, p.dim == a.dim + t.r)
    out += _cmp("depth(S/I_pol) vs depth(R/I)+r", p.depth, a.depth + t.r, p.depth == a.depth + t.r)
    out += _cmp("reg(S/I_pol) vs reg(R/sgn I)", p.reg, b.reg, p.reg == b.reg)
    return out


# -- oracles for the building blocks -----------------------------------------

def check_decomposition(I, field=0):
    """Components intersect back to I and none of them is redundant."""
    comps = irreducible_decomposition(I)
    J = intersect_components(comps, I.n)
    out = _cmp("intersection of components vs I", J, I, J == I)
    for k in range(len(comps)):
        rest = comps[:k] + comps[k + 1:]
        if rest and intersect_components(rest, I.n) == I:
            out.append(f"component {comps[k]} is redundant")
    return out


def check_colon_oracle(I, m):
    """Brute-force membership: w in (I : m) iff w*m in I on the capped box."""
    C = colon(I, m)
    bounds = mul(I.lcm(), m)
    bad = [w for w in box_monomials(bounds) if contains(C, w) != contains(I, mul(w, m))]
    return _cmp("colon membership mismatches", bad[:3], [], not bad)


def check_betti_oracle(I, field=0, rng=None):
    """Betti tables: generator order, variable order, support, Euler sums."""
    B = betti_table(I, field)
    out = []
    rng = rng or random.Random(0)
    gens = list(I.gens)
    rng.shuffle(gens)
    B2 = betti_table(minimalize(gens, I.n), field)
    out += _cmp("table after shuffling generators", B2.entries, B.entries, B2.entries == B.entries)
    perm = list(range(I.n))
    rng.shuffle(perm)
    P = minimalize(([g[perm[k]] for k in range(I.n)] for g in I.gens), I.n)
    BP = betti_table(P, field)
    moved = {(i, tuple(a[perm[k]] for k in range(I.n))): b for (i, a), b in B.entries.items()}
    out += _cmp("table after permuting variables", BP.entries, moved, BP.entries == moved)
    lattice = set(lcm_lattice(I)) | {(0,) * I.n}
    stray = [a for (_, a) in B.entries if a not in lattice]
    out += _cmp("degrees outside the lcm lattice", stray, [], not stray)
    # Degrees off the lattice in the lcm box carry no homology at all.
    for a in box_monomials(I.lcm()):
        if a not in lattice and reduced_homology(koszul_complex_at_degree(I, a), field):
            out.append(f"homology at non-lattice degree {a}")
            break
    # Euler characteristic at a equals the inclusion-exclusion coefficient.
    euler = {}
    for k in range(1, I.q + 1):
        for S in itertools.combinations(I.gens, k):
            a = tuple(max(c) for c in zip(*S))
            euler[a] = euler.get(a, 0) + (-1) ** k
    for a in lattice - {(0,) * I.n}:
        chi = sum((-1) ** i * b for (i, c), b in B.entries.items() if c == a)
        if chi != euler.get(a, 0):
            out.append(f"Euler characteristic at {a}: {chi} vs {euler.get(a, 0)}")
    return out


# -- families built from graphs and squarefree ideals ------------------------

def check_weighted_squarefree(I, d, field=0):
    if not (I.is_squarefree() and has_height_two(I)):
        return None
    J = weighted_squarefree(I, d)
    S = signature_of_ideal(J)
    a, b = _inv(J, field), _inv(I, field)
    out = _cmp("sgn(J) vs I", S, I, S == I)
    out += _cmp("CM(J) vs CM(I)", a.cm, b.cm, a.cm == b.cm)
    out += _cmp("Gorenstein(J) vs Gorenstein(I)", a.gorenstein, b.gorenstein, a.gorenstein == b.gorenstein)
    return out


def check_oriented_graph(D, field=0, capped=True):
    """sgn(I(D)) against I(U); ``capped`` uses plain weight capping."""
    I = edge_ideal(D)
    if not I.is_proper() or not has_height_two(I):
        return None
    if capped and any(D.weights[v] > 1 for v in D.sinks()):
        return None
    U = cap_weights(D) if capped else signature_weights(D)
    IU = edge_ideal(U)
    S = signature_of_ideal(I)
    a, b = _inv(I, field), _inv(IU, field)
    out = _cmp("sgn(I(D)) vs I(U)", S, IU, S == IU)
    out += _cmp("CM(I(D)) vs CM(I(U))", a.cm, b.cm, a.cm == b.cm)
    out += _cmp("Gorenstein(I(D)) vs Gorenstein(I(U))", a.gorenstein, b.gorenstein, a.gorenstein == b.gorenstein)
    return out


# -- driver -------------------------------------------------------------------

_IDEAL_CHECKS = {
    "depth": (check_depth, {"nonprincipal": True}),
    "regularity": (check_regularity, {"nonprincipal": True}),
    "ass": (check_ass, {"height_two": True}),
    "vnumber": (check_vnumber, {"height_two": True}),
    "unmixed": (check_unmixed, {"height_two": True}),
    "dimension": (check_dimension, {"height_two": True}),
    "cohen-macaulay": (check_cohen_macaulay, {"height_two": True}),
    "gorenstein": (check_gorenstein, {"height_two": True}),
    "height-one": (check_height_one, {"nonprincipal": True}),
    "signature-basics": (check_signature_basics, {}),
    "shift-depth-dim": (check_shift_depth_dim, {"height_two": True}),
    "polarization-regularity": (check_polarization_regularity, {"height_two": True}),
    "regularity-bounds": (check_regularity_bounds, {"height_two": True}),
    "colon-shift": (check_colon_shift, {"height_two": True}),
    "regular-element": (check_regular_element, {"height_two": True}),
    "shift-consistency": (check_shift_consistency, {"height_two": True}),
    "shift-ass-vnumber": (check_shift_ass_v, {"height_two": True}),
    "full-polarization": (check_full_polarization, {"height_two": True}),
    "decomposition": (check_decomposition, {}),
    "betti-oracle": (check_betti_oracle, {}),
}

THEOREMS = tuple(_IDEAL_CHECKS) + ("colon-oracle", "weighted-squarefree", "oriented-graph", "oriented-graph-sinks")


@dataclass
class Failure:
    case: int
    messages: list
    document: str


@dataclass
class VerifyReport:
    theorem: str
    seed: int
    field: int
    cases: int = 0
    passed: int = 0
    skipped: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem, "seed": self.seed, "field": self.field,
            "cases": self.cases, "passed": self.passed, "skipped": self.skipped,
            "failures": [{"case": f.case, "messages": f.messages, "ideal": f.document} for f in self.failures],
        }

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} {self.theorem}: {self.passed}/{self.cases} passed"
                + (f", {self.skipped} outside hypotheses" if self.skipped else ""))


def _instances(theorem: str, count: int, bounds: Bounds, rng: random.Random):
    """Yield ``(payload, document)`` pairs for the theorem's random cases."""
    if theorem in _IDEAL_CHECKS:
        flags = _IDEAL_CHECKS[theorem][1]
        for _ in range(count):
            n = rng.randint(bounds.n_min, bounds.n_max)
            I = generate_random_ideal(n, bounds.q_max, bounds.exp_max, rng, **flags)
            yield I, serialize_ideal(I, symbolic=True)
    elif theorem == "colon-oracle":
        for _ in range(count):
            n = rng.randint(bounds.n_min, bounds.n_max)
            I = generate_random_ideal(n, bounds.q_max, bounds.exp_max, rng)
            m = tuple(rng.randint(0, bounds.exp_max) for _ in range(n))
            yield (I, m), serialize_ideal(I, symbolic=True) + f"# colon by {m}\n"
    elif theorem == "weighted-squarefree":
        for _ in range(count):
            n = rng.randint(max(bounds.n_min, 2), bounds.n_max)
            I = generate_random_ideal(n, bounds.q_max, 1, rng, squarefree=True, height_two=True)
            d = tuple(rng.randint(1, bounds.exp_max) for _ in range(n))
            yield (I, d), serialize_ideal(I, symbolic=True) + f"# weights {d}\n"
    elif theorem in ("oriented-graph", "oriented-graph-sinks"):
        produced = 0
        while produced < count:
            n = rng.randint(max(bounds.n_min, 3), max(bounds.n_max, 3))
            D = random_oriented_graph(n, rng, max_weight=bounds.exp_max,
                                      weighted_sinks=theorem == "oriented-graph-sinks")
            I = edge_ideal(D) if D.edges else None
            if I is None or not has_height_two(I):
                continue
            produced += 1
            yield D, serialize_ideal(I, symbolic=True) + f"# graph {D.edges} weights {D.weights}\n"
    else:
        raise KeyError(f"unknown theorem id {theorem!r}; choose from {', '.join(THEOREMS)}")


def check_instance(theorem: str, payload, field=0):
    if theorem in _IDEAL_CHECKS:
        return _IDEAL_CHECKS[theorem][0](payload, field)
    if theorem == "colon-oracle":
        return check_colon_oracle(*payload)
    if theorem == "weighted-squarefree":
        return check_weighted_squarefree(*payload, field=field)
    if theorem == "oriented-graph":
        return check_oriented_graph(payload, field, capped=True)
    if theorem == "oriented-graph-sinks":
        return check_oriented_graph(payload, field, capped=False)
    raise KeyError(f"unknown theorem id {theorem!r}")


def _run_one(args):
    theorem, payload, field = args
    return check_instance(theorem, payload, field)


def workers() -> int:
    try:
        return max(1, int(os.environ.get("MONOSIG_WORKERS", "1")))
    except ValueError:
        return 1


def run_verify(theorem: str, count: int = 100, bounds: Bounds = Bounds(), seed: int = 0, field=0) -> VerifyReport:
    """Run ``count`` seeded random cases of one check."""
    if theorem not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem!r}; choose from {', '.join(THEOREMS)}")
    rng = random.Random(seed)
    cases = list(_instances(theorem, count, bounds, rng))
    jobs = [(theorem, payload, field) for payload, _ in cases]
    nw = workers()
    if nw > 1:
        with ProcessPoolExecutor(nw) as ex:
            results = list(ex.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    report = VerifyReport(theorem, seed, field)
    for k, ((_, doc), res) in enumerate(zip(cases, results)):
        report.cases += 1
        if res is None:
            report.skipped += 1
        elif res:
            report.failures.append(Failure(k, res, doc))
        else:
            report.passed += 1
    return report


def check_ideal(theorem: str, I: MonomialIdeal, field=0):
    """Apply one ideal-level check to a given ideal (None: outside hypotheses)."""
    if theorem not in _IDEAL_CHECKS:
        raise KeyError(f"{theorem!r} does not take a single ideal")
    return _IDEAL_CHECKS[theorem][0](I, field)
