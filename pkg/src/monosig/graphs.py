"""Edge ideals of weighted oriented graphs and weighted squarefree ideals."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .monomials import MonomialIdeal, minimalize


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """Vertices 0..n-1, directed edges (i, j), positive vertex weights."""

    n: int
    edges: tuple
    weights: tuple

    def __post_init__(self):
        if len(self.weights) != self.n or any(w < 1 for w in self.weights):
            raise ValueError("need one positive weight per vertex")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) leaves the vertex set")
            pair = frozenset((i, j))
            if pair in seen:
                raise ValueError(f"repeated edge between {i} and {j}")
            seen.add(pair)

    def sinks(self) -> set:
        """Vertices with incoming edges and no outgoing edge."""
        heads = {j for _, j in self.edges}
        tails = {i for i, _ in self.edges}
        return heads - tails

    def with_weights(self, weights) -> "WeightedOrientedGraph":
        return WeightedOrientedGraph(self.n, self.edges, tuple(weights))


def edge_ideal(D: WeightedOrientedGraph) -> MonomialIdeal:
    """I(D) = (x_i x_j^{w_j} : (i, j) an edge)."""
    gens = []
    for i, j in D.edges:
        m = [0] * D.n
        m[i] = 1
        m[j] = D.weights[j]
        gens.append(m)
    return minimalize(gens, D.n)


def cap_weights(D: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """Every weight >= 2 replaced by 2."""
    return D.with_weights(min(w, 2) for w in D.weights)


def signature_weights(D: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """Weights whose edge ideal is sgn(I(D)) when ht(I(D)) >= 2.

    Like :func:`cap_weights`, except that sinks get weight 1: a sink's row
    in the incidence matrix only takes the values 0 and w.
    """
    sinks = D.sinks()
    return D.with_weights(1 if v in sinks else min(w, 2) for v, w in enumerate(D.weights))


def random_oriented_graph(n: int, rng: random.Random, edge_prob: float = 0.5,
                          max_weight: int = 4, weighted_sinks: bool = True) -> WeightedOrientedGraph:
    """Random orientation of a random simple graph with random weights.

    With ``weighted_sinks=False`` sinks keep weight 1.
    """
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                edges.append((i, j) if rng.random() < 0.5 else (j, i))
    weights = [rng.randint(1, max_weight) for _ in range(n)]
    D = WeightedOrientedGraph(n, tuple(edges), tuple(weights))
    if not weighted_sinks:
        D = D.with_weights(1 if v in D.sinks() else w for v, w in enumerate(weights))
    return D


def weighted_squarefree(I: MonomialIdeal, d) -> MonomialIdeal:
    """Ideal generated by x_1^{d_1 a_1} ... x_n^{d_n a_n} for x^a in G(I), I squarefree."""
    if not I.is_squarefree():
        raise ValueError("ideal must be squarefree")
    if len(d) != I.n or any(k < 1 for k in d):
        raise ValueError("need n positive integers")
    return minimalize(([k * e for k, e in zip(d, g)] for g in I.gens), I.n)


edge_ideal_from_digraph = edge_ideal
