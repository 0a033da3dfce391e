"""Edge ideals of weighted oriented graphs and their signatures."""

import random

from monosig import WeightedOrientedGraph, edge_ideal, homological_invariants, signature_of_ideal
from monosig.graphs import cap_weights, random_oriented_graph, signature_weights
from monosig.signature import has_height_two

# A directed 4-cycle with heavy weights: capping at 2 gives the signature.
D = WeightedOrientedGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)), (3, 5, 1, 2))
print(edge_ideal(D), "->", signature_of_ideal(edge_ideal(D)))
print("capped:", edge_ideal(cap_weights(D)))

# A sink only ever appears with exponent 0 or w, so its weight drops to 1.
D = WeightedOrientedGraph(4, ((0, 1), (2, 3)), (1, 2, 1, 1))
print(edge_ideal(D), "->", signature_of_ideal(edge_ideal(D)))
print("capped:", edge_ideal(cap_weights(D)), " sinks to 1:", edge_ideal(signature_weights(D)))

# Random check of the rule and of Cohen-Macaulayness.
rng = random.Random(1)
checked = 0
while checked < 50:
    D = random_oriented_graph(5, rng)
    if not D.edges or not has_height_two(edge_ideal(D)):
        continue
    I, U = edge_ideal(D), edge_ideal(signature_weights(D))
    assert signature_of_ideal(I) == U
    assert homological_invariants(I).cm == homological_invariants(U).cm
    checked += 1
print("50 random graphs agree")
