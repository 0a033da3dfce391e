"""Signatures of monomial ideals and the invariants they preserve."""

from .decomposition import associated_primes, dimension_and_height, height, irreducible_decomposition, is_unmixed
from .graphs import WeightedOrientedGraph, edge_ideal, edge_ideal_from_digraph
from .homology import betti_table, homological_invariants
from .io import parse_ideal, parse_ideal_string, serialize_ideal
from .monomials import IncidenceMatrix, MonomialIdeal, colon, gcd_factor, incidence_matrix, minimalize
from .signature import (
    find_gap,
    full_polarization_trace,
    polarization_step,
    shift_step,
    signature_matrix,
    signature_of_ideal,
)
from .vnumber import v_number

__all__ = [
    "IncidenceMatrix", "MonomialIdeal", "WeightedOrientedGraph",
    "associated_primes", "betti_table", "colon", "dimension_and_height",
    "edge_ideal", "edge_ideal_from_digraph", "find_gap", "full_polarization_trace",
    "gcd_factor", "height", "homological_invariants", "incidence_matrix",
    "irreducible_decomposition", "is_unmixed", "minimalize", "parse_ideal",
    "parse_ideal_string", "polarization_step", "serialize_ideal", "shift_step",
    "signature_matrix", "signature_of_ideal", "v_number",
]
