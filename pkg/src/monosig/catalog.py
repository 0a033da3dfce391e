"""Reference families of ideals and matrices used by the classifier.

``MATRICES_3X3`` are the sixteen 3 x 3 signature matrices (rows are
variables) fed to the Cohen-Macaulay classifier. ``CM_3X3``, ``CM_4X3`` and
``CM_3X4`` list the Cohen-Macaulay signature ideals found among all
signature matrices of those sizes; every entry is written with
``x<k>^<e>`` factors joined by ``*``.
"""

from .io import parse_ideal_string
from .monomials import IncidenceMatrix

MATRICES_3X3 = (
    ((1,0,0),(0,1,0),(0,0,1)),
    ((0,0,1),(2,0,1),(0,2,1)),
    ((1,1,0),(1,0,1),(0,1,1)),
    ((1,1,0),(1,0,2),(0,1,2)),
    ((0,1,0),(1,0,0),(0,1,2)),
    ((1,0,0),(1,0,2),(0,2,1)),
    ((1,0,1),(1,1,0),(0,1,2)),
    ((0,1,2),(0,2,1),(2,0,1)),
    ((1,0,0),(1,1,0),(0,1,2)),
    ((1,0,0),(0,2,1),(0,1,2)),
    ((0,1,1),(1,2,0),(1,0,2)),
    ((0,1,2),(1,0,2),(1,2,0)),
    ((0,0,1),(1,0,2),(1,2,0)),
    ((0,1,1),(0,2,1),(2,0,1)),
    ((1,1,0),(0,2,1),(1,0,2)),
    ((1,2,0),(2,0,1),(0,1,2)),
)

CM_3X3 = (
    "x1, x2, x3",
    "x1*x2, x1*x3, x2*x3",
    "x1*x2, x1*x3, x2^2*x3^2",
    "x1*x2, x2*x3, x1*x3^2",
    "x1*x2, x2*x3, x3^2",
    "x1*x2^2, x2*x3, x1*x3^2",
    "x1^2*x2^2, x2*x3, x1*x3^2",
    "x1*x2^2, x2*x3, x3^2",
    "x1*x2^2, x1*x2*x3, x3^2",
    "x1*x2^2, x1*x3, x2*x3^2",
)

CM_4X3 = (
    "x1*x3, x2*x4, x3*x4",
    "x1*x3, x3*x4, x2*x4^2",
    "x1*x3^2, x3*x4, x2*x4^2",
    "x1*x2*x3^2, x2*x3*x4, x4^2",
    "x1*x2*x3, x2*x4, x3*x4",
    "x1*x2*x3, x3*x4, x2*x4^2",
    "x1*x2*x3^2, x2*x4, x3*x4",
    "x1*x2*x3^2, x3*x4, x2*x4^2",
    "x1*x2*x3^2, x2*x4, x3*x4^2",
    "x2*x3, x1*x2*x4, x3*x4^2",
    "x1*x2, x2*x3*x4, x3*x4^2",
    "x1*x2*x3, x2*x4, x3^2*x4^2",
    "x1*x2^2*x3^2, x2*x4, x3*x4",
    "x1*x2^2*x3^2, x3*x4, x2*x4^2",
    "x2*x3, x1*x2^2*x4, x3*x4^2",
    "x1*x2^2, x2*x3*x4, x3*x4^2",
    "x1*x2^2*x3, x2*x4, x3^2*x4^2",
    "x1*x2^2*x3, x1*x2*x4, x3*x4",
    "x1*x2^2*x3, x3*x4, x1*x2*x4^2",
    "x1*x2^2*x3, x1*x2*x4, x3*x4^2",
    "x1*x2^2*x3^2, x1*x2*x4, x3*x4",
    "x1*x2^2*x3^2, x3*x4, x1*x2*x4^2",
    "x1*x2^2*x3^2, x1*x2*x4, x3*x4^2",
    "x1*x2*x3, x1*x2^2*x4, x3*x4^2",
    "x1*x2^2, x1*x2*x3*x4, x3*x4^2",
    "x1*x2^2*x3, x1*x2*x4, x3^2*x4^2",
    "x1*x2, x1*x3^2*x4, x2*x3*x4^2",
    "x1*x2^2*x3, x1*x4, x2*x3^2*x4^2",
    "x1^2*x2*x3^2, x3*x4, x1*x2^2*x4^2",
)

CM_3X4 = (
    "x1, x2^2, x2*x3, x3^2",
    "x1*x2^2, x2^2*x3, x2*x3^2, x3^3",
    "x1*x2^3, x2^2*x3, x2*x3^2, x3^3",
    "x1*x2^2, x1*x2*x3, x2*x3^2, x3^3",
    "x1*x2^3, x1*x2^2*x3, x2*x3^2, x3^3",
    "x1*x2^2, x2^2*x3, x1*x3^2, x2*x3^2",
    "x1*x2^2, x2^2*x3, x2*x3^2, x1*x3^3",
    "x1*x2^3, x2^2*x3, x2*x3^2, x1*x3^3",
    "x1^2*x2, x1*x2*x3, x2*x3^2, x3^3",
    "x1^2*x2^2, x1*x2*x3, x2*x3^2, x3^3",
    "x1^2*x2^2, x1*x2^2*x3, x2*x3^2, x3^3",
    "x1^2*x2^3, x1*x2^2*x3, x2*x3^2, x3^3",
    "x1^2, x2^2, x1*x2*x3, x3^2",
    "x1^2*x2^2, x2^2*x3, x1*x3^2, x2*x3^2",
    "x1^2*x2^2, x2^2*x3, x2*x3^2, x1*x3^3",
    "x1^2*x2^3, x2^2*x3, x1*x3^2, x2*x3^2",
    "x1^2*x2^3, x2^2*x3, x2*x3^2, x1*x3^3",
    "x1*x2^3, x1*x2^2*x3, x1*x2*x3^2, x3^3",
    "x1*x2^2, x1*x2*x3, x1*x3^2, x2*x3^2",
    "x1*x2^2, x1*x2*x3, x2*x3^2, x1*x3^3",
    "x1*x2^2, x1*x2*x3, x1*x3^2, x2*x3^3",
    "x1*x2^3, x1*x2^2*x3, x1*x3^2, x2*x3^2",
    "x1*x2^3, x1*x2^2*x3, x2*x3^2, x1*x3^3",
    "x1*x2^3, x1*x2^2*x3, x1*x3^2, x2*x3^3",
    "x1*x2^2, x1*x2*x3, x1*x3^2, x2^2*x3^2",
    "x1*x2^2, x1*x2*x3, x2^2*x3^2, x1*x3^3",
    "x1*x2^2, x1*x2*x3, x1*x3^2, x2^2*x3^3",
    "x1*x2^3, x1*x2*x3, x2^2*x3^2, x1*x3^3",
    "x1*x2^3, x1*x2*x3, x1*x3^2, x2^2*x3^3",
    "x1*x2^2, x1*x2*x3, x1*x3^2, x2^3*x3^3",
    "x1^2*x2^2, x1*x2^2*x3, x1*x2*x3^2, x3^3",
    "x1^2*x2^3, x1*x2^2*x3, x1*x2*x3^2, x3^3",
    "x1^2*x2^2, x1*x2*x3, x1*x3^2, x2*x3^2",
    "x1^2*x2^2, x1*x2*x3, x2*x3^2, x1*x3^3",
    "x1^2*x2^2, x1*x2^2*x3, x1*x3^2, x2*x3^2",
    "x1^2*x2^2, x1*x2^2*x3, x2*x3^2, x1*x3^3",
    "x1^2*x2^2, x1*x2^2*x3, x1*x3^2, x2*x3^3",
    "x1^2*x2^3, x1*x2^2*x3, x1*x3^2, x2*x3^2",
    "x1^2*x2^3, x1*x2^2*x3, x2*x3^2, x1*x3^3",
    "x1^2*x2^3, x1*x2^2*x3, x1*x3^2, x2*x3^3",
    "x1*x2^2, x1^2*x3, x1*x2*x3, x2*x3^2",
    "x1*x2^2, x1*x2*x3, x1^2*x3^2, x2*x3^2",
    "x1*x2^2, x1*x2*x3, x2*x3^2, x1^2*x3^3",
    "x1*x2^2, x1*x2*x3, x1^2*x3^2, x2*x3^3",
    "x1*x2^3, x1*x2^2*x3, x1^2*x3^2, x2*x3^2",
    "x1*x2^3, x1*x2^2*x3, x2*x3^2, x1^2*x3^3",
    "x1^2*x2^2, x1*x2*x3, x1*x3^2, x2^2*x3^2",
    "x1^2*x2^2, x1*x2*x3, x2^2*x3^2, x1*x3^3",
    "x1^2*x2^2, x1*x2*x3, x1*x3^2, x2^2*x3^3",
    "x1^2*x2^3, x1*x2*x3, x1*x3^2, x2^2*x3^2",
    "x1^2*x2^3, x1*x2*x3, x2^2*x3^2, x1*x3^3",
    "x1^2*x2^3, x1*x2*x3, x1*x3^2, x2^2*x3^3",
    "x1*x2^2, x1*x2*x3, x1^2*x3^2, x2^2*x3^3",
    "x1*x2^3, x1*x2*x3, x1^2*x3^2, x2^2*x3^3",
    "x1^2*x2^2, x1*x2*x3, x1*x3^2, x2^3*x3^3",
    "x1^2*x2^3, x1^2*x2^2*x3, x1*x2*x3^2, x3^3",
    "x1^2*x2^3, x1^2*x2^2*x3, x1*x3^2, x2*x3^2",
    "x1^2*x2^3, x1^2*x2^2*x3, x2*x3^2, x1*x3^3",
    "x1^2*x2^3, x1^2*x2^2*x3, x1*x3^2, x2*x3^3",
    "x1^2*x2^2, x1*x2^2*x3, x1^2*x3^2, x2*x3^2",
    "x1^2*x2^2, x1*x2^2*x3, x2*x3^2, x1^2*x3^3",
    "x1^2*x2^3, x1*x2^2*x3, x1^2*x3^2, x2*x3^2",
    "x1^2*x2^3, x1*x2^2*x3, x2*x3^2, x1^2*x3^3",
    "x1^2*x2^3, x1^2*x2*x3, x1*x3^2, x2^2*x3^2",
    "x1^2*x2^3, x1^2*x2*x3, x1*x3^2, x2^2*x3^3",
    "x1^2*x2^2, x1*x2*x3, x1^2*x3^2, x2^2*x3^2",
    "x1^2*x2^2, x1*x2*x3, x2^2*x3^2, x1^2*x3^3",
    "x1^2*x2^3, x1*x2*x3, x2^2*x3^2, x1^2*x3^3",
    "x1^2*x2^3, x1^2*x3, x1*x2*x3^2, x2^2*x3^2",
    "x1^2*x2^3, x1*x2*x3, x1^2*x3^2, x2^2*x3^3",
    "x1^2*x2^3, x1^2*x3, x1*x2*x3^2, x2^2*x3^3",
    "x1^2*x2^2, x1^2*x2*x3, x1*x3^2, x2^3*x3^3",
    "x1^2*x2^2, x1*x2*x3, x1^2*x3^2, x2^3*x3^3",
    "x1^2*x2^2, x1^2*x3, x1*x2*x3^2, x2^3*x3^3",
    "x1^2*x2, x1^2*x3, x1*x2^2*x3^2, x2^3*x3^3",
    "x1^3*x2^3, x1^2*x2^2*x3, x2*x3^2, x1*x3^3",
    "x1^3*x2^3, x1*x2^2*x3, x2*x3^2, x1^2*x3^3",
    "x1^2*x2^3, x1*x2^2*x3, x2*x3^2, x1^3*x3^3",
    "x1^3*x2^3, x1*x2*x3, x2^2*x3^2, x1^2*x3^3",
    "x1^2*x2^3, x1*x2*x3, x1^3*x3^2, x2^2*x3^3",
)

SIGNATURE_EXAMPLE = "x1*x2*x3^2, x1^6*x3^7, x2^3*x4, x2*x3^3*x4, x2*x4^3"
ONE_GAP_EXAMPLE = "x2^3, x1*x2^2, x1^3*x3^2, x1^4*x2*x3"


def matrices_3x3() -> list:
    return [IncidenceMatrix.from_rows(m) for m in MATRICES_3X3]


def cm_ideals(which: str = "all") -> list:
    """Parsed Cohen-Macaulay lists: ``"3x3"``, ``"4x3"``, ``"3x4"`` or ``"all"``."""
    table = {"3x3": (CM_3X3, 3), "4x3": (CM_4X3, 4), "3x4": (CM_3X4, 3)}
    keys = list(table) if which == "all" else [which]
    out = []
    for k in keys:
        items, n = table[k]
        out.extend(parse_ideal_string(s, n) for s in items)
    return out
