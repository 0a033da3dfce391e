"""Which 3x3 signature matrices give Cohen-Macaulay ideals?"""

from monosig.catalog import cm_ideals, matrices_3x3
from monosig.reports import classify, render_classify

entries = [(f"M{k}", A) for k, A in enumerate(matrices_3x3(), 1)]
report = classify(entries, filter="cm")
print(render_classify(report))

# The survivors should be exactly the stored list.
found = {tuple(e["signature"]) for e in report["entries"]}
stored = {tuple(str(I)[1:-1].split(", ")) for I in cm_ideals("3x3")}
print("matches stored list:", found == stored)

# Across all stored lists only the maximal ideal is Gorenstein.
every = [(str(k), I) for k, I in enumerate(cm_ideals())]
print([e["signature"] for e in classify(every, filter="gorenstein")["entries"]])
