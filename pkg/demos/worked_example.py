"""Walk a five-generator ideal down to its signature.

Run with ``python demos/worked_example.py`` after installing the package.
"""

from monosig import full_polarization_trace, homological_invariants, parse_ideal_string, signature_of_ideal, v_number
from monosig.catalog import SIGNATURE_EXAMPLE

I = parse_ideal_string(SIGNATURE_EXAMPLE)
print("I      =", I)

# The signature replaces every exponent by its rank within its row.
S = signature_of_ideal(I)
print("sgn(I) =", S)

# Depth survives, regularity and v-number can only go down.
for name, J in (("R/I", I), ("R/sgn(I)", S)):
    inv = homological_invariants(J)
    print(f"{name:9} depth={inv.depth} pd={inv.pd} reg={inv.reg} v={v_number(J)}")

# The same signature comes out of closing gaps one at a time.
t = full_polarization_trace(I)
for k, s in enumerate(t.steps, 1):
    print(f"step {k}: x{s.variable + 1} p={s.p} q={s.qs} weight={s.weight}")
    print("   shifted:", s.shifted)
assert t.signature == S

# Each step adds a variable; together they give the full polarization.
names = t.variable_names()
print("I_pol  =", t.polarized.to_str(names))
inv = homological_invariants(t.polarized)
print(f"S/I_pol dim={inv.dim} depth={inv.depth} reg={inv.reg}")

# Substituting z_k -> x^d_k recovers I, and z_k -> x recovers sgn(I).
print(t.specialize_f() == I, t.specialize_g() == S)
