"""
Cocycle invariants of knots up to nine crossings
================================================

Color every closed braid in the bundled knot table with the tetrahedral
quandle S4, weight each coloring with a 2-cocycle over Z_2, and group knots
by the resulting state sum.
"""

from collections import defaultdict

from quandle_lab import load_cocycle, make_s4, state_sum
from quandle_lab.braids import load_knot_table
from quandle_lab.data import knot_table_path

s4 = make_s4()
phi, meta = load_cocycle("s4-phi", s4)
print("cocycle:", meta.get("source", "s4-phi"), "over Z_%d" % phi.modulus)

knots = load_knot_table(knot_table_path())
classes = defaultdict(list)
for rec in knots:
    value, count = state_sum(s4, phi, rec.braid, return_count=True)
    classes[str(value)].append(rec.name)

# four classes; the trivial value 4 counts only the constant colorings
for value, names in sorted(classes.items(), key=lambda kv: len(kv[1])):
    print(f"{value:>8}  {len(names):2d} knots  {' '.join(names[:8])}{' ...' if len(names) > 8 else ''}")

# another quandle tells apart knots this one cannot
z3 = load_cocycle("z3t-phi")[0]
fig8 = next(r for r in knots if r.name == "4_1")
print("4_1 over Z_3[T]/(T^2+1):", state_sum(z3.quandle, z3, fig8.braid))
