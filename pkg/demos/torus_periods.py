"""
Color periods of torus links
============================

A torus link T(n, k) closes k copies of one braid block.  Once the block's
action on colors has period p, the state sum over Z_q only depends on k
modulo p*q, so long torus links are cheap.
"""

from quandle_lab import color_period, load_cocycle, parse_quandle, torus_invariant
from quandle_lab.torus import period_table

# computed periods next to the closed forms
for row in period_table(["L:8:3", "R:6", "A:3:1,0,1"], range(2, 7)):
    flag = "" if row["ok"] else "  <-- differs"
    print(f"{row['quandle']:>10} n={row['n']}: {row['computed']:>3} (closed form {row['predicted']}){flag}")

# over Lambda_8,5 the two-strand block has color period 4, so with Z_2
# coefficients the values repeat every 4 * 2 = 8 steps in k
lam = parse_quandle("L:8:5")
phi, _ = load_cocycle("lambda85-phi", lam)
p = color_period(lam, 2).color_period
print("color period of T(2, k) over Lambda_8,5:", p)
for k in range(10):
    print(f"  T(2,{k}) = {torus_invariant(lam, phi, 2, k)}")

# a long one: reduction keeps this at a handful of blocks
r8 = parse_quandle("R:8")
theta3, _ = load_cocycle("theta3", r8)
print("T(4,16) over R_8:", torus_invariant(r8, theta3, 4, 16))
print("T(4,1016) over R_8:", torus_invariant(r8, theta3, 4, 1016))
