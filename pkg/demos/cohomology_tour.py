"""
Quandle cohomology of small quandles
====================================

Build a few quandles, look at their operation tables, and compute their
second and third cohomology over the integers and over Z_p.
"""

from quandle_lab import (cocycle_basis, cohomology_dim, cohomology_group_integral,
                         cohomology_group_mod, is_isomorphic, make_dihedral, make_s4, parse_quandle)

# dihedral quandle of order 4: i * j = 2j - i mod 4
r4 = make_dihedral(4)
print(r4.label)
print(r4.table)

# the same quandle presented as Z_2[T, T^-1]/(T^2 + 1)
alex = parse_quandle("A:2:1,0,1")
print("isomorphism onto R_4:", is_isomorphic(alex, r4))

# integral groups come from Smith forms of the coboundary matrices
for q in (make_dihedral(3), r4, make_s4()):
    for n in (2, 3):
        print(f"H^{n}({q.label}; Z) = {cohomology_group_integral(q, n)}")

# coefficients Z_4 pick up the Tor term of the next degree
print("H^3(S4; Z_4) =", cohomology_group_mod(make_s4(), 3, 4))

# dimensions over prime fields, a row of the Alexander table
lam = parse_quandle("L:8:5")
print("Lambda_8,5 H^2 dims:", [cohomology_dim(lam, 2, p) for p in (2, 3, 5, 7)])

# an explicit 3-cocycle of R_3 over Z_3, in the cocycle-file format
basis = cocycle_basis(make_dihedral(3), 3, 3)
print(len(basis), "basis cocycles; the first has", len(basis[0].terms()), "nonzero terms")
