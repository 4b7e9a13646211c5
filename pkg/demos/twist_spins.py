"""
Twist-spun torus knots and the figure-eight
===========================================

Knotted surfaces get 3-cocycle state sums.  Here the k-twist-spun torus
knots are evaluated from the movie formula, cross-checked against the
surface-braid formula for k = 2, and the deform-spun figure-eight knot is
evaluated over S4.
"""

from quandle_lab import (deform_spun_fig8, load_cocycle, make_s4, twist_spin_chart, twist_spin_movie,
                         twist_spin_period_check)

theta, _ = load_cocycle("3-2-A")
r3 = theta.quandle

# the 2-twist-spun trefoil, both ways; they differ by orientation
movie = twist_spin_movie(r3, theta, 3, 2)
chart = twist_spin_chart(r3, theta, 3)
print("movie:", movie, " chart:", chart, " conjugate(movie) == chart:", movie.conjugate() == chart)

# values repeat in k with period ord(T) * q = 2 * 3
rep = twist_spin_period_check(r3, theta, 3)
print("period", rep.period, "periodic:", rep.periodic)
print("  ".join(f"k={k}: {v}" for k, v in rep.values.items() if k < rep.period))

# R_6 over Z_3 with three different cocycles
for name in ("6-2-B-a", "6-2-B-b", "6-2-B-c"):
    f, _ = load_cocycle(name)
    print(f"tau^2 T(2,6) with {name}: {twist_spin_movie(f.quandle, f, 6, 2)}")

# the deform-spun figure-eight over S4
s4 = make_s4()
for name, mod, scale in (("eta11", 0, 1), ("eta1", 2, 1), ("eta1", 4, 2), ("eta2", 4, 1)):
    f, _ = load_cocycle(name, s4, modulus=mod, scale=scale)
    who = name if scale == 1 else f"{scale}*{name}"
    print(f"figure-eight, {who} over {'Z' if mod == 0 else 'Z_%d' % mod}: {deform_spun_fig8(f)}")
