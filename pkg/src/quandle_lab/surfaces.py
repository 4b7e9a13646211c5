"""3-cocycle state sums of a few knotted surfaces, from closed formulas.

* twist-spun torus knots tau^k T(2, m), by the movie formula (Alexander
  quandles, dihedral ones included through T = -1) and by the surface-braid
  formula for k = 2 (any finite quandle);
* the deform-spun figure-eight knot over S4.

Values live in Z[A] with A = Z_q (or Z); a 3-cocycle value v contributes the
monomial t^v, so exponents add along a product.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import Cochain, is_cocycle
from .groupring import GroupRingElement
from .quandle import Quandle, act_word, word_power

__all__ = [
    "SurfaceError",
    "g_value",
    "g_closed_form",
    "g_sequence",
    "h_value",
    "theta_exponent",
    "theta_products",
    "movie_admissible",
    "twist_spin_movie",
    "t_order",
    "dihedral_colors_nontrivially",
    "PeriodCheck",
    "twist_spin_period_check",
    "chart_admissible",
    "twist_spin_chart",
    "deform_spun_fig8",
    "conjugate_symmetry",
]


class SurfaceError(ValueError):
    pass


def _need_alexander(q: Quandle):
    if q.alexander is None:
        raise SurfaceError(f"{q.label}: the movie formulas need an Alexander quandle (T must be available)")
    return q.alexander


def _need_3cocycle(q: Quandle, theta: Cochain, check: bool):
    if theta.degree != 3:
        raise SurfaceError("surface state sums need a 3-cocycle")
    if theta.quandle != q:
        raise SurfaceError("cocycle belongs to a different quandle")
    if check and not is_cocycle(theta):
        raise SurfaceError("the cochain is not a 3-cocycle")


# --- the G and h sequences ---------------------------------------------------

def g_sequence(q: Quandle, x: int, y: int, top: int) -> dict[int, int]:
    """``{s: G(s)}`` for ``-2 <= s <= top``, by G(s+1) = G(s-1) * G(s)."""
    _need_alexander(q)
    seq = {-2: q.inv_op(y, x), -1: x, 0: y}
    for s in range(0, top):
        seq[s + 1] = q.op(seq[s - 1], seq[s])
    return seq


def g_value(q: Quandle, x: int, y: int, s: int) -> int:
    if s < -2:
        raise SurfaceError("G(s) is defined for s >= -2")
    return g_sequence(q, x, y, max(s, 0))[s]


def g_closed_form(q: Quandle, x: int, y: int, s: int) -> int:
    """x * sum_{j=1..s} (-1)^(j+1) T^j + y * sum_{j=0..s} (-1)^j T^j, for s >= 0."""
    ring = _need_alexander(q)
    if s < 0:
        raise SurfaceError("closed form holds for s >= 0")
    total = 0
    for j in range(s + 1):
        sign = 1 if j % 2 == 0 else -1
        total = ring.add(total, ring.scale(ring.mul_t(y, j), sign))
        if j >= 1:
            total = ring.add(total, ring.scale(ring.mul_t(x, j), -sign))
    return total


def h_value(q: Quandle, x: int, y: int, n: int) -> int:
    """h(x,y,0) = y and T h(n+1) + (1-T) x = h(n), i.e. h(n+1) * x = h(n)."""
    _need_alexander(q)
    if n < 0:
        raise SurfaceError("h(x, y, n) needs n >= 0")
    cur = y
    for _ in range(n):
        cur = q.inv_op(cur, x)
    return cur


# --- movie formula -------------------------------------------------------------

def theta_exponent(q: Quandle, theta: Cochain, m: int, x: int, y: int) -> int:
    """Exponent of t in Theta_0 * Theta_1 at the pair (x, y)."""
    g = g_sequence(q, x, y, m)
    f = theta.evaluate
    e = 0
    for j in range(m):
        e -= f((g[-2], g[j - 1], g[j]))
        e += f((g[j - 2], g[j - 1], g[-2]))
    return e


def theta_products(q: Quandle, theta: Cochain, m: int, x: int, y: int) -> GroupRingElement:
    return GroupRingElement.monomial(theta_exponent(q, theta, m, x, y), theta.modulus)


def movie_admissible(q: Quandle, m: int, k: int, x: int, y: int) -> bool:
    """The pair closes the 2-strand tangle (G(m-1)=x, G(m)=y) and returns after k twists."""
    g = g_sequence(q, x, y, m)
    return g[m - 1] == x and g[m] == y and h_value(q, x, y, k) == y


def twist_spin_movie(q: Quandle, theta: Cochain, m: int, k: int, check: bool = True,
                     return_count: bool = False):
    """State sum of tau^k T(2, m): sum over admissible (x, y) of
    prod_{n<k} Theta_0 Theta_1 (x, h(x, y, n))."""
    if m < 3:
        raise SurfaceError("m must be >= 3")
    if k < 0:
        raise SurfaceError("k must be >= 0")
    _need_alexander(q)
    _need_3cocycle(q, theta, check)
    exps = []
    for x in range(q.order):
        for y in range(q.order):
            if not movie_admissible(q, m, k, x, y):
                continue
            e, z = 0, y
            for _ in range(k):
                e += theta_exponent(q, theta, m, x, z)
                z = q.inv_op(z, x)
            exps.append(e)
    value = GroupRingElement.from_exponents(exps, theta.modulus)
    return (value, len(exps)) if return_count else value


def t_order(q: Quandle) -> int:
    """Least n >= 1 with T^n = 1 in the ring."""
    ring = _need_alexander(q)
    one = ring.index([1] + [0] * (ring.degree - 1))
    cur, n = ring.mul_t(one), 1
    while cur != one:
        cur, n = ring.mul_t(cur), n + 1
    return n


def dihedral_colors_nontrivially(h: int, m: int, k: int) -> bool:
    """Whether R_h has a non-constant admissible pair for tau^k T(2, m).

    With T = -1, G(m-1) = x + m(y-x), G(m) = y + m(y-x) and h(x,y,k) is y
    for even k, 2x - y for odd k; so a difference d = y - x != 0 must satisfy
    m d = 0, plus 2 d = 0 when k is odd.
    """
    return any((m * d) % h == 0 and (k % 2 == 0 or (2 * d) % h == 0) for d in range(1, h))


@dataclass
class PeriodCheck:
    quandle: str
    m: int
    period: int
    values: dict[int, GroupRingElement] = field(default_factory=dict)
    coloring_counts: dict[int, int] = field(default_factory=dict)
    dihedral_ok: bool | None = None

    @property
    def periodic(self) -> bool:
        vals = self.values
        return all(vals[k] == vals[k + self.period] for k in vals if k + self.period in vals)

    @property
    def ok(self) -> bool:
        return self.periodic and self.dihedral_ok is not False


def twist_spin_period_check(q: Quandle, theta: Cochain, m: int, k_base: int = 0,
                            spans: int = 2) -> PeriodCheck:
    """Evaluate k = k_base .. k_base + spans*period, period = ord(T) * |A|.

    For dihedral quandles the count of colorings is also compared with
    ``dihedral_colors_nontrivially``.
    """
    if not theta.modulus:
        raise SurfaceError("periodicity needs finite coefficients Z_q")
    period = t_order(q) * theta.modulus
    rep = PeriodCheck(q.label, m, period)
    for k in range(k_base, k_base + spans * period + 1):
        val, count = twist_spin_movie(q, theta, m, k, check=(k == k_base), return_count=True)
        rep.values[k] = val
        rep.coloring_counts[k] = count
    spec = getattr(q, "spec", "") or ""
    if spec.startswith("R:"):
        h = q.order
        rep.dihedral_ok = all((c > h) == dihedral_colors_nontrivially(h, m, k)
                              for k, c in rep.coloring_counts.items())
    return rep


# --- surface-braid (chart) formula for k = 2 ----------------------------------

def _pair(a: int, b: int, e: int):
    return word_power([(a, 1), (b, 1)], e)


def chart_admissible(q: Quandle, m: int, y1: int, y2: int) -> bool:
    n = m // 2
    if m % 2:
        close = act_word(q, y2, _pair(y1, y2, n)) == y1
    else:
        close = act_word(q, y1, _pair(y2, y1, n)) == y1
    return close and act_word(q, y1, [(y2, 1), (y2, 1)]) == y1


def _chart_exponent(q: Quandle, f, m: int, y1: int, y2: int) -> int:
    n = m // 2
    n1 = n if m % 2 else n - 1

    def a(x, *word):
        return act_word(q, x, [letter for part in word for letter in part])

    inv1 = [(y1, -1)]
    y1bar = a(y1, [(y2, 1)], inv1)      # y1 * y2 y1^-1
    e = 0
    for k in range(1, n1 + 1):
        e -= f((a(y2, _pair(y1, y2, k - 1), inv1), a(y1, _pair(y2, y1, k), inv1, inv1), y1))
        e -= f((a(y2, _pair(y1, y2, k - 2)), a(y1, _pair(y2, y1, k - 2), [(y2, 1)]), y1bar))
        e += f((y1bar, a(y1, _pair(y2, y1, k - 2), [(y2, 1)]), a(y2, _pair(y1, y2, k - 1))))
        e += f((y1, a(y2, _pair(y1, y2, k - 1)), a(y1, _pair(y2, y1, k - 1), [(y2, 1)])))
    for k in range(1, n):
        e -= f((a(y1, _pair(y2, y1, k), inv1, inv1), a(y2, _pair(y1, y2, k), inv1), y1))
        e += f((y1, a(y1, _pair(y2, y1, k - 1), [(y2, 1)]), a(y2, _pair(y1, y2, k))))
    for k in range(1, n + 1):
        e -= f((a(y1, _pair(y2, y1, k - 3), [(y2, 1)]), a(y2, _pair(y1, y2, k - 2)), y1bar))
        e += f((y1bar, a(y2, _pair(y1, y2, k - 2)), a(y1, _pair(y2, y1, k - 2), [(y2, 1)])))
    return e


def twist_spin_chart(q: Quandle, theta: Cochain, m: int, check: bool = True,
                     return_count: bool = False):
    """State sum of tau^2 T(2, m) from its surface braid; word actions only, so any
    finite quandle works.  Its orientation is opposite to the movie's."""
    if m < 3:
        raise SurfaceError("m must be >= 3")
    _need_3cocycle(q, theta, check)
    f = theta.evaluate
    exps = [_chart_exponent(q, f, m, y1, y2)
            for y1 in range(q.order) for y2 in range(q.order)
            if chart_admissible(q, m, y1, y2)]
    value = GroupRingElement.from_exponents(exps, theta.modulus)
    return (value, len(exps)) if return_count else value


# --- deform-spun figure eight ----------------------------------------------------

def deform_spun_fig8(theta: Cochain, convention: str = "d_star_b", check: bool = True):
    """Sum over (a, b) in S4 x S4 of
    theta(b,c,a) theta(c,b,c) theta(b,a,b) theta(a,b,c)
    / (theta(c,d,a) theta(d,c,d) theta(b,c,b) theta(c,b,d)),  with c = b*d.

    ``convention`` fixes d: ``"d_star_b"`` (default) takes the d with d*b = a;
    ``"a_star_b"`` takes d = a*b.  Only the default gives a state sum that
    matches the diagram (the other is kept for comparison).
    """
    q = theta.quandle
    if q.spec != "S4":
        raise SurfaceError("the figure-eight formula is for the quandle S4")
    if convention not in ("d_star_b", "a_star_b"):
        raise SurfaceError(f"unknown convention {convention!r}")
    _need_3cocycle(q, theta, check)
    f = theta.evaluate
    exps = []
    for a in range(4):
        for b in range(4):
            d = q.inv_op(a, b) if convention == "d_star_b" else q.op(a, b)
            c = q.op(b, d)
            exps.append(f((b, c, a)) + f((c, b, c)) + f((b, a, b)) + f((a, b, c))
                        - f((c, d, a)) - f((d, c, d)) - f((b, c, b)) - f((c, b, d)))
    return GroupRingElement.from_exponents(exps, theta.modulus)


def conjugate_symmetry(value: GroupRingElement) -> GroupRingElement:
    """Invariant of the orientation-reversed mirror: t -> t^-1."""
    return value.conjugate()
