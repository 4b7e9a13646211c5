"""Finite quandles stored as operation tables.

Elements are the integers ``0..n-1`` and ``q.op(a, b)`` is ``a * b``.  The
table is materialized and checked against the three quandle axioms when the
object is built, so every :class:`Quandle` in circulation is valid.

Alexander quandles ``Z_n[T, T^-1]/(h(T))`` number their elements by the
coefficient vector of the reduced residue: ``c0 + c1 T + ... + c_{d-1} T^{d-1}``
has index ``c0 + c1 n + ... + c_{d-1} n^{d-1}``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "QuandleError",
    "AlexanderSpec",
    "Quandle",
    "check_axioms",
    "make_trivial",
    "make_dihedral",
    "make_alexander",
    "make_lambda",
    "make_s4",
    "inv_op",
    "dual",
    "is_isomorphic",
    "act_word",
    "word_power",
    "invert_word",
    "parse_quandle",
]


class QuandleError(ValueError):
    """Invalid quandle table or construction parameters."""


def _unit_inverse(a: int, n: int) -> int:
    if math.gcd(a % n, n) != 1:
        raise QuandleError(f"{a} is not a unit mod {n}")
    return pow(a, -1, n)


@dataclass(frozen=True)
class AlexanderSpec:
    """Ring data for ``Z_n[T, T^-1]/(h(T))``.

    ``poly`` holds ascending coefficients of a monic ``h`` with entries in
    ``0..n-1``; use :meth:`normalized` to build one from arbitrary Laurent
    coefficients.
    """

    modulus: int
    poly: tuple[int, ...]

    def __post_init__(self):
        n, h = self.modulus, self.poly
        if n < 2:
            raise QuandleError("modulus must be at least 2")
        if len(h) < 2:
            raise QuandleError("h(T) must have positive degree")
        if h[-1] != 1 or any(not 0 <= c < n for c in h):
            raise QuandleError("poly must be monic and reduced; use AlexanderSpec.normalized")
        if math.gcd(h[0], n) != 1:
            raise QuandleError(f"T is not invertible: constant term {h[0]} shares a factor with {n}")

    @classmethod
    def normalized(cls, modulus: int, coeffs: Sequence[int]) -> "AlexanderSpec":
        n = modulus
        c = [x % n for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        # divide out a power of T: T is a unit in the Laurent ring
        while c and c[0] == 0:
            c.pop(0)
        if len(c) < 2:
            raise QuandleError(f"h(T) = {list(coeffs)} has no positive-degree part mod {n}")
        lead = _unit_inverse(c[-1], n)
        if math.gcd(c[0], n) != 1:
            raise QuandleError(
                f"T is not invertible in Z_{n}[T]/(h): constant term {c[0]} is not a unit")
        return cls(n, tuple((x * lead) % n for x in c))

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    @property
    def order(self) -> int:
        return self.modulus ** self.degree

    # ring arithmetic on element indices ---------------------------------
    def coeffs(self, index: int) -> list[int]:
        n = self.modulus
        out = []
        for _ in range(self.degree):
            index, r = divmod(index, n)
            out.append(r)
        return out

    def index(self, coeffs: Sequence[int]) -> int:
        n = self.modulus
        return sum((c % n) * n ** i for i, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        return self.index([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def sub(self, a: int, b: int) -> int:
        return self.index([x - y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def scale(self, a: int, k: int) -> int:
        return self.index([k * x for x in self.coeffs(a)])

    def mul_t(self, a: int, power: int = 1) -> int:
        """Multiply by ``T**power`` (negative powers allowed)."""
        c = self.coeffs(a)
        n, h, d = self.modulus, self.poly, self.degree
        if power >= 0:
            for _ in range(power):
                top = c[-1]
                c = [0] + c[:-1]
                c = [(x - top * h[i]) % n for i, x in enumerate(c)]
        else:
            h0_inv = pow(h[0], -1, n)
            for _ in range(-power):
                # T^-1 c: subtract a multiple of h to clear the constant term, then shift down
                f = (c[0] * h0_inv) % n
                c = [(x - f * h[i]) % n for i, x in enumerate(c)] + [(-f * h[d]) % n]
                c = c[1:]
        return self.index(c)

    def mul(self, a: int, b: int) -> int:
        total = 0
        term = a
        for cb in self.coeffs(b):
            total = self.add(total, self.scale(term, cb))
            term = self.mul_t(term)
        return total

    def element_name(self, index: int) -> str:
        parts = []
        for i, c in enumerate(self.coeffs(index)):
            if c == 0:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if i == 0:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts) if parts else "0"

    def element_from_name(self, text: str) -> int:
        """Inverse of :meth:`element_name`; accepts forms like ``2+T``, ``1 + 2T``, ``2*T^2``."""
        coeffs = [0] * self.degree
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise QuandleError("empty element name")
        for sign, coef, var, power in re.findall(r"([+-]?)(\d*)(T?)(?:\^(\d+))?", s):
            if not coef and not var:
                continue
            value = int(coef) if coef else 1
            if sign == "-":
                value = -value
            e = (int(power) if power else 1) if var else 0
            if e >= self.degree:
                raise QuandleError(f"power T^{e} not reduced in {text!r}")
            coeffs[e] += value
        return self.index(coeffs)

    def label(self) -> str:
        terms = []
        for i, c in enumerate(self.poly):
            if c == 0:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return f"Z_{self.modulus}[T,T^-1]/({'+'.join(terms)})"


class Quandle:
    """A finite quandle given by its full operation table.

    Parameters
    ----------
    table : n x n array-like of ints
        ``table[a][b] = a * b``.
    label : str
        Display name.
    alexander : AlexanderSpec, optional
        Ring structure when the table comes from an Alexander module; needed
        by the torus and twist-spin routines that use ``T`` explicitly.
    """

    def __init__(self, table, label: str = "", alexander: AlexanderSpec | None = None,
                 spec: str | None = None):
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise QuandleError("table must be a non-empty square array")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise QuandleError("table entries out of range")
        check_axioms(t)
        inv = np.empty_like(t)
        cols = np.arange(n)
        for b in range(n):
            inv[t[:, b], b] = cols
        t.setflags(write=False)
        inv.setflags(write=False)
        self.table = t
        self.inv_table = inv
        self.label = label or f"Q{n}"
        self.alexander = alexander
        self.spec = spec

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    def op(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv_op(self, a: int, b: int) -> int:
        """The unique ``c`` with ``c * b = a``."""
        return int(self.inv_table[a, b])

    def element_name(self, a: int) -> str:
        if self.alexander is not None and self.alexander.degree > 1:
            return self.alexander.element_name(a)
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Quandle) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"Quandle({self.label!r}, order={self.order})"


def check_axioms(table) -> None:
    """Raise :class:`QuandleError` naming the first failed axiom."""
    t = np.asarray(table)
    n = t.shape[0]
    diag = t[np.arange(n), np.arange(n)]
    bad = np.nonzero(diag != np.arange(n))[0]
    if bad.size:
        a = int(bad[0])
        raise QuandleError(f"axiom I fails: {a}*{a} = {int(diag[a])}")
    for b in range(n):
        if len(set(t[:, b].tolist())) != n:
            raise QuandleError(f"axiom II fails: right multiplication by {b} is not a bijection")
    # (a*b)*c == (a*c)*(b*c) for all a, b, c
    lhs = t[t[:, :, None], np.arange(n)[None, None, :]]
    ac = t[:, None, :].repeat(n, axis=1)
    bc = t[None, :, :].repeat(n, axis=0)
    rhs = t[ac, bc]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        a, b, c = (int(x) for x in bad[0])
        raise QuandleError(f"axiom III fails at (a, b, c) = ({a}, {b}, {c})")


def make_trivial(n: int) -> Quandle:
    if n < 1:
        raise QuandleError("order must be positive")
    table = np.repeat(np.arange(n)[:, None], n, axis=1)
    return Quandle(table, label=f"T_{n}", spec=f"T:{n}")


def make_dihedral(n: int) -> Quandle:
    """R_n with ``i * j = 2j - i (mod n)``; carries the Alexander structure ``T = -1``."""
    if n < 1:
        raise QuandleError("order must be positive")
    i = np.arange(n)
    table = (2 * i[None, :] - i[:, None]) % n
    alex = AlexanderSpec(n, (1, 1)) if n >= 2 else None
    return Quandle(table, label=f"R_{n}", alexander=alex, spec=f"R:{n}")


def make_alexander(spec: AlexanderSpec, label: str | None = None) -> Quandle:
    n = spec.order
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            # a*b = T(a - b) + b
            table[a, b] = spec.add(spec.mul_t(spec.sub(a, b)), b)
    poly = ",".join(str(c) for c in spec.poly)
    return Quandle(table, label=label or spec.label(), alexander=spec,
                   spec=f"A:{spec.modulus}:{poly}")


def make_lambda(p: int, a: int) -> Quandle:
    """``Lambda_{p,a} = Z_p[T, T^-1]/(T - a)``; rejected when ``gcd(a, p) > 1``."""
    if math.gcd(a, p) != 1:
        raise QuandleError(f"Lambda_{{{p},{a}}} is not a quandle: gcd({a}, {p}) > 1")
    q = make_alexander(AlexanderSpec.normalized(p, [-a, 1]), label=f"Lambda_{p},{a % p}")
    q.spec = f"L:{p}:{a % p}"
    return q


# rows are the products x*0, x*1, x*2, x*3
_S4_TABLE = [
    [0, 2, 3, 1],
    [3, 1, 0, 2],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
]


def make_s4() -> Quandle:
    """The four 3-cycles ``0=(243), 1=(134), 2=(142), 3=(123)`` under conjugation.

    Isomorphic to ``A:2:1,1,1`` by swapping the labels 2 and 3; the ring
    structure is not attached because the labels differ.
    """
    return Quandle(_S4_TABLE, label="S4", spec="S4")


def inv_op(q: Quandle, a: int, b: int) -> int:
    return q.inv_op(a, b)


def dual(q: Quandle) -> Quandle:
    """Same set with ``a *' b`` the unique ``c`` such that ``c * b = a``."""
    d = Quandle(np.array(q.inv_table), label=f"dual({q.label})")
    return d


def _row_profile(t: np.ndarray) -> list[tuple[int, int]]:
    n = t.shape[0]
    out = []
    for a in range(n):
        fixed_as_left = int(np.sum(t[a, :] == a))
        fixed_as_right = int(np.sum(t[:, a] == np.arange(n)))
        out.append((fixed_as_left, fixed_as_right))
    return out


def is_isomorphic(q1: Quandle, q2: Quandle) -> list[int] | None:
    """Lexicographically least bijection ``f`` with ``f(a*b) = f(a)*f(b)``, or ``None``."""
    if q1.order != q2.order:
        return None
    n = q1.order
    t1, t2 = q1.table, q2.table
    p1, p2 = _row_profile(t1), _row_profile(t2)
    if sorted(p1) != sorted(p2):
        return None
    f = [-1] * n
    used = [False] * n

    def consistent(a: int) -> bool:
        fa = f[a]
        for b in range(a + 1):
            fb = f[b]
            for x, y, fx, fy in ((a, b, fa, fb), (b, a, fb, fa)):
                prod = int(t1[x, y])
                img = int(t2[fx, fy])
                if f[prod] >= 0:
                    if f[prod] != img:
                        return False
                elif used[img]:
                    return False
        return True

    def search(a: int) -> bool:
        if a == n:
            return True
        for cand in range(n):
            if used[cand] or p1[a] != p2[cand]:
                continue
            f[a] = cand
            used[cand] = True
            if consistent(a) and search(a + 1):
                return True
            f[a] = -1
            used[cand] = False
        return False

    return list(f) if search(0) else None


def _check_word(word) -> None:
    for letter in word:
        if len(letter) != 2 or letter[1] not in (1, -1):
            raise QuandleError(f"bad word letter {letter!r}; exponents must be +1 or -1")


def act_word(q: Quandle, x: int, word: Iterable[tuple[int, int]]) -> int:
    """Right action ``x * w``, applied letter by letter from the left."""
    word = list(word)
    _check_word(word)
    t, it = q.table, q.inv_table
    for y, e in word:
        x = int(t[x, y]) if e == 1 else int(it[x, y])
    return x


def invert_word(word: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(y, -e) for y, e in reversed(word)]


def word_power(word: Sequence[tuple[int, int]], k: int) -> list[tuple[int, int]]:
    """``word**k``; negative ``k`` repeats the inverse word."""
    base = list(word) if k >= 0 else invert_word(word)
    return base * abs(k)


_SPEC_RE = re.compile(r"^\s*(T|R|A|L|S4)(?::(.*))?\s*$")


def parse_quandle(text: str) -> Quandle:
    """Build a quandle from ``T:n``, ``R:n``, ``S4``, ``A:n:c0,c1,...`` or ``L:p:a``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise QuandleError(f"unknown quandle spec {text!r}")
    kind, rest = m.group(1), m.group(2)
    try:
        if kind == "S4":
            if rest:
                raise QuandleError("S4 takes no parameters")
            return make_s4()
        if rest is None:
            raise QuandleError(f"spec {text!r} needs parameters")
        if kind == "T":
            return make_trivial(int(rest))
        if kind == "R":
            return make_dihedral(int(rest))
        if kind == "L":
            p, a = rest.split(":")
            return make_lambda(int(p), int(a))
        n, coeffs = rest.split(":")
        spec = AlexanderSpec.normalized(int(n), [int(c) for c in coeffs.split(",")])
        q = make_alexander(spec)
        return q
    except (TypeError, ValueError) as exc:
        if isinstance(exc, QuandleError):
            raise
        raise QuandleError(f"malformed quandle spec {text!r}: {exc}") from None
