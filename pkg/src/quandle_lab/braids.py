"""Quandle colorings of closed braids and the 2-cocycle state sum.

A letter ``i > 0`` is the positive crossing sigma_i, ``-i`` its inverse;
generators are 1-indexed and strands are colored left to right at the top.
Crossing rule: sigma_i sends the adjacent pair (a, b) to (b, a*b) with weight
phi(a, b); sigma_i^-1 sends (a, b) to (c, a), where c = inv_op(b, a) is the
element with c*a = b, with weight phi(c, a)^-1.  That is the only choice for
which sigma_i sigma_i^-1 acts trivially with cancelling weights.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cohomology import Cochain, is_cocycle
from .groupring import GroupRingElement, parse as parse_ring
from .linalg import nullspace_mod_p
from .quandle import Quandle

__all__ = [
    "BraidError",
    "BraidWord",
    "apply_letter",
    "colorings",
    "count_colorings",
    "state_sum",
    "KnotRecord",
    "load_knot_table",
    "load_expected",
    "HarnessRow",
    "HarnessReport",
    "table_harness",
]

CHUNK = 1 << 18


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise BraidError(f"letter {x} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, letters: str, strands: int) -> "BraidWord":
        text = letters.strip()
        try:
            word = [int(x) for x in text.split(",")] if text else []
        except ValueError:
            raise BraidError(f"malformed braid letters {letters!r}") from None
        return cls(strands, tuple(word))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise BraidError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ",".join(map(str, self.letters))


def apply_letter(q: Quandle, v, letter: int):
    """One crossing.  Returns (new colors, (weight argument pair, exponent))."""
    v = list(v)
    i = abs(letter) - 1
    a, b = v[i], v[i + 1]
    if letter > 0:
        v[i], v[i + 1] = b, q.op(a, b)
        return tuple(v), ((a, b), 1)
    c = q.inv_op(b, a)
    v[i], v[i + 1] = c, a
    return tuple(v), ((c, a), -1)


def _run(q: Quandle, word: BraidWord, start: np.ndarray, weights: np.ndarray | None):
    """Push a block of color vectors through the word; returns (end colors, weight sum)."""
    cur = start.copy()
    total = np.zeros(len(cur), dtype=np.int64)
    for x in word.letters:
        i = abs(x) - 1
        a = cur[:, i].copy()
        b = cur[:, i + 1].copy()
        if x > 0:
            if weights is not None:
                total += weights[a, b]
            cur[:, i] = b
            cur[:, i + 1] = q.table[a, b]
        else:
            c = q.inv_table[b, a]
            if weights is not None:
                total -= weights[c, a]
            cur[:, i] = c
            cur[:, i + 1] = a
    return cur, total


def _block(m: int, strands: int, lo: int, hi: int) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((hi - lo, strands), dtype=np.int64)
    for col in range(strands - 1, -1, -1):
        out[:, col] = idx % m
        idx //= m
    return out


def _linear_ok(q: Quandle) -> bool:
    spec = q.alexander
    if spec is None:
        return False
    n = spec.modulus
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def _linear_colorings(q: Quandle, word: BraidWord) -> np.ndarray:
    """Colorings of an Alexander quandle over a prime field, as kernel of (B(w) - I)."""
    spec = q.alexander
    p, d, m = spec.modulus, spec.degree, word.strands
    dim = d * m
    # images of the unit vectors; the color map is linear in coefficient vectors
    units = np.zeros((dim, m), dtype=np.int64)
    for s in range(m):
        for e in range(d):
            coeffs = [0] * d
            coeffs[e] = 1
            units[s * d + e, s] = spec.index(coeffs)
    images, _ = _run(q, word, units, None)
    mat = np.zeros((dim, dim), dtype=np.int64)
    for r in range(dim):
        for s in range(m):
            mat[r, s * d:(s + 1) * d] = spec.coeffs(int(images[r, s]))
    # row vectors v with v (B - I) = 0  <=>  (B - I)^T v^T = 0
    kernel = nullspace_mod_p((mat - np.eye(dim, dtype=np.int64)).T % p, p)
    if not kernel:
        vecs = np.zeros((1, dim), dtype=np.int64)
    else:
        basis = np.array(kernel)
        combos = _block(p, len(kernel), 0, p ** len(kernel))
        vecs = (combos @ basis) % p
    colors = np.empty((len(vecs), m), dtype=np.int64)
    powers = p ** np.arange(d, dtype=np.int64)
    for s in range(m):
        colors[:, s] = vecs[:, s * d:(s + 1) * d] @ powers
    order = np.lexsort(colors.T[::-1])
    return colors[order]


def colorings(q: Quandle, word: BraidWord, method: str = "auto") -> np.ndarray:
    """All top color vectors fixed by the word, lexicographic order, shape (count, strands).

    ``method`` is ``"brute"``, ``"linear"`` (Alexander quandles over Z_p only) or
    ``"auto"`` (linear when available).
    """
    if method not in ("auto", "brute", "linear"):
        raise BraidError(f"unknown coloring method {method!r}")
    if method == "linear" or (method == "auto" and _linear_ok(q)):
        if not _linear_ok(q):
            raise BraidError("linear coloring needs an Alexander quandle over a prime field")
        return _linear_colorings(q, word)
    m, n = q.order, word.strands
    found = []
    for lo in range(0, m ** n, CHUNK):
        start = _block(m, n, lo, min(m ** n, lo + CHUNK))
        end, _ = _run(q, word, start, None)
        found.append(start[np.all(end == start, axis=1)])
    return np.concatenate(found) if found else np.zeros((0, n), dtype=np.int64)


def count_colorings(q: Quandle, word: BraidWord) -> int:
    return len(colorings(q, word))


def _weights(phi: Cochain, q: Quandle, check: bool) -> np.ndarray:
    if phi.degree != 2:
        raise BraidError("state sums of classical links need a 2-cocycle")
    if phi.quandle != q:
        raise BraidError("cocycle belongs to a different quandle")
    if check and not is_cocycle(phi):
        raise BraidError("the cochain is not a 2-cocycle; its state sum would not be an invariant")
    return phi.value_table()


def state_sum(q: Quandle, phi: Cochain, word: BraidWord, method: str = "auto",
              check: bool = True, return_count: bool = False):
    """Sum over colorings of t^(sum of signed cocycle values), in Z[Z_modulus]."""
    weights = _weights(phi, q, check)
    cols = colorings(q, word, method)
    _, exps = _run(q, word, cols, weights)
    value = GroupRingElement.from_exponents(exps.tolist(), phi.modulus)
    return (value, len(cols)) if return_count else value


@dataclass(frozen=True)
class KnotRecord:
    name: str
    braid: BraidWord


def load_knot_table(path) -> list[KnotRecord]:
    """Rows ``name<TAB>strands<TAB>letters``; ``#`` lines are comments."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) == 2:
                parts.append("")
            if len(parts) != 3:
                raise BraidError(f"{path}:{lineno}: expected 3 tab-separated fields")
            name, strands, letters = parts
            try:
                m = int(strands)
            except ValueError:
                raise BraidError(f"{path}:{lineno}: bad strand count {strands!r}") from None
            try:
                records.append(KnotRecord(name.strip(), BraidWord.parse(letters, m)))
            except BraidError as exc:
                raise BraidError(f"{path}:{lineno}: {exc}") from None
    return records


def load_expected(path, modulus: int) -> dict[str, GroupRingElement]:
    """Rows ``name<TAB>value``."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise BraidError(f"{path}:{lineno}: expected name<TAB>value")
            out[parts[0]] = parse_ring(parts[1], modulus)
    return out


@dataclass
class HarnessRow:
    name: str
    value: GroupRingElement
    colorings: int
    expected: GroupRingElement | None = None

    @property
    def ok(self) -> bool | None:
        return None if self.expected is None else self.value == self.expected


@dataclass
class HarnessReport:
    rows: list[HarnessRow] = field(default_factory=list)

    @property
    def mismatches(self) -> list[HarnessRow]:
        return [r for r in self.rows if r.ok is False]

    @property
    def exit_status(self) -> int:
        return 1 if self.mismatches else 0

    def classes(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for r in self.rows:
            out.setdefault(str(r.value), []).append(r.name)
        return out

    def lines(self) -> list[str]:
        out = []
        for r in self.rows:
            if r.expected is None:
                out.append(f"{r.name}\t{r.value}")
            else:
                tag = "PASS" if r.ok else "FAIL"
                out.append(f"{tag}\t{r.name}\t{r.value}\texpected {r.expected}")
        return out


def table_harness(q: Quandle, phi: Cochain, records, expected: dict | None = None) -> HarnessReport:
    weights_ok = _weights(phi, q, True)  # validate once
    del weights_ok
    report = HarnessReport()
    for rec in records:
        value, count = state_sum(q, phi, rec.braid, check=False, return_count=True)
        exp = None if expected is None else expected.get(rec.name)
        report.rows.append(HarnessRow(rec.name, value, count, exp))
    return report

