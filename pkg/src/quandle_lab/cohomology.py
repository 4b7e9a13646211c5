"""Quandle cochain complex in the characteristic-function basis.

Cochains live on the non-degenerate subcomplex: functions on n-tuples that
vanish whenever two consecutive entries agree.  ``modulus`` selects the
coefficient ring throughout: 0 for Z, ``m > 1`` for Z_m.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .linalg import elementary_divisors, invariant_factors_from_diagonal, nullspace_mod_p, rank_mod_p, rref_mod_p
from .quandle import Quandle

__all__ = [
    "CohomologyError",
    "TupleBasis",
    "Cochain",
    "CohomologyGroup",
    "coboundary_matrix",
    "rack_coboundary_matrix",
    "coboundary",
    "is_cocycle",
    "cohomologous",
    "cocycle_basis",
    "cohomology_dim",
    "cohomology_group_integral",
    "cohomology_group_mod",
    "parse_cocycle",
    "basis_for",
    "format_cocycle",
    "MAX_INTEGRAL_DEGREE",
    "MAX_INTEGRAL_ORDER",
]

MAX_INTEGRAL_DEGREE = 3
MAX_INTEGRAL_ORDER = 9


class CohomologyError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _prime_power(m: int) -> tuple[int, int] | None:
    for p in range(2, m + 1):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            return (p, e) if m == 1 else None
    return None


def _all_tuples(m: int, n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((m,) * n).reshape(n, -1).T
    return grid.astype(np.int64)


class TupleBasis:
    """Non-degenerate n-tuples of a quandle in lexicographic order."""

    def __init__(self, quandle: Quandle, degree: int):
        if degree < 0:
            raise CohomologyError("degree must be >= 0")
        self.quandle = quandle
        self.degree = degree
        m = quandle.order
        full = _all_tuples(m, degree)
        keep = np.all(full[:, 1:] != full[:, :-1], axis=1) if degree > 1 else np.ones(len(full), bool)
        self.array = full[keep]
        self.array.setflags(write=False)
        # full lexicographic index -> position in the basis, -1 for degenerate tuples
        self._lookup = np.full(len(full), -1, dtype=np.int64)
        self._lookup[np.flatnonzero(keep)] = np.arange(int(keep.sum()))
        self._powers = m ** np.arange(degree - 1, -1, -1, dtype=np.int64)

    @property
    def tuples(self) -> list[tuple[int, ...]]:
        return [tuple(int(v) for v in row) for row in self.array]

    def __len__(self):
        return len(self.array)

    def positions(self, tuples: np.ndarray) -> np.ndarray:
        """Basis positions of an (N, degree) array of tuples; -1 marks degenerate ones."""
        tuples = np.asarray(tuples, dtype=np.int64).reshape(-1, self.degree)
        return self._lookup[tuples @ self._powers]

    def index(self, tup) -> int:
        """Position of one tuple, or -1 if it is degenerate."""
        tup = tuple(int(v) for v in tup)
        if len(tup) != self.degree:
            raise CohomologyError(f"expected a {self.degree}-tuple, got {tup}")
        m = self.quandle.order
        if any(not 0 <= v < m for v in tup):
            raise CohomologyError(f"element out of range in {tup} (order {m})")
        return int(self._lookup[int(np.dot(tup, self._powers))]) if tup else 0

    def __eq__(self, other):
        return (isinstance(other, TupleBasis) and self.degree == other.degree
                and self.quandle == other.quandle)

    def __hash__(self):
        return hash((self.quandle, self.degree))


@lru_cache(maxsize=64)
def _basis(quandle: Quandle, degree: int) -> TupleBasis:
    return TupleBasis(quandle, degree)


def _faces(table: np.ndarray, x: np.ndarray):
    """Yield (sign, face array) for the terms of the coboundary evaluated at rows of x."""
    n = x.shape[1] - 1
    for i in range(1, n + 1):
        yield (-1) ** (i - 1), np.delete(x, i, axis=1)
    for j in range(1, n + 1):
        acted = table[x[:, :j], x[:, j:j + 1]]
        yield (-1) ** j, np.concatenate([acted, x[:, j + 1:]], axis=1)


def _assemble(quandle: Quandle, src: TupleBasis, targets: np.ndarray) -> np.ndarray:
    mat = np.zeros((len(targets), len(src)), dtype=np.int64)
    rows = np.arange(len(targets))
    for sign, face in _faces(quandle.table, targets):
        pos = src.positions(face)
        ok = pos >= 0
        np.add.at(mat, (rows[ok], pos[ok]), sign)
    return mat


@lru_cache(maxsize=64)
def _coboundary_int(quandle: Quandle, n: int) -> np.ndarray:
    if n == 0:
        mat = np.zeros((quandle.order, 1), dtype=np.int64)
    else:
        mat = _assemble(quandle, _basis(quandle, n), _basis(quandle, n + 1).array)
    mat.setflags(write=False)
    return mat


def coboundary_matrix(q: Quandle, n: int, modulus: int = 0) -> np.ndarray:
    """Matrix of the coboundary from degree n to n+1 on non-degenerate cochains.

    Rows index target tuples, columns source tuples, both in ``TupleBasis`` order.
    Degree 0 is the zero map into degree 1.
    """
    if n < 0:
        raise CohomologyError("degree must be >= 0")
    mat = _coboundary_int(q, n)
    return mat % modulus if modulus else mat.copy()


def rack_coboundary_matrix(q: Quandle, n: int) -> np.ndarray:
    """Coboundary on all n-tuples (the ambient rack complex), lexicographic order both sides."""
    m = q.order
    full_src = _all_tuples(m, n)

    class _Full:
        degree = n
        _powers = m ** np.arange(n - 1, -1, -1, dtype=np.int64)

        def __len__(self):
            return len(full_src)

        def positions(self, t):
            return np.asarray(t, dtype=np.int64).reshape(-1, n) @ self._powers

    return _assemble(q, _Full(), _all_tuples(m, n + 1))


def _reduce(values, modulus: int) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    return arr % modulus if modulus else arr.copy()


class Cochain:
    """Coefficient vector on a ``TupleBasis``; ``modulus`` 0 means integer coefficients."""

    __slots__ = ("basis", "modulus", "coeffs")

    def __init__(self, basis: TupleBasis, coeffs=None, modulus: int = 0):
        if modulus < 0 or modulus == 1:
            raise CohomologyError("modulus must be 0 (integers) or >= 2")
        self.basis = basis
        self.modulus = modulus
        if coeffs is None:
            coeffs = np.zeros(len(basis), dtype=np.int64)
        arr = _reduce(coeffs, modulus)
        if arr.shape != (len(basis),):
            raise CohomologyError(f"expected {len(basis)} coefficients, got shape {arr.shape}")
        arr.setflags(write=False)
        self.coeffs = arr

    @property
    def degree(self) -> int:
        return self.basis.degree

    @property
    def quandle(self) -> Quandle:
        return self.basis.quandle

    @classmethod
    def from_terms(cls, q: Quandle, degree: int, terms, modulus: int = 0) -> "Cochain":
        """Build from ``{tuple: coefficient}``; degenerate tuples must carry zero."""
        basis = _basis(q, degree)
        vec = np.zeros(len(basis), dtype=np.int64)
        for tup, c in dict(terms).items():
            pos = basis.index(tup)
            if pos < 0:
                if (c % modulus if modulus else c) != 0:
                    raise CohomologyError(f"degenerate tuple {tuple(tup)} with nonzero coefficient")
                continue
            vec[pos] += int(c)
        return cls(basis, vec, modulus)

    def evaluate(self, tup) -> int:
        pos = self.basis.index(tup)
        return 0 if pos < 0 else int(self.coeffs[pos])

    __call__ = evaluate

    def value_table(self) -> np.ndarray:
        """Dense array ``f[x1,...,xn]`` with zeros on degenerate tuples."""
        m = self.quandle.order
        out = np.zeros(m ** self.degree, dtype=np.int64)
        out[self.basis.array @ self.basis._powers] = self.coeffs
        return out.reshape((m,) * self.degree)

    def terms(self) -> dict[tuple[int, ...], int]:
        return {tuple(int(v) for v in self.basis.array[i]): int(c)
                for i, c in enumerate(self.coeffs) if c}

    def _check(self, other: "Cochain"):
        if self.basis != other.basis or self.modulus != other.modulus:
            raise CohomologyError("cochains live on different bases or rings")

    def __add__(self, other):
        self._check(other)
        return Cochain(self.basis, self.coeffs + other.coeffs, self.modulus)

    def __neg__(self):
        return Cochain(self.basis, -self.coeffs, self.modulus)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return Cochain(self.basis, self.coeffs * int(k), self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.basis == other.basis
                and self.modulus == other.modulus and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.basis, self.modulus, self.coeffs.tobytes()))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __repr__(self):
        return f"Cochain(degree={self.degree}, modulus={self.modulus}, terms={len(self.terms())})"


def coboundary(f: Cochain) -> Cochain:
    mat = _coboundary_int(f.quandle, f.degree)
    return Cochain(_basis(f.quandle, f.degree + 1), mat @ f.coeffs, f.modulus)


def is_cocycle(f: Cochain) -> bool:
    return coboundary(f).is_zero()


def _in_image(mat: np.ndarray, vec: np.ndarray, modulus: int) -> bool:
    """Is ``vec`` an integer (or mod-m) combination of the columns of ``mat``?"""
    if not vec.any() if modulus == 0 else not (vec % modulus).any():
        return True
    if mat.shape[1] == 0 or not mat.any():
        return False
    aug = np.concatenate([mat, vec.reshape(-1, 1)], axis=1)
    if modulus and _is_prime(modulus):
        return rank_mod_p(mat, modulus) == rank_mod_p(aug, modulus)
    d_mat = elementary_divisors(mat)
    d_aug = elementary_divisors(aug)
    if modulus == 0:
        return len(d_mat) == len(d_aug) and math.prod(d_mat) == math.prod(d_aug)
    rows = mat.shape[0]

    def size(ds):
        ds = list(ds) + [0] * (rows - len(ds))
        return math.prod(math.gcd(d, modulus) for d in ds)

    return size(d_mat) == size(d_aug)


def cohomologous(f: Cochain, g: Cochain) -> bool:
    """True when f - g is a coboundary over the cochains' ring."""
    f._check(g)
    diff = (f - g).coeffs
    if f.degree == 0:
        return not diff.any()
    mat = _coboundary_int(f.quandle, f.degree - 1)
    return _in_image(mat, diff, f.modulus)


def cocycle_basis(q: Quandle, n: int, p: int) -> list[Cochain]:
    """Reduced-row-echelon basis of the n-cocycles over Z_p."""
    if not _is_prime(p):
        raise CohomologyError(f"{p} is not prime")
    basis = _basis(q, n)
    mat = _coboundary_int(q, n)
    vecs = nullspace_mod_p(mat, p) if mat.size else [np.eye(len(basis), dtype=np.int64)[i] for i in range(len(basis))]
    if not vecs:
        return []
    reduced, _ = rref_mod_p(np.array(vecs), p)
    return [Cochain(basis, row, p) for row in reduced]


@lru_cache(maxsize=256)
def _rank_mod(q: Quandle, n: int, p: int) -> int:
    mat = _coboundary_int(q, n)
    return rank_mod_p(mat, p) if mat.size else 0


def cohomology_dim(q: Quandle, n: int, p: int) -> int:
    """Dimension of the degree-n quandle cohomology with Z_p coefficients."""
    if not _is_prime(p):
        raise CohomologyError(f"{p} is not prime")
    if n < 1:
        raise CohomologyError("degree must be >= 1")
    size = len(_basis(q, n))
    return size - _rank_mod(q, n, p) - _rank_mod(q, n - 1, p)


@dataclass(frozen=True)
class CohomologyGroup:
    """Finitely generated abelian group ``Z^free_rank + sum Z_d`` (d in ``torsion``).

    For coefficient ring Z_m the free rank is 0 and ``torsion`` lists the cyclic
    factors in divisibility order; ``dimension`` is set when m is prime.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()
    modulus: int = 0
    dimension: int | None = field(default=None)

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        for d in sorted(set(self.torsion)):
            c = self.torsion.count(d)
            parts.append(f"Z_{d}" if c == 1 else f"(Z_{d})^{c}")
        return " x ".join(parts) if parts else "0"

    def order(self) -> int | None:
        return None if self.free_rank else math.prod(self.torsion)


def _guard(q: Quandle, n: int, max_degree: int | None, max_order: int | None):
    max_degree = MAX_INTEGRAL_DEGREE if max_degree is None else max_degree
    max_order = MAX_INTEGRAL_ORDER if max_order is None else max_order
    if n < 1:
        raise CohomologyError("degree must be >= 1")
    if n > max_degree or q.order > max_order:
        raise CohomologyError(
            f"resource guard: degree {n} / order {q.order} exceeds limits "
            f"(degree <= {max_degree}, order <= {max_order})")


@lru_cache(maxsize=128)
def _divisors(q: Quandle, n: int) -> tuple[int, ...]:
    mat = _coboundary_int(q, n)
    return tuple(elementary_divisors(mat)) if mat.any() else ()


def cohomology_group_integral(q: Quandle, n: int, max_degree: int | None = None,
                              max_order: int | None = None) -> CohomologyGroup:
    """Integral degree-n quandle cohomology from Smith forms of the two coboundaries."""
    _guard(q, n, max_degree, max_order)
    below = _divisors(q, n - 1)
    here = _divisors(q, n)
    free = len(_basis(q, n)) - len(here) - len(below)
    torsion = tuple(d for d in below if d > 1)
    return CohomologyGroup(free, torsion, 0)


def cohomology_group_mod(q: Quandle, n: int, modulus: int, max_degree: int | None = None,
                         max_order: int | None = None) -> CohomologyGroup:
    """Degree-n cohomology with Z_modulus coefficients via universal coefficients.

    H^n(Z_m) = H^n(Z) (x) Z_m  +  Tor(H^{n+1}(Z), Z_m).
    """
    pe = _prime_power(modulus) if modulus >= 2 else None
    if pe is None:
        raise CohomologyError(f"modulus {modulus} is not a prime power")
    integral = cohomology_group_integral(q, n, max_degree, max_order)
    factors = [modulus] * integral.free_rank
    factors += [math.gcd(d, modulus) for d in integral.torsion]
    factors += [math.gcd(e, modulus) for e in _divisors(q, n) if e > 1]
    factors = tuple(f for f in invariant_factors_from_diagonal(factors) if f > 1)
    dim = None
    if pe[1] == 1:
        dim = len(factors)
        direct = cohomology_dim(q, n, modulus)
        if direct != dim:
            raise CohomologyError(
                f"universal-coefficient count {dim} disagrees with direct mod-{modulus} dimension {direct}")
    return CohomologyGroup(0, factors, modulus, dim)


def parse_cocycle(source, basis: TupleBasis, modulus: int = 0) -> Cochain:
    """Read ``x1,x2[,x3...] coeff`` lines (``#`` starts a comment) into a cochain.

    ``source`` is either a path to an existing file or the text itself.
    Repeated tuples accumulate.
    """
    text = source
    if isinstance(source, os.PathLike) or (isinstance(source, str) and "\n" not in source
                                           and os.path.isfile(source)):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    vec = np.zeros(len(basis), dtype=np.int64)
    for lineno, raw in enumerate(str(text).splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise CohomologyError(f"line {lineno}: expected '<tuple> <coeff>', got {raw!r}")
        try:
            tup = tuple(int(v) for v in parts[0].split(","))
            coeff = int(parts[1])
        except ValueError:
            raise CohomologyError(f"line {lineno}: malformed entry {raw!r}") from None
        if len(tup) != basis.degree:
            raise CohomologyError(f"line {lineno}: tuple {tup} has length {len(tup)}, expected {basis.degree}")
        try:
            pos = basis.index(tup)
        except CohomologyError as exc:
            raise CohomologyError(f"line {lineno}: {exc}") from None
        if pos < 0:
            if (coeff % modulus if modulus else coeff) != 0:
                raise CohomologyError(f"line {lineno}: degenerate tuple {tup} with nonzero coefficient")
            continue
        vec[pos] += coeff
    return Cochain(basis, vec, modulus)


def format_cocycle(f: Cochain, header: dict | None = None) -> str:
    lines = [f"# {k}: {v}" for k, v in (header or {}).items()]
    for tup, c in f.terms().items():
        lines.append(",".join(map(str, tup)) + f" {c}")
    return "\n".join(lines) + "\n"


def basis_for(q: Quandle, degree: int) -> TupleBasis:
    """Shared (cached) basis object for a quandle and degree."""
    return _basis(q, degree)

