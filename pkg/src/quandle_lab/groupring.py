"""Integral group ring Z[A] of a cyclic group A, written as polynomials in ``t``.

``modulus = q > 0`` means ``A = Z_q`` (so ``t**q = 1``); ``modulus = 0`` means
the infinite cyclic group, where negative exponents are allowed.
"""
from __future__ import annotations

import re
from collections import defaultdict
from typing import Mapping

__all__ = ["GroupRingElement", "GroupRingError", "add", "mul", "conjugate", "parse", "to_string"]


class GroupRingError(ValueError):
    pass


class GroupRingElement:
    __slots__ = ("modulus", "_coeffs")

    def __init__(self, modulus: int, coeffs: Mapping[int, int] | None = None):
        if modulus < 0:
            raise GroupRingError("modulus must be >= 0 (0 = infinite cyclic)")
        self.modulus = modulus
        acc: dict[int, int] = defaultdict(int)
        for e, c in (coeffs or {}).items():
            acc[e % modulus if modulus else e] += int(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c != 0}

    @classmethod
    def monomial(cls, exponent: int, modulus: int, coeff: int = 1) -> "GroupRingElement":
        return cls(modulus, {exponent: coeff})

    @classmethod
    def zero(cls, modulus: int) -> "GroupRingElement":
        return cls(modulus)

    @classmethod
    def from_exponents(cls, exponents, modulus: int) -> "GroupRingElement":
        """Sum of ``t**e`` over an iterable of exponents (one term per state)."""
        acc: dict[int, int] = defaultdict(int)
        for e in exponents:
            acc[int(e) % modulus if modulus else int(e)] += 1
        return cls(modulus, acc)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def augmentation(self) -> int:
        return sum(self._coeffs.values())

    def is_integer(self) -> bool:
        return all(e == 0 for e in self._coeffs)

    def _check(self, other: "GroupRingElement"):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.modulus != self.modulus:
            raise GroupRingError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
        return None

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement(self.modulus, {0: other})
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return GroupRingElement(self.modulus, acc)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.modulus, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.modulus, {e: other * c for e, c in self._coeffs.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = defaultdict(int)
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                acc[e1 + e2] += c1 * c2
        return GroupRingElement(self.modulus, acc)

    __rmul__ = __mul__

    def conjugate(self) -> "GroupRingElement":
        """``sum a_i g_i  ->  sum a_i g_i^{-1}``."""
        return GroupRingElement(self.modulus, {-e: c for e, c in self._coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return (isinstance(other, GroupRingElement) and self.modulus == other.modulus
                and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self.modulus, tuple(self._coeffs.items())))

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"GroupRingElement({self.modulus}, {self._coeffs!r})"

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "coeffs": {str(e): c for e, c in self._coeffs.items()}}

    @classmethod
    def from_json(cls, data: Mapping) -> "GroupRingElement":
        try:
            return cls(int(data["modulus"]), {int(e): int(c) for e, c in data["coeffs"].items()})
        except (KeyError, TypeError, ValueError) as exc:
            raise GroupRingError(f"bad group-ring JSON: {exc}") from None


def add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x + y


def mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y


def conjugate(x: GroupRingElement) -> GroupRingElement:
    return x.conjugate()


def to_string(x: GroupRingElement) -> str:
    """Canonical text: ascending exponents, e.g. ``5+10t+10t^4``; the empty sum is ``0``."""
    out = []
    for e, c in x._coeffs.items():
        if e == 0:
            term = str(abs(c))
        else:
            mono = "t" if e == 1 else f"t^{e}"
            term = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if not out:
            out.append(term if c > 0 else "-" + term)
        else:
            out.append(("+" if c > 0 else "-") + term)
    return "".join(out) if out else "0"


_TERM = re.compile(r"([+-])(\d*)\*?(?:(t)(?:\^(-?\d+))?)?")


def parse(text: str, modulus: int) -> GroupRingElement:
    """Read ``4+12t``, ``3 + 6*t^2``, ``-t``, ``0``; exponents are reduced mod ``modulus``."""
    s = text.replace(" ", "")
    if not s:
        raise GroupRingError("empty group-ring text")
    if s[0] not in "+-":
        s = "+" + s
    pos = 0
    coeffs: dict[int, int] = defaultdict(int)
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise GroupRingError(f"malformed group-ring text {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        e = 0
        if m.group(3):
            e = int(m.group(4)) if m.group(4) is not None else 1
        elif m.group(4) is not None:
            raise GroupRingError(f"malformed group-ring text {text!r}")
        coeffs[e] += sign * c
        pos = m.end()
    return GroupRingElement(modulus, coeffs)
