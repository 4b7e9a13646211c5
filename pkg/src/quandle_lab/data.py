"""Bundled data: named cocycles, the knot table and expected-value tables.

Set ``QUANDLE_LAB_DATA`` to point at a replacement data directory with the same
layout (``cocycles/``, ``expected/``, ``knots.tsv``).
"""
from __future__ import annotations

import os
import re
from pathlib import Path

from .cohomology import Cochain, CohomologyError, basis_for, is_cocycle, parse_cocycle
from .quandle import Quandle, parse_quandle

__all__ = [
    "DataError",
    "data_dir",
    "builtin_cocycles",
    "read_cocycle_file",
    "load_cocycle",
    "knot_table_path",
]


class DataError(ValueError):
    pass


def data_dir() -> Path:
    root = os.environ.get("QUANDLE_LAB_DATA")
    return Path(root) if root else Path(__file__).resolve().parent / "data"


def knot_table_path() -> Path:
    return data_dir() / "knots.tsv"


def _canonical(name: str) -> str:
    s = name.strip().lower().strip("()")
    s = s.replace("θ", "theta").replace("η", "eta").replace("_", "")
    return s


def builtin_cocycles() -> dict[str, Path]:
    folder = data_dir() / "cocycles"
    if not folder.is_dir():
        return {}
    return {p.stem: p for p in sorted(folder.glob("*.txt"))}


def _header(text: str) -> dict[str, str]:
    meta = {}
    for line in text.splitlines():
        m = re.match(r"#\s*([A-Za-z0-9_-]+)\s*:\s*(.*)$", line)
        if m:
            meta[m.group(1).lower()] = m.group(2).strip()
    return meta


def read_cocycle_file(path, quandle: Quandle | None = None, degree: int | None = None,
                      modulus: int | None = None) -> tuple[Cochain, dict[str, str]]:
    """Read a cocycle file; header lines ``# quandle: R:3``, ``# degree: 3``, ``# modulus: 3``
    supply anything not passed explicitly.  The result must be a cocycle."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read cocycle file {path}: {exc}") from None
    meta = _header(text)
    try:
        if quandle is None:
            if "quandle" not in meta:
                raise DataError(f"{path}: no quandle given and no '# quandle:' header")
            quandle = parse_quandle(meta["quandle"])
        elif "quandle" in meta and parse_quandle(meta["quandle"]) != quandle:
            raise DataError(f"{path}: cocycle is for quandle {meta['quandle']}, not {quandle.label}")
        if degree is None:
            if "degree" in meta:
                degree = int(meta["degree"])
            else:
                first = next((ln.split()[0] for ln in text.splitlines()
                              if ln.strip() and not ln.lstrip().startswith("#")), None)
                if first is None:
                    raise DataError(f"{path}: empty cocycle and no '# degree:' header")
                degree = first.count(",") + 1
        if modulus is None:
            modulus = int(meta.get("modulus", 0))
        f = parse_cocycle(text, basis_for(quandle, degree), modulus)
    except (CohomologyError, ValueError) as exc:
        if isinstance(exc, DataError):
            raise
        raise DataError(f"{path}: {exc}") from None
    if not is_cocycle(f):
        raise DataError(f"{path}: cochain fails the cocycle condition over Z_{modulus or 'Z'}")
    return f, meta


def load_cocycle(source: str, quandle: Quandle | None = None, modulus: int | None = None,
                 scale: int = 1) -> tuple[Cochain, dict[str, str]]:
    """Builtin name (``theta9``, ``3-2-A``, ``eta11``...) or a file path.

    ``modulus`` re-reads the integer coefficients in another ring after
    multiplying by ``scale``; the result is re-validated as a cocycle.
    """
    table = {_canonical(k): v for k, v in builtin_cocycles().items()}
    key = _canonical(source)
    if key in table:
        path = table[key]
    elif Path(source).is_file():
        path = Path(source)
    else:
        raise DataError(f"unknown cocycle {source!r}; builtins: {', '.join(builtin_cocycles())}")
    f, meta = read_cocycle_file(path, quandle)
    if modulus is None and scale == 1:
        return f, meta
    new_mod = f.modulus if modulus is None else modulus
    g = Cochain(f.basis, f.coeffs * scale, new_mod)
    if not is_cocycle(g):
        raise DataError(f"{source}: {scale}x cocycle is not a cocycle with Z_{new_mod} coefficients")
    meta = dict(meta, modulus=str(new_mod), scale=str(scale))
    return g, meta
