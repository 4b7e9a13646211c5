"""Regenerate the reference tables cell by cell against the shipped expected values.

Each cell becomes a ``Cell`` with a PASS/FAIL status (INFO for values that are
reported but not asserted) and its compute time.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .braids import load_knot_table, table_harness
from .cohomology import Cochain, basis_for, cocycle_basis, cohomology_dim
from .data import DataError, data_dir, knot_table_path, load_cocycle
from .groupring import parse as parse_ring
from .quandle import make_s4, parse_quandle
from .surfaces import deform_spun_fig8, twist_spin_movie
from .torus import torus_invariant

__all__ = ["TABLES", "Cell", "TableReport", "reproduce_tables", "quandle_from_spec"]

TABLES = ("cohomology", "knots", "torus", "twistspin", "fig8")


@dataclass
class Cell:
    label: str
    computed: str
    expected: str
    status: str  # PASS, FAIL or INFO
    seconds: float = 0.0

    def line(self) -> str:
        return f"{self.status}\t{self.label}\t{self.computed}\texpected {self.expected}\t{self.seconds:.3f}s"


@dataclass
class TableReport:
    which: str
    cells: list[Cell] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def failures(self) -> list[Cell]:
        return [c for c in self.cells if c.status == "FAIL"]

    @property
    def exit_status(self) -> int:
        return 1 if self.failures else 0

    def summary(self) -> str:
        n = sum(c.status != "INFO" for c in self.cells)
        return (f"{self.which}: {n - len(self.failures)}/{n} PASS, {len(self.failures)} FAIL"
                f" ({self.seconds:.1f}s)")

    def lines(self) -> list[str]:
        return [c.line() for c in self.cells] + [self.summary()]


def quandle_from_spec(spec: str):
    return make_s4() if spec.strip() == "S4" else parse_quandle(spec)


def _rows(path):
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    with fh:
        for raw in fh:
            line = raw.rstrip("\n")
            if line.strip() and not line.startswith("#"):
                yield line.split("\t")


def _header(path) -> dict[str, str]:
    meta = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("#") and ":" in line:
                key, _, val = line[1:].partition(":")
                meta[key.strip()] = val.strip()
    return meta


def _cell(label, computed, expected, ok, t0, info=False):
    status = "INFO" if info else ("PASS" if ok else "FAIL")
    return Cell(label, str(computed), str(expected), status, time.perf_counter() - t0)


H3_PRIMES = (2, 3, 5, 7, 11)


def _cohomology(rep: TableReport, extensions: bool = True):
    """Listed cells are asserted.  Quandles whose H^3 row is blank get it computed
    as INFO cells marked ``extension`` (no reference value exists)."""
    seen: dict[str, tuple[str, set]] = {}
    for spec, label, degree, prime, dim in _rows(data_dir() / "expected" / "cohomology.tsv"):
        t0 = time.perf_counter()
        got = cohomology_dim(quandle_from_spec(spec), int(degree), int(prime))
        rep.cells.append(_cell(f"{label} H^{degree} Z_{prime}", got, dim, got == int(dim), t0))
        seen.setdefault(spec, (label, set()))[1].add(int(degree))
    if not extensions:
        return
    for spec, (label, degrees) in seen.items():
        if 3 in degrees:
            continue
        q = quandle_from_spec(spec)
        for p in H3_PRIMES:
            t0 = time.perf_counter()
            got = cohomology_dim(q, 3, p)
            rep.cells.append(_cell(f"{label} H^3 Z_{p} extension", got, "(blank)", True, t0, info=True))


def _knots(rep: TableReport):
    records = load_knot_table(knot_table_path())
    known = {r.name for r in records}
    for name in ("knots_s4.tsv", "knots_z3t.tsv"):
        path = data_dir() / "expected" / name
        meta = _header(path)
        mod = int(meta["modulus"])
        q = quandle_from_spec(meta["quandle"])
        phi, _ = load_cocycle(meta["cocycle"], q)
        listed = {row[0]: parse_ring(row[1], mod) for row in _rows(path)}
        default = parse_ring(meta["default"], mod)
        expected = {r.name: listed.get(r.name, default) for r in records}
        t0 = time.perf_counter()
        report = table_harness(q, phi, records, expected)
        per = (time.perf_counter() - t0) / max(1, len(report.rows))
        for row in report.rows:
            rep.cells.append(Cell(f"{meta['quandle']} {row.name}", str(row.value), str(row.expected),
                                  "PASS" if row.ok else "FAIL", per))
        for missing in sorted(set(listed) - known):
            rep.cells.append(Cell(f"{meta['quandle']} {missing}", "not in knot table",
                                  str(listed[missing]), "FAIL"))


def _torus(rep: TableReport):
    for spec, coc, mod, n, k, value, note in _rows(data_dir() / "expected" / "torus.tsv"):
        q = quandle_from_spec(spec)
        phi, _ = load_cocycle(coc, q)
        t0 = time.perf_counter()
        got = torus_invariant(q, phi, int(n), int(k))
        label = f"{spec} {coc} T({n},{k})" + (f" [{note}]" if note else "")
        rep.cells.append(_cell(label, got, value, got == parse_ring(value, int(mod)), t0))


def _cocycles_for(q, spec_name: str, mod: int, scale: int):
    if spec_name == "*":
        zero = Cochain(basis_for(q, 3), None, mod)
        return [zero] + cocycle_basis(q, 3, mod)
    f, _ = load_cocycle(spec_name, q, modulus=mod)
    return [f * scale]


def _twistspin(rep: TableReport):
    for m, k, spec, mod, coc, scale, value, kind in _rows(data_dir() / "expected" / "twistspin.tsv"):
        q = quandle_from_spec(spec)
        mod_i = int(mod)
        t0 = time.perf_counter()
        got = {str(twist_spin_movie(q, f, int(m), int(k), check=False))
               for f in _cocycles_for(q, coc, mod_i, int(scale))}
        options = {str(parse_ring(v, mod_i)) for v in value.split("|")}
        shown = " ".join(sorted(got))
        who = "every cocycle" if coc == "*" else (coc if scale == "1" else f"{scale}*{coc}")
        label = f"tau^{k} T(2,{m}) {spec} Z_{mod} {who}" + (" (p)" if kind == "p" else "")
        rep.cells.append(_cell(label, shown, value, len(got) == 1 and got <= options, t0,
                               info=kind == "p"))


def _fig8(rep: TableReport):
    for coc, mod, scale, value in _rows(data_dir() / "expected" / "fig8.tsv"):
        t0 = time.perf_counter()
        f, _ = load_cocycle(coc, make_s4(), modulus=int(mod), scale=int(scale))
        got = deform_spun_fig8(f)
        who = coc if scale == "1" else f"{scale}*{coc}"
        ring = "Z" if mod == "0" else f"Z_{mod}"
        rep.cells.append(_cell(f"fig8 {who} over {ring}", got, value, got == parse_ring(value, int(mod)), t0))


_RUNNERS = {"cohomology": _cohomology, "knots": _knots, "torus": _torus,
            "twistspin": _twistspin, "fig8": _fig8}


def reproduce_tables(which: str) -> TableReport:
    if which not in _RUNNERS:
        raise ValueError(f"unknown table {which!r}; choose from {', '.join(TABLES)}")
    rep = TableReport(which)
    t0 = time.perf_counter()
    _RUNNERS[which](rep)
    rep.seconds = time.perf_counter() - t0
    return rep
