import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quandle_lab.cohomology import Cochain, basis_for, coboundary, cocycle_basis
from quandle_lab.data import load_cocycle
from quandle_lab.groupring import GroupRingElement, parse
from quandle_lab.quandle import make_dihedral, make_s4, parse_quandle
from quandle_lab.surfaces import (SurfaceError, chart_admissible, conjugate_symmetry, deform_spun_fig8,
                                  dihedral_colors_nontrivially, g_closed_form, g_sequence, g_value,
                                  h_value, movie_admissible, t_order, twist_spin_chart, twist_spin_movie,
                                  twist_spin_period_check)

import oracles

ALEX = ["R:3", "R:4", "R:5", "R:6", "A:2:1,1,1", "A:2:1,0,1", "L:5:2", "L:7:3", "A:3:1,0,1"]


@pytest.mark.parametrize("spec", ALEX)
def test_g_closed_form(spec):
    q = parse_quandle(spec)
    for x, y in itertools.product(range(q.order), repeat=2):
        seq = g_sequence(q, x, y, 7)
        assert q.op(seq[-2], x) == y
        for s in range(8):
            assert seq[s] == g_closed_form(q, x, y, s) == g_value(q, x, y, s)


@pytest.mark.parametrize("spec", ALEX)
def test_h_recursion(spec):
    q = parse_quandle(spec)
    for x, y in itertools.product(range(q.order), repeat=2):
        assert h_value(q, x, y, 0) == y
        for n in range(5):
            assert q.op(h_value(q, x, y, n + 1), x) == h_value(q, x, y, n)


def test_sequence_errors():
    q = make_dihedral(3)
    with pytest.raises(SurfaceError):
        g_value(q, 0, 1, -3)
    with pytest.raises(SurfaceError):
        g_closed_form(q, 0, 1, -1)
    with pytest.raises(SurfaceError):
        h_value(q, 0, 1, -1)
    with pytest.raises(SurfaceError):
        g_sequence(make_s4(), 0, 1, 3)


def _coc(name, scale=1):
    f, _ = load_cocycle(name)
    return f.quandle, f * scale


@pytest.mark.parametrize("name,scale,m,value", [
    ("3-2-A", 1, 3, "3+6t"), ("3-2-A", -1, 3, "3+6t^2"),
    ("4-2-A-a", 1, 4, "12+4t"), ("4-2-A-b", 1, 4, "8+8t"),
    ("4-2-B-a", 1, 4, "12+4t"), ("4-2-B-b", 1, 4, "8+8t"),
    ("5-2-A", 1, 5, "5+10t+10t^4"), ("5-2-A", 2, 5, "5+10t^2+10t^3"),
    ("6-2-A", 1, 6, "3+6t"),
    ("6-2-B-a", 1, 6, "24+12t"), ("6-2-B-b", 1, 6, "12+24t"), ("6-2-B-c", 1, 6, "12+12t+12t^2"),
])
def test_movie_values(name, scale, m, value):
    q, f = _coc(name, scale)
    assert twist_spin_movie(q, f, m, 2) == parse(value, f.modulus)


def test_movie_trivial_values():
    q, f = _coc("3-2-A")
    # k = 5 leaves only constant colorings
    assert twist_spin_movie(q, f, 3, 5) == 3
    assert twist_spin_movie(q, f, 3, 0, return_count=True)[1] == 9


@pytest.mark.parametrize("spec,p", [("R:3", 3), ("R:4", 2), ("R:5", 5), ("A:2:1,1,1", 2), ("R:6", 3)])
@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_chart_is_conjugate_of_movie(spec, p, m):
    q = parse_quandle(spec)
    for f in cocycle_basis(q, 3, p)[:8]:
        assert twist_spin_chart(q, f, m) == conjugate_symmetry(twist_spin_movie(q, f, m, 2))


@pytest.mark.parametrize("spec,p", [("R:3", 3), ("R:4", 2), ("R:5", 5), ("S4", 2), ("S4", 3),
                                    ("L:5:2", 5), ("A:2:1,0,1", 2)])
@pytest.mark.parametrize("m", [3, 4, 5])
def test_chart_matches_expanded_examples(spec, p, m):
    q = parse_quandle(spec)
    table = q.table.tolist()
    for f in cocycle_basis(q, 3, p)[:8]:
        ref = GroupRingElement(p, oracles.surface_braid_examples(table, f.evaluate, m))
        assert twist_spin_chart(q, f, m) == ref
        if m == 3:
            assert ref == GroupRingElement(p, oracles.surface_braid_m3_substituted(table, f.evaluate))


def test_chart_works_without_ring_structure(s4):
    eta, _ = load_cocycle("eta1")
    value, count = twist_spin_chart(s4, eta, 3, return_count=True)
    assert count == sum(chart_admissible(s4, 3, a, b) for a in range(4) for b in range(4))
    assert value.augmentation() == count
    with pytest.raises(SurfaceError):
        twist_spin_movie(s4, eta, 3, 2)


@pytest.mark.parametrize("name,m,k", [("3-2-A", 3, 2), ("4-2-A-a", 4, 2), ("5-2-A", 5, 3), ("3-3-A-a", 3, 3)])
def test_class_invariance(name, m, k):
    q, f = _coc(name)
    rng = np.random.default_rng(m * 10 + k)
    base = twist_spin_movie(q, f, m, k)
    for _ in range(5):
        g = Cochain(basis_for(q, 2), rng.integers(0, 20, size=len(basis_for(q, 2))), f.modulus)
        assert twist_spin_movie(q, f + coboundary(g), m, k) == base


def test_three_three_rows_only_take_two_values():
    # every cocycle of this quandle over Z_2 gives one of these two values
    q = parse_quandle("A:2:1,1,1")
    basis = cocycle_basis(q, 3, 2)
    seen = set()
    for bits in itertools.product((0, 1), repeat=len(basis)):
        f = Cochain(basis[0].basis, sum((b * v.coeffs for b, v in zip(bits, basis)), np.zeros(len(basis[0].basis), dtype=np.int64)), 2)
        seen.add(str(twist_spin_movie(q, f, 3, 3, check=False)))
    assert seen == {"16", "4+12t"}


@settings(max_examples=25, deadline=None)
@given(spec=st.sampled_from(["R:3", "R:4", "R:5", "A:2:1,0,1"]), m=st.integers(3, 6), k=st.integers(0, 4),
       idx=st.integers(0, 5))
def test_negated_cocycle_gives_conjugate(spec, m, k, idx):
    q = parse_quandle(spec)
    p = q.order if spec in ("R:3", "R:5") else 2
    basis = cocycle_basis(q, 3, p)
    f = basis[idx % len(basis)]
    assert twist_spin_movie(q, -f, m, k) == twist_spin_movie(q, f, m, k).conjugate()
    if k == 2:
        assert twist_spin_chart(q, -f, m) == twist_spin_chart(q, f, m).conjugate()


@pytest.mark.parametrize("spec,name,m", [("R:3", "3-2-A", 3), ("R:4", "4-2-A-a", 4), ("R:5", "5-2-A", 5)])
def test_periodicity(spec, name, m):
    q, f = _coc(name)
    rep = twist_spin_period_check(q, f, m)
    assert rep.period == 2 * f.modulus
    assert rep.periodic and rep.dihedral_ok and rep.ok
    for k in range(rep.period):
        assert rep.values[k] == rep.values[k + rep.period]


def test_period_check_needs_finite_coefficients():
    q = make_dihedral(3)
    f = Cochain(basis_for(q, 3), None, 0)
    with pytest.raises(SurfaceError):
        twist_spin_period_check(q, f, 3)


def test_t_order():
    assert t_order(make_dihedral(5)) == 2
    assert t_order(parse_quandle("A:2:1,1,1")) == 3
    assert t_order(parse_quandle("L:7:3")) == 6


def _brute_nontrivial(h, m, k):
    q = make_dihedral(h)
    return any(movie_admissible(q, m, k, x, y) for x in range(h) for y in range(h) if x != y)


def test_dihedral_coloring_rule():
    for h in range(2, 9):
        for m in range(3, 9):
            for k in range(0, 7):
                assert dihedral_colors_nontrivially(h, m, k) == _brute_nontrivial(h, m, k), (h, m, k)


@pytest.mark.parametrize("h", [3, 5, 7])
def test_odd_prime_dihedral_only_colors_when_m_is_h_and_k_even(h):
    for m in (3, 4, 5, 7, 8):
        for k in range(0, 5):
            if m != h and m % h == 0:
                continue
            expect = m == h and k % 2 == 0
            assert dihedral_colors_nontrivially(h, m, k) == expect


@pytest.mark.parametrize("name,mod,scale,value", [("eta11", 0, 1, "16"), ("eta1", 2, 1, "4+12t"),
                                                  ("eta1", 4, 2, "4+12t^2"), ("eta2", 2, 1, "4+12t"),
                                                  ("eta2", 4, 1, "4+12t")])
def test_figure_eight_values(name, mod, scale, value):
    f, _ = load_cocycle(name, make_s4(), modulus=mod, scale=scale)
    assert deform_spun_fig8(f) == parse(value, mod)


def test_figure_eight_is_class_invariant():
    f, _ = load_cocycle("eta1")
    q = f.quandle
    rng = np.random.default_rng(7)
    for _ in range(5):
        g = Cochain(basis_for(q, 2), rng.integers(0, 5, size=len(basis_for(q, 2))), f.modulus)
        assert deform_spun_fig8(f + coboundary(g)) == deform_spun_fig8(f)
    assert deform_spun_fig8(-f) == deform_spun_fig8(f).conjugate()


def test_figure_eight_other_convention_is_not_invariant():
    f, _ = load_cocycle("eta11")
    assert deform_spun_fig8(f, convention="a_star_b") != 16
    with pytest.raises(SurfaceError):
        deform_spun_fig8(f, convention="other")
    r3, _ = load_cocycle("3-2-A")
    with pytest.raises(SurfaceError):
        deform_spun_fig8(r3)


def test_argument_errors():
    q, f = _coc("3-2-A")
    with pytest.raises(SurfaceError):
        twist_spin_movie(q, f, 2, 2)
    with pytest.raises(SurfaceError):
        twist_spin_movie(q, f, 3, -1)
    with pytest.raises(SurfaceError):
        twist_spin_chart(q, f, 2)
    bad = Cochain.from_terms(q, 3, {(0, 1, 0): 1}, 3)
    with pytest.raises(SurfaceError):
        twist_spin_movie(q, bad, 3, 2)
    phi, _ = load_cocycle("theta1")
    with pytest.raises(SurfaceError):
        twist_spin_movie(phi.quandle, phi, 3, 2)
