"""Quandle cohomology and quandle-cocycle invariants of knots, links and knotted surfaces."""
from .quandle import (Quandle, QuandleError, AlexanderSpec, check_axioms, make_trivial, make_dihedral,
                      make_alexander, make_lambda, make_s4, dual, is_isomorphic, act_word,
                      parse_quandle)
from .groupring import GroupRingElement
from .cohomology import (Cochain, CohomologyGroup, coboundary, coboundary_matrix, is_cocycle,
                         cohomologous, cocycle_basis, cohomology_dim, cohomology_group_integral,
                         cohomology_group_mod)
from .braids import BraidWord, colorings, count_colorings, state_sum, table_harness
from .torus import torus_braid, color_period, torus_invariant
from .surfaces import (twist_spin_movie, twist_spin_chart, deform_spun_fig8, conjugate_symmetry,
                       twist_spin_period_check)
from .data import load_cocycle
from .tables import reproduce_tables

__version__ = "0.1.0"

__all__ = [
    "Quandle",
    "QuandleError",
    "AlexanderSpec",
    "check_axioms",
    "make_trivial",
    "make_dihedral",
    "make_alexander",
    "make_lambda",
    "make_s4",
    "dual",
    "is_isomorphic",
    "act_word",
    "parse_quandle",
    "GroupRingElement",
    "Cochain",
    "CohomologyGroup",
    "coboundary",
    "coboundary_matrix",
    "is_cocycle",
    "cohomologous",
    "cocycle_basis",
    "cohomology_dim",
    "cohomology_group_integral",
    "cohomology_group_mod",
    "BraidWord",
    "colorings",
    "count_colorings",
    "state_sum",
    "table_harness",
    "torus_braid",
    "color_period",
    "torus_invariant",
    "twist_spin_movie",
    "twist_spin_chart",
    "deform_spun_fig8",
    "conjugate_symmetry",
    "twist_spin_period_check",
    "load_cocycle",
    "reproduce_tables",
]
