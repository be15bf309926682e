"""Classification of unit sums over cubic fields."""

from .families import ennola_solutions, md_construction, theoretical_bound
from .isomorphism import detect_La, detect_simplest_cubic, iso_La_hoshi_miyake
from .minpoly import (
    CaseTag,
    MinPolyPair,
    complex_a_candidates,
    complex_uv_candidates,
    cyclic_a_candidates,
    disc_formula,
    minpoly_candidates_small_n,
    minpoly_general,
)
from .solutions import NkReport, Provenance, UnitSolution, compute_nk, enumerate_solutions, realize_solution
from .verify import verify_tables
