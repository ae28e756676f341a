"""Exact classification of 3-fold Deligne-Mostow lattice representations
into PGL(3,C): cyclotomic arithmetic, Groebner bases, relator systems,
certified solving, and classification invariants."""

from .cyclotomic import CycloNum, euler_phi, galois_group
from .poly import (BudgetExceeded, Ideal, MultiPoly, PolyRing, buchberger,
                   normal_form, zero_dim_witness)
from .presentation import Presentation, Word, evaluate_word
from .repfamily import (CASES, RepPoint, family, instantiate,
                        relators_to_ideal)
from .solver import (SolveError, SolveOutcome, dimension_scan,
                     identity_reflection_rep, reconstruct_value, solve_case,
                     univariate_roots_exact, verify, verify_matrices)
from .invariants import (canonical_signature, cusp_classify, galois_orbits,
                         hermitian_form, is_irreducible, lift_check,
                         signature)
from .cli import classify_run, compare_rows, main

__all__ = [
    "BudgetExceeded", "CASES", "CycloNum", "Ideal", "MultiPoly", "PolyRing",
    "Presentation", "RepPoint", "SolveError", "SolveOutcome", "Word",
    "buchberger", "canonical_signature", "classify_run", "compare_rows",
    "cusp_classify", "dimension_scan", "euler_phi", "evaluate_word", "family",
    "galois_group", "galois_orbits", "hermitian_form",
    "identity_reflection_rep", "instantiate", "is_irreducible", "lift_check",
    "main", "normal_form", "reconstruct_value", "relators_to_ideal",
    "signature", "solve_case", "univariate_roots_exact", "verify",
    "verify_matrices", "zero_dim_witness",
]

__version__ = "1.0.0"
