"""Constant solutions of the 2x2 plus/minus identity congruence.

For k mod n, the package computes the minimal size at which the constant
tuple (k, ..., k) multiplies to plus or minus the identity, assembles
that size from the prime-power factors of n, decides whether the minimal
solution reduces into shorter ones, and sweep-checks the structural laws
relating all of the above.
"""

from .cycles import (Cycle, canonical_form, equivalence_class, equivalent,
                     oplus, reversal, rotations)
from .modmat import Mat2, m1, m_n, mat_pow, solution_sign
from .monomial import (Component, LawCheck, MonomialProfile, SizeCapExceeded,
                       SizeLaw, check_half_n_law, check_prime_size_law,
                       component_profile, minimal_monomial_size,
                       monomial_profile, prime_power_ladder,
                       shared_factor_size, size_via_crt)
from .reduce import (Decomposition, MonomialVerdict, ReductionWitness,
                     StructureReport, bordered_solutions,
                     is_irreducible_monomial, is_reducible_general,
                     monomial_reduction_witness, witness_structure_check)
from .ring import (Residue, crt_combine, factorize, is_prime,
                   prime_power_factors, project)
from .verify import (VERIFIERS, Counterexample, SurveyRow, TheoremReport,
                     monomial_row, run_all, run_verifier, survey_row,
                     survey_rows)

__version__ = "0.1.0"

__all__ = [
    "Cycle", "canonical_form", "equivalence_class", "equivalent", "oplus",
    "reversal", "rotations",
    "Mat2", "m1", "m_n", "mat_pow", "solution_sign",
    "Component", "LawCheck", "MonomialProfile", "SizeCapExceeded", "SizeLaw",
    "check_half_n_law", "check_prime_size_law", "component_profile",
    "minimal_monomial_size", "monomial_profile", "prime_power_ladder",
    "shared_factor_size", "size_via_crt",
    "Decomposition", "MonomialVerdict", "ReductionWitness", "StructureReport",
    "bordered_solutions", "is_irreducible_monomial", "is_reducible_general",
    "monomial_reduction_witness", "witness_structure_check",
    "Residue", "crt_combine", "factorize", "is_prime", "prime_power_factors",
    "project",
    "VERIFIERS", "Counterexample", "SurveyRow", "TheoremReport",
    "monomial_row", "run_all", "run_verifier", "survey_row", "survey_rows",
    "__version__",
]
