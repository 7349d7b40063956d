"""Equivariant minimal free resolutions of the universal ring for length-two
resolutions with f = e + g, computed at the level of terms."""

from .bott import Cohomology, f_terms_via_bott, p_and_N, t_terms_via_bott
from .complexes import (
    DiffArrow,
    diff_support,
    dual_check_t,
    eagon_northcott_terms,
    f_terms_closed,
    g_complex,
    self_duality_check,
    strand,
    structural_checks,
    t_terms_closed,
)
from .hilbert import BiSeries, check_euler, euler_char, hilbert_AI, hilbert_C
from .terms import FreeTerm, GradedComplex, StructuralViolation

__version__ = "0.1.0"
