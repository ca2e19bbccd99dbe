"""Exact renewal-equation solving on graded monoids, with Kaluza-type
sufficient conditions and complete Nevanlinna-Pick kernel certification.
"""

__version__ = "0.1.0"

from .monoid import (
    GradedMonoid,
    MultiIndexes,
    Words,
    abelianize,
    index_set,
    multinomial,
    partial_leq,
)
from .series import (
    DEFAULT_GUARD,
    CoeffTable,
    GuardExceeded,
    convolve,
    delta,
    evaluate,
    geometric_table,
    multinomial_table,
    residual,
    solve_renewal,
)
from .checks import (
    CheckReport,
    Violation,
    b_from_c,
    c_from_b,
    c_from_r,
    check_kaluza_1d,
    check_theorem1,
    check_theorem2,
    check_word_condition,
    product_coeffs,
    ratio_table,
)
from .symmetrize import lift, solve_via_words, symmetrize
from .moments import (
    AtomicMeasureD,
    Measure1D,
    atomic_coeffs,
    moments,
    product_measure_coeffs,
)
from .kernels import VERDICTS, CertReport, certify, coeffs_from_norms

__all__ = [
    "__version__",
    "GradedMonoid",
    "MultiIndexes",
    "Words",
    "abelianize",
    "index_set",
    "multinomial",
    "partial_leq",
    "DEFAULT_GUARD",
    "CoeffTable",
    "GuardExceeded",
    "convolve",
    "delta",
    "evaluate",
    "geometric_table",
    "multinomial_table",
    "residual",
    "solve_renewal",
    "CheckReport",
    "Violation",
    "b_from_c",
    "c_from_b",
    "c_from_r",
    "check_kaluza_1d",
    "check_theorem1",
    "check_theorem2",
    "check_word_condition",
    "product_coeffs",
    "ratio_table",
    "lift",
    "solve_via_words",
    "symmetrize",
    "AtomicMeasureD",
    "Measure1D",
    "atomic_coeffs",
    "moments",
    "product_measure_coeffs",
    "VERDICTS",
    "CertReport",
    "certify",
    "coeffs_from_norms",
]
