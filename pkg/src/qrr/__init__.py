"""qrr: exact q-series toolkit.

Constructs the Bressoud, Santos, and U polynomial families from their
defining summations, verifies their identities and one-variable
q-holonomic recurrences at desk scale with exact big-integer arithmetic,
guesses recurrences from data, and checks the two classic partition
product sides through truncated series.
"""

from ._backend import BACKEND, backend_name
from .families import (
    PARTNER,
    CvInstance,
    Family,
    Kernel,
    cv_residual,
    family_poly,
    kernel,
    kernel_sum_identity,
)
from .limits import FAMILY_SIDE, TruncatedSeries, limit_check, rr_product
from .qbinom import contiguous_residual, qbinom, qbinom_via_product, qpochhammer
from .qpoly import ONE, Q, ZERO, BiPoly, QPoly
from .recurrence import (
    RECURRENCE_FAMILIES,
    Recurrence,
    VerificationReport,
    chapman_residuals,
    guess,
    known_recurrence,
    residual,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BiPoly",
    "CvInstance",
    "FAMILY_SIDE",
    "Family",
    "Kernel",
    "ONE",
    "PARTNER",
    "Q",
    "QPoly",
    "RECURRENCE_FAMILIES",
    "Recurrence",
    "TruncatedSeries",
    "VerificationReport",
    "ZERO",
    "backend_name",
    "chapman_residuals",
    "contiguous_residual",
    "cv_residual",
    "family_poly",
    "guess",
    "kernel",
    "kernel_sum_identity",
    "known_recurrence",
    "limit_check",
    "qbinom",
    "qbinom_via_product",
    "qpochhammer",
    "residual",
    "rr_product",
    "verify",
]
