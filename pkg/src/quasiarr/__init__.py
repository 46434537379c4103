"""Characteristic quasi-polynomials of truncated integral hyperplane arrangements."""

from .arrangement import (
    QuasiPolynomial,
    SubsetProfile,
    TruncatedArrangement,
    characteristic_polynomial,
    characteristic_quasi_polynomial,
    constituent,
    count_complement,
    lcm_period,
    q_zero,
    subset_profiles,
    tilde_d,
)
from .errors import (
    BudgetExceededError,
    InvalidModulusError,
    PreconditionError,
    QuasiArrError,
    RangeError,
    ShapeError,
    SizeLimitError,
)
from .linalg import IntMatrix, ModqFactors, SmithForm, smith_normal_form
from .polynomial import Polynomial

__version__ = "0.1.0"
