"""Exact verification of the rigidity proof for minimal hypersurfaces in
the 5-sphere with constant scalar curvature and zero Gauss curvature.

Everything is computed over exact scalars (rationals, single quadratic
extensions, certified intervals); randomized batteries are deterministic
under a fixed 64-bit LCG; reports carry machine-checkable residuals and
contradiction certificates.
"""

from .certificates import Certificate, CertificateKind
from .coefficients import COEFFICIENT_NAMES, Coefficients, DEFAULT_COEFFICIENTS
from .exact import (
    ExactScalar,
    Ordering,
    RATIONAL_BACKEND,
    parse_scalar,
    rational,
    scalar,
    solve_quadratic,
    sqrt,
)
from .pipeline import PinchingInterval, VerifierConfig, run_all, run_theorem_proof
from .report import Step, StepStatus, VerificationReport
from .spectrum import InvariantSet, Spectrum, invariants, random_minimal_spectrum

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertificateKind",
    "COEFFICIENT_NAMES",
    "Coefficients",
    "DEFAULT_COEFFICIENTS",
    "ExactScalar",
    "Ordering",
    "RATIONAL_BACKEND",
    "parse_scalar",
    "rational",
    "scalar",
    "solve_quadratic",
    "sqrt",
    "PinchingInterval",
    "VerifierConfig",
    "run_all",
    "run_theorem_proof",
    "Step",
    "StepStatus",
    "VerificationReport",
    "InvariantSet",
    "Spectrum",
    "invariants",
    "random_minimal_spectrum",
    "__version__",
]
