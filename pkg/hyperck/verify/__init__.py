"""
Randomized verification of the algebraic and analytic laws.

Provides:
- Seeded rational samplers for elements, polynomials, stems and sphere points
- The law registry, grouped by suite
- A sequential runner producing VerificationReport models
"""

from hyperck.verify.laws import LAWS, Law
from hyperck.verify.sampling import RationalSampler
from hyperck.verify.suites import laws_for, run_law, run_suite, run_verification, suite_settings

__all__ = [
    # Sampling
    "RationalSampler",
    # Laws
    "Law",
    "LAWS",
    "laws_for",
    # Runner
    "suite_settings",
    "run_law",
    "run_suite",
    "run_verification",
]
