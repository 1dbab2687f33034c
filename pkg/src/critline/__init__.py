"""critline: mollified second-moment constants for critical-line zero proportions.

The library evaluates the constants c1, c12, c2 of a two-piece mollifier, the
resulting proportion bound kappa >= 1 - log(c)/R with c = c1 + 2*c12 + c2,
optimizes the smoothing polynomials, and cross-checks the underlying identities
with independent numerical oracles.
"""

from .moments import KappaReport, MollifierConfig, evaluate
from .presets import PRESETS, kappa_preset, kappa_star_preset

__version__ = "1.0.0"

__all__ = [
    "KappaReport",
    "MollifierConfig",
    "evaluate",
    "PRESETS",
    "kappa_preset",
    "kappa_star_preset",
    "__version__",
]
