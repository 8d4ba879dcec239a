"""Exact q-series machinery for rank-r Vafa-Witten generating functions.

Subpackages and modules:
    cyclotomic, puiseux, ratfunc, biseries  exact coefficient and series arithmetic
    lattice, modular                        theta, eta, continued fractions, Hauptmoduln
    universal, relations, fixtures          universal series and their identities
    surface, donaldson                      surface-level assembly and checks
    localization                            fixed-point oracle on toric surfaces
"""

from .cyclotomic import CyclotomicScalar, epsilon
from .fixtures import embedded_fixtures, fixture
from .modular import eta_series, resolve_series, theta_series
from .puiseux import PuiseuxSeries
from .universal import build_horizontal, build_set, build_vertical, normalize_universal

__version__ = "0.1.0"

__all__ = [
    "CyclotomicScalar", "PuiseuxSeries", "epsilon", "eta_series", "theta_series", "resolve_series",
    "build_set", "build_vertical", "build_horizontal", "normalize_universal", "fixture", "embedded_fixtures",
]
