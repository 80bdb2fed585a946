"""tricensus: exact verification workbench for triangulation counting claims.

Subpackages by concern:

* :mod:`tricensus.series_core` -- exact truncated power series over rationals
  (ring operations, composition, reversion, rigorous evaluation enclosures);
* :mod:`tricensus.census` -- the specific counting series g, h, g_L, (g-h)^2
  and their exact residual checks;
* :mod:`tricensus.asymptotics` -- growth constants, radius estimation,
  hypergeometric term structure, coefficient fits;
* :mod:`tricensus.triangulation_lab` -- exhaustive sphere-triangulation
  census, rooted counting, chromatic polynomials, gluing and decomposition;
* :mod:`tricensus.claims` -- the claim registry and CSV ledger;
* :mod:`tricensus.cli` -- the ``tricensus`` command.
"""

from .census import ClaimRecord, ClaimStatus, SeriesConvention
from .series_core import RationalInterval, TruncatedSeries, make_series
from .triangulation_lab import ChromaticPolynomial, PlanarTriangulation

__all__ = [
    "ClaimRecord",
    "ClaimStatus",
    "SeriesConvention",
    "RationalInterval",
    "TruncatedSeries",
    "make_series",
    "ChromaticPolynomial",
    "PlanarTriangulation",
]

__version__ = "0.1.0"
