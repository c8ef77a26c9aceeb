"""Certified root clustering for polynomials, exp and sin with soft predicates.

The arithmetic is exact dyadic/interval arithmetic; comparisons refine their
inputs adaptively and report the precision they needed.
"""

from .analysis import (
    TheoryBounds,
    build_s0,
    cluster_geometry,
    gamma_poly,
    mahler,
    predicted_bounds,
    s_f,
)
from .clusterer import (
    ComponentPair,
    DepthExceeded,
    IsolatingSystem,
    SubdivisionStats,
    cluster,
    verify_isolating_system,
)
from .dyadic import ComplexDyadic, Dyadic
from .functions import Exp, Poly, Sin, eval_fk_box, eval_fk_point, magnitude_upper
from .geometry import ComplexBox, Disc, discs_intersect
from .interval import ApproxReal, ComplexInterval, DyInterval
from .kernels import BACKEND
from .pellet import c_tilde_k, first_c
from .roots import RootSet
from .softcompare import IterationCap, SoftOutcome, Verdict, soft_compare

__version__ = "0.1.0"
