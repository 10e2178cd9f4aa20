"""Exact computations for degenerate SL_n: modules M_m, Plücker relations, R_n."""

from .errors import DegslError, InvalidInput, ResourceCapExceeded, TheoremCheckFailed
from .roots import (
    MultDegree,
    RootIndex,
    dyck_paths,
    enumerate_polytope,
    path_bound,
    positive_roots,
    weyl_dimension,
)
from .tensormod import apply_f_monomial, build_module, ffl_check, hilbert

__version__ = "0.1.0"

__all__ = [
    "DegslError",
    "InvalidInput",
    "ResourceCapExceeded",
    "TheoremCheckFailed",
    "MultDegree",
    "RootIndex",
    "dyck_paths",
    "enumerate_polytope",
    "path_bound",
    "positive_roots",
    "weyl_dimension",
    "apply_f_monomial",
    "build_module",
    "ffl_check",
    "hilbert",
    "__version__",
]
