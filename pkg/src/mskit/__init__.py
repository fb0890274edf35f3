"""Twists, mutations and coloured quivers of partial triangulations of unpunctured marked surfaces."""

from .catalog import annulus_complex, polygon_complex, torus_complex
from .charts import AnnulusChart, Bridging, DiskArc, DiskChart, Peripheral, parse_arc
from .errors import MskitError
from .qp import (
    cyclic_derivative,
    fz_mutate,
    gentle_check,
    qp_delete_vertex,
    qp_from_triangulation,
)
from .quiver import (
    ColouredQuiver,
    check_theorem71,
    coloured_quiver,
    mutate,
    q_colour,
    reduction_chart,
    subquiver_after_cut,
    twist,
)
from .surface import ArcCopy, OriginalBoundary, SurfaceComplex, Triangle, cut, flip, reglue
from .typea import cross_check, d_from_quiver, typea_mutate

__version__ = "0.1.0"

__all__ = [
    "cyclic_derivative",
    "fz_mutate",
    "gentle_check",
    "qp_delete_vertex",
    "qp_from_triangulation",
    "ColouredQuiver",
    "check_theorem71",
    "coloured_quiver",
    "mutate",
    "q_colour",
    "reduction_chart",
    "subquiver_after_cut",
    "twist",
    "annulus_complex",
    "polygon_complex",
    "torus_complex",
    "AnnulusChart",
    "Bridging",
    "DiskArc",
    "DiskChart",
    "Peripheral",
    "parse_arc",
    "MskitError",
    "ArcCopy",
    "OriginalBoundary",
    "SurfaceComplex",
    "Triangle",
    "cut",
    "flip",
    "reglue",
    "cross_check",
    "d_from_quiver",
    "typea_mutate",
]
