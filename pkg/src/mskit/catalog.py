"""Ready-made surfaces: triangulated polygons, annuli and the two-point torus."""

from __future__ import annotations

from typing import Iterable

from .charts import AnnulusChart, DiskChart, _polygon_triangles
from .surface import SurfaceComplex, Triangle


def polygon_complex(N: int, chords: Iterable, R: Iterable = ()) -> SurfaceComplex:
    """A triangulated N-gon with points labelled 0..N-1 clockwise.

    ``chords`` must be a full triangulation.  The t-th chord (counting from 1)
    gets sides ``t`` and ``t + len(chords)``, so its edge id is ``t``.  ``R``
    lists chords (as pairs) that form the partial triangulation.  Boundary
    segment ``i`` is side ``2 * len(chords) + 1 + i``.
    """
    chords = [tuple(sorted(c)) for c in chords]
    m = len(chords)
    boundary = [2 * m + 1 + i for i in range(N)]
    sides = {c: (t + 1, t + 1 + m) for t, c in enumerate(chords)}
    faces = _polygon_triangles(boundary, sides)
    tris = [Triangle(t, f) for t, f in enumerate(faces)]
    pairs = list(sides.values())
    edge_of = {c: s[0] for c, s in sides.items()}
    R_ids = [edge_of[tuple(sorted(r))] for r in R]
    return SurfaceComplex.build(tris, pairs, R_ids)


def chord_edge_ids(chords: Iterable) -> dict:
    """Edge id of each chord as assigned by :func:`polygon_complex`."""
    return {tuple(sorted(c)): t + 1 for t, c in enumerate(chords)}


def disk_chart(N: int) -> DiskChart:
    return DiskChart(N)


def annulus_complex(n0: int, n1: int, arcs: Iterable = (), R: Iterable = ()) -> SurfaceComplex:
    """A triangulated annulus; ``arcs`` are completed to a triangulation.

    Arc edge ids follow the sorted order of the completed arc list, starting
    at 1.  ``R`` lists arcs (chart coordinates) forming the partial
    triangulation.
    """
    M = n0 + n1
    chart = AnnulusChart(n0, n1)
    full = chart.extend_to_triangulation(list(arcs))
    sides_of = {a: (t + 1, t + 1 + M) for t, a in enumerate(full)}
    chart = AnnulusChart(
        n0,
        n1,
        sides0=tuple(2 * M + 1 + i for i in range(n0)),
        sides1=tuple(2 * M + 1 + n0 + i for i in range(n1)),
    )
    faces = chart.realize(sides_of)
    tris = [Triangle(t, f) for t, f in enumerate(faces)]
    R_ids = [sides_of[a][0] for a in R]
    return SurfaceComplex.build(tris, sides_of.values(), R_ids)


# The torus with one boundary cycle carrying two marked points, triangulated
# by five arcs with edge ids 1..5.  Sides 11 and 12 are the boundary.  With
# R = {1, 2, 3} every reduction is a hexagon; cutting along arc 3 leaves an
# annulus with two marked points on each boundary cycle.
TORUS_TRIANGLES = ((0, (4, 3, 1)), (1, (2, 5, 6)), (2, (10, 8, 11)), (3, (7, 9, 12)))
TORUS_GLUING = ((1, 6), (2, 7), (3, 8), (4, 9), (5, 10))


def torus_complex(R: Iterable[int] = ()) -> SurfaceComplex:
    return SurfaceComplex.build(TORUS_TRIANGLES, TORUS_GLUING, R)
