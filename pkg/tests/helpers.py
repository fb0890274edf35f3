"""Independent oracles shared by the test modules.

Nothing here uses charts, cutting or reduction; polygons are handled with
plain label arithmetic.
"""

from __future__ import annotations

from collections import Counter

from mskit.catalog import polygon_complex
from mskit.charts import DiskArc, DiskChart


def polygon_labels(cx, N: int) -> dict:
    """Corner class -> polygon label, read from the boundary sides of a polygon complex.

    Boundary segment i of an N-gon built by polygon_complex is the side
    2m + 1 + i, where m is the number of chords.
    """
    m = len(cx.interior_edges)
    labels = {}
    for i in range(N):
        s = 2 * m + 1 + i
        labels[cx.vertex_start(s)] = i
        labels[cx.vertex_end(s)] = (i + 1) % N
    return labels


def polygon_chords(cx, N: int) -> dict:
    """Edge id -> chord (i, j) with i < j for a triangulated polygon."""
    labels = polygon_labels(cx, N)
    out = {}
    for e in cx.interior_edges:
        a, b = labels[cx.vertex_start(e)], labels[cx.vertex_end(e)]
        out[e] = (min(a, b), max(a, b))
    return out


def full_polygon(N: int, R) -> object:
    """A polygon complex with partial triangulation R (a list of chords)."""
    full = DiskChart(N).extend_to_triangulation([DiskArc(*c) for c in R])
    return polygon_complex(N, [(a.i, a.j) for a in full], R)


def _follower(N: int, others, v: int, w: int):
    """Chord of ``others`` or boundary segment following the arc (v, w) at v.

    Returns (neighbour label, chord or None for the boundary).
    """
    dist = lambda u: (u - v) % N
    best, best_chord = (v + 1) % N, None
    for c in others:
        if v in c:
            u = c[0] if c[1] == v else c[1]
            if dist(best) < dist(u) < dist(w):
                best, best_chord = u, c
    return best, best_chord


def local_twist(N: int, others, arc):
    """Twist of ``arc`` by composing with its two followers at each end."""
    a, b = arc
    u, _ = _follower(N, others, a, b)
    x, _ = _follower(N, others, b, a)
    return tuple(sorted((u, x)))


def local_q(N: int, others, arc) -> Counter:
    """Follower multiplicities of ``arc``: chord -> 0, 1 or 2."""
    a, b = arc
    out = Counter()
    for v, w in ((a, b), (b, a)):
        _, c = _follower(N, others, v, w)
        if c is not None:
            out[c] += 1
    return out


def local_quiver(N: int, R) -> tuple[dict, Counter]:
    """Periodicities and coloured arrows of a polygon partial triangulation.

    Vertices are keyed by chord.  Uses only the endpoint-follower rule.
    """
    R = [tuple(sorted(c)) for c in R]
    d, arrows = {}, Counter()
    for g in R:
        others = [c for c in R if c != g]
        orbit = [g]
        while True:
            nxt = local_twist(N, others, orbit[-1])
            if nxt == g:
                break
            orbit.append(nxt)
        d[g] = len(orbit)
        for c, arc in enumerate(orbit):
            for h, m in local_q(N, others, arc).items():
                arrows[(g, h, c)] += m
    return d, arrows
