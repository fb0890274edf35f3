"""Exact arc coordinates on polygons and annuli.

Disk charts label the N boundary points 0..N-1 clockwise; boundary segment
``i`` runs from point ``i`` to point ``i + 1``.

Annulus charts work in the universal cover, a strip.  Points of cycle B0
lift to the top line with coordinate ``U`` and points of B1 to the bottom line
with coordinate ``V``; both coordinates increase along the clockwise boundary
direction.  Read round the strip as a disk, the clockwise order of lifted
points is "all of the top by increasing U, then all of the bottom by
increasing V".  The deck translation is ``(U, V) -> (U + n0, V - n1)``.

A bridging arc ``Bridging(p, q, w)`` is the arc with a lift joining ``U = p``
to ``V = q + w * n1`` where ``0 <= p < n0``.  ``Bridging(0, 0, 0)`` is the
reference path.  Shifting moves a lift to ``(U + 1, V + 1)``, so ``w`` gains
one each time either endpoint wraps past point 0 of its cycle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .errors import CrossingInput, InvalidArc, MalformedGluing, UnsupportedSurface
from .surface import OriginalBoundary, Provenance, SurfaceComplex

INF = float("inf")


# -- arcs -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class DiskArc:
    i: int
    j: int

    def __post_init__(self):
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    def __str__(self):
        return f"D{{{self.i},{self.j}}}"


@dataclass(frozen=True, order=True)
class Bridging:
    p: int
    q: int
    w: int

    def __str__(self):
        return f"B({self.p},{self.q};{self.w})"


@dataclass(frozen=True, order=True)
class Peripheral:
    b: int
    p: int
    q: int

    def __str__(self):
        return f"P({self.b};{self.p},{self.q})"


Arc = Union[DiskArc, Bridging, Peripheral]


def arc_key(arc: Arc):
    if isinstance(arc, DiskArc):
        return (0, arc.i, arc.j, 0)
    if isinstance(arc, Bridging):
        return (1, arc.p, arc.q, arc.w)
    return (2, arc.b, arc.p, arc.q)


_ARC_RE = [
    (re.compile(r"^D\{\s*(-?\d+)\s*,\s*(-?\d+)\s*\}$"), lambda m: DiskArc(int(m[1]), int(m[2]))),
    (re.compile(r"^B\(\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*(-?\d+)\s*\)$"),
     lambda m: Bridging(int(m[1]), int(m[2]), int(m[3]))),
    (re.compile(r"^P\(\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$"),
     lambda m: Peripheral(int(m[1]), int(m[2]), int(m[3]))),
]


def parse_arc(text: str) -> Arc:
    """Parse ``D{i,j}``, ``B(p,q;w)`` or ``P(b;p,q)``."""
    text = text.strip()
    for pattern, make in _ARC_RE:
        m = pattern.match(text)
        if m:
            return make(m)
    raise InvalidArc(f"cannot parse arc literal {text!r}")


# -- disk charts ------------------------------------------------------------

@dataclass(frozen=True)
class DiskChart:
    N: int
    provenance: tuple = ()
    sides: tuple = ()
    arcs: tuple = ()

    def __post_init__(self):
        if self.N < 4:
            raise InvalidArc(f"disk chart needs at least 4 points, got {self.N}")
        if not self.provenance:
            object.__setattr__(
                self, "provenance", tuple(OriginalBoundary(i) for i in range(self.N))
            )
        if len(self.provenance) != self.N:
            raise InvalidArc("provenance must cover every boundary segment")

    @property
    def arc_of(self) -> dict:
        return dict(self.arcs)

    def check(self, arc: Arc) -> DiskArc:
        if not isinstance(arc, DiskArc):
            raise InvalidArc(f"{arc} is not a disk arc")
        if not (0 <= arc.i < arc.j < self.N) or arc.j - arc.i in (1, self.N - 1):
            raise InvalidArc(f"{arc} is not an arc of the {self.N}-gon")
        return arc

    def shift(self, arc: Arc, steps: int = 1) -> DiskArc:
        self.check(arc)
        return DiskArc((arc.i + steps) % self.N, (arc.j + steps) % self.N)

    def periodicity(self, arc: Arc) -> int:
        self.check(arc)
        return self.N // 2 if 2 * (arc.j - arc.i) == self.N else self.N

    def crossing(self, a: Arc, b: Arc) -> int:
        self.check(a)
        self.check(b)
        return int(_chords_cross((a.i, a.j), (b.i, b.j)))

    def followers(self, arc: Arc) -> tuple[Provenance, Provenance]:
        self.check(arc)
        return (self.provenance[arc.i], self.provenance[arc.j])

    def all_arcs(self) -> list[DiskArc]:
        N = self.N
        return [DiskArc(i, j) for i in range(N) for j in range(i + 2, N) if j - i != N - 1]

    def extend_to_triangulation(self, arcs: Iterable[Arc]) -> list[DiskArc]:
        arcs = sorted({self.check(a) for a in arcs})
        _require_noncrossing(self, arcs)
        chords = _greedy_complete(self.N, [(a.i, a.j) for a in arcs])
        return sorted(DiskArc(i, j) for i, j in chords)

    def realize(self, sides_of: dict) -> list[tuple[int, int, int]]:
        """Triangles (clockwise side triples) for a full triangulation.

        ``sides_of`` maps each arc to its two side ids; the first one runs from
        the smaller label to the larger.
        """
        chords = {(a.i, a.j): s for a, s in sides_of.items()}
        return _polygon_triangles(list(self.sides), chords)


def _chords_cross(a: tuple, b: tuple) -> bool:
    """Strict interleaving of two chords given by comparable endpoint keys."""
    x, y = sorted(a)
    u, v = b
    if len({x, y, u, v}) < 4:
        return False
    return (x < u < y) != (x < v < y)


def _require_noncrossing(chart, arcs):
    for a, b in combinations(arcs, 2):
        if chart.crossing(a, b):
            raise CrossingInput(f"{a} crosses {b}")


def _greedy_complete(M: int, chords: list) -> list:
    """Extend noncrossing chords of an M-gon to a triangulation, lexicographically."""
    result = [tuple(sorted(c)) for c in chords]
    present = set(result)
    for i in range(M):
        for j in range(i + 2, M):
            if j - i == M - 1 or (i, j) in present:
                continue
            if not any(_chords_cross((i, j), c) for c in result):
                result.append((i, j))
                present.add((i, j))
    if len(result) != M - 3:
        raise CrossingInput(f"completion produced {len(result)} chords for a {M}-gon")
    return sorted(result)


def _polygon_triangles(boundary: list, chords: dict) -> list[tuple[int, int, int]]:
    """Faces of a triangulated M-gon as clockwise side triples.

    ``boundary[m]`` is the side id running from vertex m to vertex m+1, and
    ``chords[(i, j)]`` (i < j) gives the sides running i->j and j->i.
    """
    M = len(boundary)

    def side(u, v):
        if v == (u + 1) % M:
            return boundary[u]
        if u == (v + 1) % M:
            raise MalformedGluing("triangle traverses a boundary side backwards")
        if u < v:
            return chords[(u, v)][0]
        return chords[(v, u)][1]

    adj = {m: {(m + 1) % M, (m - 1) % M} for m in range(M)}
    for i, j in chords:
        adj[i].add(j)
        adj[j].add(i)
    faces = []
    for a, b, c in combinations(range(M), 3):
        if b in adj[a] and c in adj[b] and a in adj[c]:
            faces.append((side(a, b), side(b, c), side(c, a)))
    if len(faces) != M - 2:
        raise MalformedGluing(f"{len(faces)} faces found in a triangulated {M}-gon")
    return faces


# -- annulus charts ---------------------------------------------------------

@dataclass(frozen=True)
class AnnulusChart:
    n0: int
    n1: int
    provenance0: tuple = ()
    provenance1: tuple = ()
    sides0: tuple = ()
    sides1: tuple = ()
    arcs: tuple = ()
    reference: int | None = None

    def __post_init__(self):
        if self.n0 < 1 or self.n1 < 1:
            raise InvalidArc("each annulus boundary needs a marked point")
        if not self.provenance0:
            object.__setattr__(self, "provenance0", tuple(OriginalBoundary(i) for i in range(self.n0)))
        if not self.provenance1:
            object.__setattr__(
                self, "provenance1", tuple(OriginalBoundary(self.n0 + i) for i in range(self.n1))
            )

    @property
    def arc_of(self) -> dict:
        return dict(self.arcs)

    def n(self, b: int) -> int:
        return self.n0 if b == 0 else self.n1

    def check(self, arc: Arc) -> Arc:
        if isinstance(arc, Bridging):
            if 0 <= arc.p < self.n0 and 0 <= arc.q < self.n1:
                return arc
        elif isinstance(arc, Peripheral):
            if arc.b in (0, 1):
                nb = self.n(arc.b)
                if 0 <= arc.p < nb and 0 <= arc.q < nb and self._span(arc) >= 2:
                    return arc
        raise InvalidArc(f"{arc} is not an arc of the ({self.n0},{self.n1}) annulus")

    def _span(self, arc: Peripheral) -> int:
        nb = self.n(arc.b)
        return (arc.q - arc.p) % nb or nb

    def lift(self, arc: Arc, t: int = 0):
        """Endpoints of the t-th lift as ((line, coordinate), (line, coordinate))."""
        if isinstance(arc, Bridging):
            return ((0, arc.p + t * self.n0), (1, arc.q + arc.w * self.n1 - t * self.n1))
        nb = self.n(arc.b)
        L = self._span(arc)
        start = arc.p + t * nb
        return ((arc.b, start), (arc.b, start + L))

    def from_lift(self, x, y) -> Arc:
        """The arc whose lift joins strip points ``x`` and ``y``."""
        (bx, cx), (by, cy) = sorted([x, y])
        if bx != by:
            U, V = cx, cy
            t = U // self.n0
            U -= t * self.n0
            V += t * self.n1
            return self.check(Bridging(U, V % self.n1, V // self.n1))
        nb = self.n(bx)
        span = cy - cx
        if span == nb:
            return self.check(Peripheral(bx, cx % nb, cx % nb))
        if span > nb:
            raise InvalidArc(f"lift spans {span} points on a cycle of {nb}")
        return self.check(Peripheral(bx, cx % nb, cy % nb))

    def shift(self, arc: Arc, steps: int = 1) -> Arc:
        self.check(arc)
        x, y = self.lift(arc)
        return self.from_lift((x[0], x[1] + steps), (y[0], y[1] + steps))

    def periodicity(self, arc: Arc):
        self.check(arc)
        if isinstance(arc, Bridging):
            return INF
        return self.n(arc.b)

    def crossing(self, a: Arc, b: Arc) -> int:
        self.check(a)
        self.check(b)
        fixed = self.lift(a)
        K = abs(getattr(a, "w", 0)) + abs(getattr(b, "w", 0)) + 2
        return sum(1 for t in range(-K, K + 1) if _chords_cross(fixed, self.lift(b, t)))

    def followers(self, arc: Arc) -> tuple[Provenance, Provenance]:
        self.check(arc)
        if isinstance(arc, Bridging):
            return (self.provenance0[arc.p], self.provenance1[arc.q])
        prov = self.provenance0 if arc.b == 0 else self.provenance1
        return (prov[arc.p], prov[arc.q])

    def extend_to_triangulation(self, arcs: Iterable[Arc]) -> list[Arc]:
        arcs = sorted({self.check(a) for a in arcs}, key=arc_key)
        _require_noncrossing(self, arcs)
        base = self._cut_arc(arcs)
        domain, index = self._domain(base)
        chords = [self._domain_chord(a, base, index) for a in arcs if a != base]
        completed = _greedy_complete(len(domain), chords)
        result = {base}
        for i, j in completed:
            result.add(self.from_lift(domain[i], domain[j]))
        if len(result) != self.n0 + self.n1:
            raise CrossingInput(f"annulus completion produced {len(result)} arcs")
        return sorted(result, key=arc_key)

    def realize(self, sides_of: dict) -> list[tuple[int, int, int]]:
        """Triangles for a full triangulation; see :meth:`DiskChart.realize`.

        The smallest bridging arc is used to cut the annulus into a polygon;
        for every other arc the first side runs from the lower polygon index
        to the higher one.
        """
        base = min((a for a in sides_of if isinstance(a, Bridging)), key=arc_key)
        domain, index = self._domain(base)
        n0, n1 = self.n0, self.n1
        x, y = sides_of[base]
        U0 = base.p
        V0 = base.q + base.w * n1
        boundary = [self.sides0[(U0 + m) % n0] for m in range(n0)]
        boundary.append(x)
        boundary += [self.sides1[(V0 - n1 + m) % n1] for m in range(n1)]
        boundary.append(y)
        chords = {}
        for a, pair in sides_of.items():
            if a != base:
                chords[self._domain_chord(a, base, index)] = pair
        return _polygon_triangles(boundary, chords)

    # the polygon obtained by cutting along a bridging arc

    def _cut_arc(self, arcs: list) -> Bridging:
        bridging = [a for a in arcs if isinstance(a, Bridging)]
        if bridging:
            return bridging[0]
        p = next(u for u in range(self.n0) if not self._inside_peripheral(0, u, arcs))
        q = next(v for v in range(self.n1) if not self._inside_peripheral(1, v, arcs))
        return Bridging(p, q, 0)

    def _inside_peripheral(self, b: int, x: int, arcs) -> bool:
        nb = self.n(b)
        for a in arcs:
            if isinstance(a, Peripheral) and a.b == b:
                if 0 < (x - a.p) % nb < self._span(a):
                    return True
        return False

    def _domain(self, base: Bridging):
        U0 = base.p
        V0 = base.q + base.w * self.n1
        points = [(0, U0 + m) for m in range(self.n0 + 1)]
        points += [(1, V0 - self.n1 + m) for m in range(self.n1 + 1)]
        return points, {pt: m for m, pt in enumerate(points)}

    def _domain_chord(self, arc, base, index):
        K = abs(getattr(arc, "w", 0)) + abs(base.w) + 3
        for t in range(-K, K + 1):
            x, y = self.lift(arc, t)
            if x in index and y in index:
                return tuple(sorted((index[x], index[y])))
        raise CrossingInput(f"{arc} has no lift inside the domain cut along {base}")

    def all_arcs(self, max_winding: int = 1) -> list[Arc]:
        out = []
        for b in (0, 1):
            nb = self.n(b)
            for p in range(nb):
                for L in range(2, nb + 1):
                    out.append(Peripheral(b, p, (p + L) % nb))
        for p in range(self.n0):
            for q in range(self.n1):
                for w in range(-max_winding, max_winding + 1):
                    out.append(Bridging(p, q, w))
        return out


Chart = Union[DiskChart, AnnulusChart]


# -- module-level operations ----------------------------------------------

def shift(chart: Chart, arc: Arc, steps: int = 1) -> Arc:
    return chart.shift(arc, steps)


def periodicity(chart: Chart, arc: Arc):
    return chart.periodicity(arc)


def crossing(chart: Chart, a: Arc, b: Arc) -> int:
    return chart.crossing(a, b)


def followers(chart: Chart, arc: Arc):
    return chart.followers(arc)


def extend_to_triangulation(chart: Chart, arcs: Iterable[Arc]) -> list[Arc]:
    return chart.extend_to_triangulation(arcs)


# -- charts of surface components -------------------------------------------

def _start_key(cx: SurfaceComplex, side: int):
    prov = cx.provenance(side)
    if isinstance(prov, OriginalBoundary):
        return (0, prov.segment, side)
    return (1, side, side)


def chart_of_component(cx: SurfaceComplex, component) -> Chart:
    """Coordinatize a disk or annulus component of a complex.

    Every interior edge of the component gets chart coordinates; boundary
    segments keep their side ids and provenance.
    """
    component = tuple(component)
    cls = cx.classify(component)
    if cls.is_disk:
        return _disk_chart(cx, component)
    if cls.is_annulus:
        return _annulus_chart(cx, component)
    raise UnsupportedSurface(
        f"component with g={cls.genus}, b={cls.boundaries} has no supported chart"
    )


def _component_edges(cx: SurfaceComplex, component) -> list[int]:
    return sorted(
        cx.edge_id(s)
        for t in component
        for s in cx.triangles[t].sides
        if not cx.is_boundary(s) and s == cx.edge_id(s)
    )


def _disk_chart(cx: SurfaceComplex, component) -> DiskChart:
    (cycle,) = cx.boundary_cycles(component)
    start = min(range(len(cycle)), key=lambda m: _start_key(cx, cycle[m]))
    cycle = cycle[start:] + cycle[:start]
    label = {cx.vertex_start(s): m for m, s in enumerate(cycle)}
    arcs = tuple(
        (e, DiskArc(label[cx.vertex_start(e)], label[cx.vertex_end(e)]))
        for e in _component_edges(cx, component)
    )
    return DiskChart(
        N=len(cycle),
        provenance=tuple(cx.provenance(s) for s in cycle),
        sides=cycle,
        arcs=arcs,
    )


def _annulus_chart(cx: SurfaceComplex, component) -> AnnulusChart:
    cycles = cx.boundary_cycles(component)
    first = min(cycles, key=lambda c: min(_start_key(cx, s) for s in c))
    cycles = [first] + [c for c in cycles if c is not first]
    on_cycle = {}
    for b, cyc in enumerate(cycles):
        for s in cyc:
            on_cycle[cx.vertex_start(s)] = b
    edges = _component_edges(cx, component)
    bridging = [
        e for e in edges if on_cycle[cx.vertex_start(e)] != on_cycle[cx.vertex_end(e)]
    ]
    if not bridging:
        raise MalformedGluing("annulus triangulation without a bridging edge")
    ref = bridging[0]
    ends = (cx.vertex_start(ref), cx.vertex_end(ref))
    v0, v1 = ends if on_cycle[ends[0]] == 0 else ends[::-1]
    rotated = []
    for cyc, v in zip(cycles, (v0, v1)):
        k = next(m for m, s in enumerate(cyc) if cx.vertex_start(s) == v)
        rotated.append(cyc[k:] + cyc[:k])
    c0, c1 = rotated
    n0, n1 = len(c0), len(c1)

    # cut along the reference edge and read strip coordinates off the disk
    cut_cx = cx.cut([ref], remove_triangles=False)
    walk = [c0[0]]
    s = cut_cx.next_boundary(c0[0])
    while s != c0[0]:
        walk.append(s)
        s = cut_cx.next_boundary(s)
    ref_sides = set(cx.edge_sides(ref))
    if len(walk) != n0 + n1 + 2 or walk[n0] not in ref_sides or walk[-1] not in ref_sides:
        raise MalformedGluing("cut along the reference edge is not a disk")
    coord = {}
    for m, s in enumerate(walk):
        v = cut_cx.vertex_start(s)
        if m <= n0:
            coord[v] = (0, m)
        else:
            coord[v] = (1, m - n0 - 1 - n1)
    chart = AnnulusChart(
        n0=n0,
        n1=n1,
        provenance0=tuple(cx.provenance(s) for s in c0),
        provenance1=tuple(cx.provenance(s) for s in c1),
        sides0=c0,
        sides1=c1,
        reference=ref,
    )
    arcs = []
    for e in edges:
        if e == ref:
            arcs.append((e, Bridging(0, 0, 0)))
        else:
            x = coord[cut_cx.vertex_start(e)]
            y = coord[cut_cx.vertex_end(e)]
            arcs.append((e, chart.from_lift(x, y)))
    return AnnulusChart(
        n0=n0,
        n1=n1,
        provenance0=chart.provenance0,
        provenance1=chart.provenance1,
        sides0=c0,
        sides1=c1,
        arcs=tuple(arcs),
        reference=ref,
    )
