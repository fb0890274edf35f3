"""Coloured quivers of partial triangulations, twists and mutation.

The twist of an arc of R is computed by cutting the surface along the other
arcs of R and rotating the arc by one marked point in the resulting disk or
annulus.  Everything else (colours, periodicities, mutation) is read off that
cut chart.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .charts import INF, Arc, Chart, arc_key, chart_of_component
from .errors import (
    MissingWindow,
    UnknownEdge,
    VertexMismatch,
    WindowMismatch,
)
from .surface import ArcCopy, SurfaceComplex, Triangle, cut, reglue


@dataclass(frozen=True)
class ColouredQuiver:
    """Vertices with periodicities and coloured arrows.

    ``arrows`` holds ``((src, dst, colour), multiplicity)`` pairs, sorted.
    Colours out of a vertex with finite ``d`` lie in ``0..d-1``; for infinite
    ``d`` only colours inside ``window`` are stored.
    """

    vertices: tuple
    periods: tuple
    arrows: tuple
    window: tuple | None = None

    @classmethod
    def make(cls, d: Mapping, arrows: Mapping | Iterable = (), window=None) -> "ColouredQuiver":
        verts = tuple(sorted(d))
        counts: Counter = Counter()
        items = arrows.items() if isinstance(arrows, Mapping) else ((a, 1) for a in arrows)
        for (i, j, c), m in items:
            if m:
                di = d[i]
                counts[(i, j, c % di if di != INF else c)] += m
        if window is not None and not any(d[v] == INF for v in verts):
            window = None
        if window is not None:
            window = (int(window[0]), int(window[1]))
        return cls(
            verts,
            tuple(d[v] for v in verts),
            tuple(sorted(counts.items())),
            window,
        )

    @property
    def d(self) -> dict:
        return dict(zip(self.vertices, self.periods))

    @property
    def arrow_counts(self) -> Counter:
        return Counter(dict(self.arrows))

    def colours(self, i):
        """The colours at which arrows out of ``i`` are recorded."""
        di = self.d[i]
        if di != INF:
            return range(int(di))
        if self.window is None:
            raise MissingWindow(f"vertex {i} has infinite periodicity")
        return range(self.window[0], self.window[1] + 1)

    def q(self, i, j, c) -> int:
        di = self.d[i]
        if di != INF:
            c %= di
        elif self.window is None or not self.window[0] <= c <= self.window[1]:
            raise WindowMismatch(f"colour {c} at vertex {i} lies outside the window")
        return self._lookup.get((i, j, c), 0)

    @property
    def _lookup(self) -> dict:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = dict(self.arrows)
            object.__setattr__(self, "_lookup_cache", cache)
        return cache

    def neighbours(self, i) -> set:
        return {b for (a, b, _), _m in self.arrows if a == i} | {
            a for (a, b, _), _m in self.arrows if b == i
        }

    def labels(self) -> Counter:
        """Colour sets per ordered vertex pair, as a multiset of sorted tuples."""
        per_pair: dict = {}
        for (i, j, c), m in self.arrows:
            per_pair.setdefault((i, j), []).extend([c] * m)
        return Counter(tuple(sorted(cs)) for cs in per_pair.values())

    def colour_pairs(self) -> dict:
        per_pair: dict = {}
        for (i, j, c), m in self.arrows:
            per_pair.setdefault((i, j), []).extend([c] * m)
        return {k: tuple(sorted(v)) for k, v in per_pair.items()}

    def relabel(self, mapping: Mapping) -> "ColouredQuiver":
        d = {mapping[v]: p for v, p in self.d.items()}
        arrows = {(mapping[i], mapping[j], c): m for (i, j, c), m in self.arrows}
        return ColouredQuiver.make(d, arrows, self.window)

    def __str__(self) -> str:
        lines = []
        for v, p in zip(self.vertices, self.periods):
            lines.append(f"vertex {v}: d={'inf' if p == INF else p}")
        for (i, j, c), m in self.arrows:
            lines.append(f"{i} -> {j} ({c})" + (f" x{m}" if m > 1 else ""))
        if self.window:
            lines.append(f"window {self.window[0]}..{self.window[1]}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ReductionChart:
    chart: Chart
    arc: Arc
    cut: SurfaceComplex = field(repr=False)
    component: tuple = field(repr=False)


def _r_edge(cx: SurfaceComplex, i: int) -> int:
    p = cx.partner(i)
    if p is None or min(i, p) not in cx.R:
        raise UnknownEdge(f"{i} is not an arc of the partial triangulation")
    return min(i, p)


def reduction_chart(cx: SurfaceComplex, i: int) -> ReductionChart:
    """Cut along every arc of R except ``i`` and coordinatize the piece holding ``i``."""
    i = _r_edge(cx, i)
    cut_cx = cut(cx, cx.R - {i}, remove_triangles=False)
    comp = cut_cx.component_of_side(i)
    chart = chart_of_component(cut_cx, comp)
    return ReductionChart(chart, chart.arc_of[i], cut_cx, comp)


def _count_copies(provs, j, R) -> int:
    return sum(1 for p in provs if isinstance(p, ArcCopy) and p.arc == j and j in R)


def q_colour(cx: SurfaceComplex, i: int, j: int, c: int) -> int:
    """Number of endpoints of the c-fold twist of arc ``i`` whose follower is arc ``j``."""
    red = reduction_chart(cx, i)
    i = _r_edge(cx, i)
    if j == i:
        return 0
    provs = red.chart.followers(red.chart.shift(red.arc, c))
    return _count_copies(provs, j, cx.R)


def coloured_quiver(cx: SurfaceComplex, window=None) -> ColouredQuiver:
    d = {}
    arrows: Counter = Counter()
    charts = {i: reduction_chart(cx, i) for i in sorted(cx.R)}
    for i, red in charts.items():
        d[i] = red.chart.periodicity(red.arc)
    if any(p == INF for p in d.values()) and window is None:
        raise MissingWindow("some arc has infinite periodicity; a colour window is required")
    for i, red in charts.items():
        if d[i] == INF:
            colours = range(window[0], window[1] + 1)
        else:
            colours = range(d[i])
        for c in colours:
            for p in red.chart.followers(red.chart.shift(red.arc, c)):
                if isinstance(p, ArcCopy) and p.arc != i and p.arc in cx.R:
                    arrows[(i, p.arc, c)] += 1
    return ColouredQuiver.make(d, arrows, window)


def twist(cx: SurfaceComplex, i: int, direction: int = 1) -> Arc:
    """The image of arc ``i`` under the twist (or its inverse) in its reduction chart."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    red = reduction_chart(cx, i)
    return red.chart.shift(red.arc, direction)


def mutate(cx: SurfaceComplex, k: int) -> SurfaceComplex:
    """Replace arc ``k`` of R by its twist, keeping the edge id ``k``.

    The new arc is completed to a triangulation of the reduction chart, the
    chart is rebuilt as triangles and the other arcs of R are glued back.
    """
    k = _r_edge(cx, k)
    others = cx.R - {k}
    red = reduction_chart(cx, k)
    chart, cut_cx, comp = red.chart, red.cut, red.component
    new_arc = chart.shift(red.arc)
    full = chart.extend_to_triangulation([new_arc])
    k_sides = cut_cx.edge_sides(k)
    spare = sorted(cut_cx.edge_sides(e) for e in chart.arc_of if e != k)
    rest = sorted((a for a in full if a != new_arc), key=arc_key)
    sides_of = {new_arc: k_sides}
    sides_of.update(zip(rest, spare))
    faces = chart.realize(sides_of)

    tris = list(cut_cx.triangles)
    for idx, face in zip(sorted(comp), faces):
        tris[idx] = Triangle(tris[idx].id, face)
    comp_sides = {s for t in comp for s in cut_cx.triangles[t].sides}
    pairs = [p for p in cut_cx.pairs if p[0] not in comp_sides]
    pairs += list(sides_of.values())
    rebuilt = SurfaceComplex.build(
        tris, pairs, cut_cx.R, dict(cut_cx.boundary_provenance), cx.removed
    )
    result = reglue(rebuilt, others)
    result.validate()
    return result


def mutate_arc(cx: SurfaceComplex, k: int) -> tuple[SurfaceComplex, Arc]:
    """Mutation together with the new arc in the (pre-mutation) chart."""
    return mutate(cx, k), twist(cx, k)


# -- checks ------------------------------------------------------------------

@dataclass
class Thm71Report:
    k: int
    checks: int = 0
    failures: list = field(default_factory=list)
    applicable: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def __str__(self) -> str:
        head = f"theorem check at k={self.k}: {self.checks} checks, {len(self.failures)} failures"
        lines = [head]
        lines += [f"  FAIL {f}" for f in self.failures]
        if self.skipped:
            lines.append(f"  hypotheses fail for {sorted(self.skipped)}")
        return "\n".join(lines)


def _compare_colours(Q, Qt, i, lo_shift, hi_shift):
    """Colours at vertex i usable in both quivers when shifted by -1..+1."""
    di = Q.d[i]
    if di != INF:
        return range(int(di))
    return range(Q.window[0] + lo_shift, Q.window[1] - hi_shift + 1)


def check_theorem71(Q: ColouredQuiver, Qt: ColouredQuiver, k) -> Thm71Report:
    """Check the mutation rules relating Q and its mutation Qt at vertex k."""
    if set(Q.vertices) != set(Qt.vertices) or k not in Q.d:
        raise VertexMismatch("quivers have different vertex sets or lack vertex k")
    if Q.window is not None and Qt.window is not None and Q.window != Qt.window:
        raise WindowMismatch(f"windows {Q.window} and {Qt.window} are not comparable")
    rep = Thm71Report(k)
    d, dt = Q.d, Qt.d
    rep.record(d[k] == dt[k], f"d_{k}: {d[k]} != {dt[k]}")
    others = [v for v in Q.vertices if v != k]
    if d[k] == dt[k]:
        for j in others:
            for c in _compare_colours(Q, Qt, k, 1, 1):
                a, b = Qt.q(k, j, c), Q.q(k, j, c + 1)
                rep.record(a == b, f"q~({c})_{k},{j}={a} but q({c + 1})_{k},{j}={b}")
    quiet = [j for j in others if Q.q(k, j, 0) == 0]
    rep.applicable = quiet
    rep.skipped = [j for j in others if j not in quiet]
    for j in quiet:
        same = d[j] == dt[j]
        rep.record(same, f"d_{j}: {d[j]} != {dt[j]}")
        if not same:
            continue
        for c in _compare_colours(Q, Qt, j, 1, 1):
            a, b = Qt.q(j, k, c), Q.q(j, k, c - 1)
            rep.record(a == b, f"q~({c})_{j},{k}={a} but q({c - 1})_{j},{k}={b}")
    for i in quiet:
        if d[i] != dt[i]:
            continue
        for j in quiet:
            if i == j:
                continue
            for c in _compare_colours(Q, Qt, i, 0, 0):
                a, b = Qt.q(i, j, c), Q.q(i, j, c)
                rep.record(a == b, f"q~({c})_{i},{j}={a} but q({c})_{i},{j}={b}")
    return rep


def subquiver_after_cut(Q: ColouredQuiver, S: Iterable) -> ColouredQuiver:
    """Full coloured subquiver on the vertices outside S."""
    S = set(S)
    d = {v: p for v, p in Q.d.items() if v not in S}
    arrows = {(i, j, c): m for (i, j, c), m in Q.arrows if i not in S and j not in S}
    return ColouredQuiver.make(d, arrows, Q.window)
