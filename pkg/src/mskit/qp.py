"""Quivers with potential of triangulated surfaces.

Each triangle contributes an arrow from side ``k`` to side ``k + 1`` whenever
both sides are interior edges.  Arrow ids are ``3 * triangle_id + k``, so they
survive cutting.  The potential is the sum of the 3-cycles of triangles with
no boundary side.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import NonQuadraticRelations, NotFullTriangulation, SurfaceError, TwoCycleAtK
from .surface import SurfaceComplex


@dataclass(frozen=True, order=True)
class Arrow:
    id: int
    src: int
    dst: int


def canonical_cycle(cycle: Iterable[int]) -> tuple:
    cycle = tuple(cycle)
    if not cycle:
        return cycle
    return min(cycle[k:] + cycle[:k] for k in range(len(cycle)))


@dataclass(frozen=True)
class Quiver:
    """Vertices plus a multiset of arrows ``(src, dst) -> multiplicity``."""

    vertices: tuple
    arrows: tuple

    @classmethod
    def make(cls, vertices: Iterable, arrows) -> "Quiver":
        counts = Counter(arrows) if not isinstance(arrows, (dict, Counter)) else Counter(arrows)
        return cls(tuple(sorted(vertices)),
                   tuple(sorted((k, m) for k, m in counts.items() if m > 0)))

    @property
    def counts(self) -> Counter:
        return Counter(dict(self.arrows))

    def exchange_matrix(self) -> dict:
        """Signed arrow counts b[i, j] = #(i->j) - #(j->i), nonzero entries only."""
        b: Counter = Counter()
        for (i, j), m in self.arrows:
            b[(i, j)] += m
            b[(j, i)] -= m
        return {k: v for k, v in b.items() if v}

    def reduced(self) -> "Quiver":
        """Cancel every pair of opposite arrows."""
        counts = self.counts
        out = Counter()
        for (i, j), m in counts.items():
            n = m - counts.get((j, i), 0)
            if n > 0:
                out[(i, j)] = n
        return Quiver.make(self.vertices, out)

    def has_two_cycle_at(self, k) -> bool:
        counts = self.counts
        return any(
            counts.get((k, x), 0) and counts.get((x, k), 0) for x in self.vertices
        )


@dataclass(frozen=True)
class QuiverWithPotential:
    vertices: tuple
    arrows: tuple
    potential: tuple = ()

    @property
    def quiver(self) -> Quiver:
        return Quiver.make(self.vertices, [(a.src, a.dst) for a in self.arrows])

    @property
    def arrow(self) -> dict:
        return {a.id: a for a in self.arrows}

    def relations(self) -> list:
        """Nonzero cyclic derivatives of the potential, one per arrow."""
        out = []
        for a in self.arrows:
            rel = cyclic_derivative(self.potential, a.id)
            if rel:
                out.append(rel)
        return out


def make_qp(vertices, arrows, potential=()) -> QuiverWithPotential:
    pot = Counter()
    for coeff, cycle in potential:
        pot[canonical_cycle(cycle)] += coeff
    arrows = tuple(sorted(a if isinstance(a, Arrow) else Arrow(*a) for a in arrows))
    return QuiverWithPotential(
        tuple(sorted(vertices)),
        arrows,
        tuple(sorted((c, cyc) for cyc, c in pot.items() if c)),
    )


def qp_from_triangulation(cx: SurfaceComplex) -> QuiverWithPotential:
    try:
        cx.validate()
    except SurfaceError as exc:
        raise NotFullTriangulation(f"not a triangulated surface: {exc}") from exc
    arrows = []
    potential = []
    for tri in cx.triangles:
        sides = tri.sides
        inner = [cx.partner(s) is not None for s in sides]
        for k in range(3):
            if inner[k] and inner[(k + 1) % 3]:
                arrows.append(Arrow(3 * tri.id + k, cx.edge_id(sides[k]),
                                    cx.edge_id(sides[(k + 1) % 3])))
        if all(inner):
            potential.append((1, (3 * tri.id, 3 * tri.id + 1, 3 * tri.id + 2)))
    return make_qp(cx.interior_edges, arrows, potential)


def cyclic_derivative(potential, a: int) -> dict:
    """The cyclic derivative of a potential with respect to arrow ``a``.

    Returns a dict from paths (tuples of arrow ids) to coefficients.
    """
    if isinstance(potential, QuiverWithPotential):
        potential = potential.potential
    out: Counter = Counter()
    for coeff, cycle in potential:
        for k, x in enumerate(cycle):
            if x == a:
                out[tuple(cycle[k + 1:]) + tuple(cycle[:k])] += coeff
    return {p: c for p, c in out.items() if c}


def fz_mutate(Q: Quiver, k) -> Quiver:
    """Fomin-Zelevinsky mutation at k, cancelling all 2-cycles afterwards."""
    if k not in Q.vertices:
        raise TwoCycleAtK(f"{k} is not a vertex")
    if Q.has_two_cycle_at(k):
        raise TwoCycleAtK(f"vertex {k} lies on a 2-cycle")
    counts = Q.counts
    new: Counter = Counter()
    into = [(i, m) for (i, j), m in counts.items() if j == k]
    out_of = [(j, m) for (i, j), m in counts.items() if i == k]
    for (i, j), m in counts.items():
        if i == k:
            new[(j, k)] += m
        elif j == k:
            new[(k, i)] += m
        else:
            new[(i, j)] += m
    for i, m1 in into:
        for j, m2 in out_of:
            new[(i, j)] += m1 * m2
    return Quiver.make(Q.vertices, new).reduced()


def qp_delete_vertex(qp: QuiverWithPotential, S: Iterable) -> QuiverWithPotential:
    """Remove vertices S, their arrows and every potential term through them."""
    S = set(S)
    keep = [a for a in qp.arrows if a.src not in S and a.dst not in S]
    kept_ids = {a.id for a in keep}
    pot = [(c, cyc) for c, cyc in qp.potential if all(x in kept_ids for x in cyc)]
    return make_qp([v for v in qp.vertices if v not in S], keep, pot)


@dataclass(frozen=True)
class GentleResult:
    gentle: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.gentle


def gentle_check(Q, relations) -> GentleResult:
    """Check the gentle conditions for monomial length-2 relations.

    ``Q`` is a QuiverWithPotential (or anything with ``arrows`` of Arrow);
    ``relations`` is an iterable of paths or of path->coefficient dicts.
    """
    arrows = {a.id: a for a in Q.arrows}
    rels = set()
    for r in relations:
        if isinstance(r, dict):
            if len(r) != 1:
                raise NonQuadraticRelations(f"relation {r} is not a monomial")
            (path, coeff), = r.items()
            if coeff == 0:
                continue
        else:
            path = tuple(r)
        if len(path) != 2:
            raise NonQuadraticRelations(f"relation {path} does not have length 2")
        a, b = path
        if arrows[a].dst != arrows[b].src:
            raise NonQuadraticRelations(f"relation {path} is not a path")
        rels.add((a, b))

    outdeg: Counter = Counter()
    indeg: Counter = Counter()
    for a in arrows.values():
        outdeg[a.src] += 1
        indeg[a.dst] += 1
    for v in Q.vertices:
        if outdeg[v] > 2:
            return GentleResult(False, f"vertex {v} has {outdeg[v]} outgoing arrows")
        if indeg[v] > 2:
            return GentleResult(False, f"vertex {v} has {indeg[v]} incoming arrows")
    for b in arrows.values():
        before = [a for a in arrows.values() if a.dst == b.src]
        related = [a.id for a in before if (a.id, b.id) in rels]
        free = [a.id for a in before if (a.id, b.id) not in rels]
        if len(related) > 1:
            return GentleResult(False, f"arrows {related} all compose to a relation with {b.id}")
        if len(free) > 1:
            return GentleResult(False, f"arrows {free} all compose freely with {b.id}")
        after = [c for c in arrows.values() if c.src == b.dst]
        related = [c.id for c in after if (b.id, c.id) in rels]
        free = [c.id for c in after if (b.id, c.id) not in rels]
        if len(related) > 1:
            return GentleResult(False, f"{b.id} composes to a relation with all of {related}")
        if len(free) > 1:
            return GentleResult(False, f"{b.id} composes freely with all of {free}")
    return GentleResult(True)


def flip_fz_consistent(cx: SurfaceComplex, edge: int) -> bool:
    """Does the flip at ``edge`` agree with FZ mutation (after cancelling 2-cycles)?"""
    from .surface import flip

    before = qp_from_triangulation(cx).quiver.reduced()
    after = qp_from_triangulation(flip(cx, edge)).quiver.reduced()
    return fz_mutate(before, cx.edge_id(edge)) == after
