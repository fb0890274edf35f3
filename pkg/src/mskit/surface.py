"""Unpunctured marked surfaces as oriented glued-triangle complexes.

Each triangle lists its side ids in clockwise order; side ``k`` runs from
corner ``k`` to corner ``k + 1``.  A gluing pairs two side ids and always
reverses direction, so orientability is built in.  Unpaired sides are boundary
segments and inherit the clockwise boundary orientation.  Marked points are
never stored: they are the vertex classes of corners under the gluing.

An interior edge is named by the smaller of its two side ids.  When an edge is
cut, the side carrying that id becomes ``ArcCopy(edge, "left")`` and the other
becomes ``ArcCopy(edge, "right")``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Union

from .errors import (
    ArcCountMismatch,
    ForbiddenComponent,
    MalformedGluing,
    MissingCopy,
    PuncturedVertex,
    UnknownEdge,
)

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class OriginalBoundary:
    segment: int


@dataclass(frozen=True)
class ArcCopy:
    arc: int
    tag: str
    in_r: bool = False


Provenance = Union[OriginalBoundary, ArcCopy]


def copies_arc(prov: Provenance, arc: int) -> bool:
    return isinstance(prov, ArcCopy) and prov.arc == arc


@dataclass(frozen=True)
class Triangle:
    id: int
    sides: tuple[int, int, int]


@dataclass(frozen=True)
class Removal:
    """Audit record for a triangle component dropped by :func:`cut`."""

    triangle: Triangle
    lost: tuple[Provenance, ...]


@dataclass(frozen=True)
class ComponentClass:
    genus: int
    boundaries: int
    points: tuple[int, ...]
    marked: int
    euler: int
    arcs: int

    @property
    def is_disk(self) -> bool:
        return self.genus == 0 and self.boundaries == 1

    @property
    def is_annulus(self) -> bool:
        return self.genus == 0 and self.boundaries == 2

    def __str__(self) -> str:
        return f"g={self.genus} b={self.boundaries} c={self.marked} n={self.arcs}"


@dataclass(frozen=True)
class Classification:
    components: tuple[ComponentClass, ...]

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> ComponentClass:
        return self.components[i]

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.components)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class _Topology:
    """Derived incidence data; raises MalformedGluing on inconsistent input."""

    def __init__(self, cx: "SurfaceComplex"):
        self.loc: dict[int, tuple[int, int]] = {}
        for t, tri in enumerate(cx.triangles):
            if len(tri.sides) != 3:
                raise MalformedGluing(f"triangle {tri.id} does not have three sides")
            for k, s in enumerate(tri.sides):
                if s in self.loc:
                    raise MalformedGluing(f"side {s} occurs twice")
                self.loc[s] = (t, k)
        self.partner: dict[int, int] = {}
        for a, b in cx.pairs:
            if a == b:
                raise MalformedGluing(f"side {a} glued to itself")
            for s in (a, b):
                if s not in self.loc:
                    raise MalformedGluing(f"gluing names unknown side {s}")
                if s in self.partner:
                    raise MalformedGluing(f"side {s} glued twice")
            self.partner[a] = b
            self.partner[b] = a
        tris = cx.triangles
        self.sides_of = [tri.sides for tri in tris]
        uf = _UnionFind(3 * len(tris))
        for a, b in cx.pairs:
            ta, ka = self.loc[a]
            tb, kb = self.loc[b]
            uf.union(3 * ta + ka, 3 * tb + (kb + 1) % 3)
            uf.union(3 * ta + (ka + 1) % 3, 3 * tb + kb)
        self.corner_class = [uf.find(c) for c in range(3 * len(tris))]
        comp = _UnionFind(len(tris))
        for a, b in cx.pairs:
            comp.union(self.loc[a][0], self.loc[b][0])
        self.component = [comp.find(t) for t in range(len(tris))]

    def start(self, s: int) -> int:
        t, k = self.loc[s]
        return self.corner_class[3 * t + k]

    def end(self, s: int) -> int:
        t, k = self.loc[s]
        return self.corner_class[3 * t + (k + 1) % 3]

    def next_in_triangle(self, s: int) -> int:
        t, k = self.loc[s]
        return self.sides_of[t][(k + 1) % 3]

    def fan(self, s: int) -> tuple[int, int]:
        """Walk round the end vertex of boundary side ``s``.

        Returns the next boundary side and the number of corners passed.
        """
        x = self.next_in_triangle(s)
        corners = 1
        limit = len(self.loc)
        while x in self.partner:
            x = self.next_in_triangle(self.partner[x])
            corners += 1
            if corners > limit:
                raise MalformedGluing("boundary walk does not terminate")
        return x, corners


@dataclass(frozen=True, eq=False)
class SurfaceComplex:
    triangles: tuple[Triangle, ...]
    pairs: tuple[tuple[int, int], ...]
    R: frozenset = frozenset()
    boundary_provenance: tuple[tuple[int, Provenance], ...] = ()
    removed: tuple[Removal, ...] = ()

    @classmethod
    def build(
        cls,
        triangles: Iterable,
        gluing: Iterable[Iterable[int]],
        R: Iterable[int] = (),
        provenance: Mapping[int, Provenance] | None = None,
        removed: Iterable[Removal] = (),
    ) -> "SurfaceComplex":
        tris = []
        for t in triangles:
            if isinstance(t, Triangle):
                tris.append(Triangle(t.id, tuple(t.sides)))
            else:
                tid, sides = t
                tris.append(Triangle(int(tid), tuple(int(s) for s in sides)))
        pairs = []
        for p in gluing:
            a, b = (int(x) for x in p)
            pairs.append((min(a, b), max(a, b)))
        partner = {}
        for a, b in pairs:
            partner.setdefault(a, b)
            partner.setdefault(b, a)
        canon_r = frozenset(min(int(r), partner.get(int(r), int(r))) for r in R)
        prov = tuple(sorted((provenance or {}).items(), key=lambda kv: kv[0]))
        return cls(tuple(tris), tuple(sorted(pairs)), canon_r, prov, tuple(removed))

    # -- equality -------------------------------------------------------

    def _key(self):
        return (
            tuple(sorted((t.id, t.sides) for t in self.triangles)),
            self.pairs,
            tuple(sorted(self.R)),
            tuple(sorted((s, repr(p)) for s, p in self.boundary_provenance)),
        )

    def __eq__(self, other):
        if not isinstance(other, SurfaceComplex):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # -- incidence ------------------------------------------------------

    @cached_property
    def topology(self) -> _Topology:
        return _Topology(self)

    @cached_property
    def _prov(self) -> dict[int, Provenance]:
        return dict(self.boundary_provenance)

    def partner(self, side: int) -> int | None:
        return self.topology.partner.get(side)

    def is_boundary(self, side: int) -> bool:
        return side in self.topology.loc and side not in self.topology.partner

    @cached_property
    def interior_edges(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def fillers(self) -> tuple[int, ...]:
        return tuple(e for e in self.interior_edges if e not in self.R)

    @cached_property
    def boundary_sides(self) -> tuple[int, ...]:
        topo = self.topology
        return tuple(sorted(s for s in topo.loc if s not in topo.partner))

    def edge_id(self, side: int) -> int:
        p = self.partner(side)
        if p is None:
            raise UnknownEdge(f"{side} is not an interior edge")
        return min(side, p)

    def edge_sides(self, edge: int) -> tuple[int, int]:
        p = self.partner(edge)
        if p is None:
            raise UnknownEdge(f"{edge} is not an interior edge")
        return (min(edge, p), max(edge, p))

    def provenance(self, side: int) -> Provenance:
        return self._prov.get(side, OriginalBoundary(side))

    def triangle_of(self, side: int) -> Triangle:
        return self.triangles[self.topology.loc[side][0]]

    def next_boundary(self, side: int) -> int:
        return self.topology.fan(side)[0]

    def vertex_start(self, side: int) -> int:
        return self.topology.start(side)

    def vertex_end(self, side: int) -> int:
        return self.topology.end(side)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Triangle indices per connected component, ordered by first index."""
        groups: dict[int, list[int]] = {}
        for t, root in enumerate(self.topology.component):
            groups.setdefault(root, []).append(t)
        return tuple(tuple(g) for g in sorted(groups.values()))

    def component_of_side(self, side: int) -> tuple[int, ...]:
        root = self.topology.component[self.topology.loc[side][0]]
        for comp in self.components:
            if self.topology.component[comp[0]] == root:
                return comp
        raise UnknownEdge(side)

    def boundary_cycles(self, component: Iterable[int] | None = None) -> list[tuple[int, ...]]:
        """Boundary cycles as side sequences in clockwise order.

        Each cycle starts at its smallest side id; cycles are sorted by it.
        """
        if component is None:
            sides = self.boundary_sides
        else:
            sides = sorted(
                s for t in component for s in self.triangles[t].sides if self.is_boundary(s)
            )
        seen: set[int] = set()
        cycles = []
        for s0 in sides:
            if s0 in seen:
                continue
            cyc = [s0]
            seen.add(s0)
            s = self.next_boundary(s0)
            while s != s0:
                if s in seen:
                    raise MalformedGluing("boundary walk revisits a side")
                cyc.append(s)
                seen.add(s)
                s = self.next_boundary(s)
            cycles.append(tuple(cyc))
        return cycles

    def subcomplex(self, component: Iterable[int]) -> "SurfaceComplex":
        idx = set(component)
        tris = [self.triangles[t] for t in sorted(idx)]
        sides = {s for t in tris for s in t.sides}
        pairs = [p for p in self.pairs if p[0] in sides]
        prov = {s: p for s, p in self.boundary_provenance if s in sides}
        return SurfaceComplex.build(tris, pairs, [r for r in self.R if r in sides], prov)

    # -- validation -----------------------------------------------------

    def validate(self) -> Classification:
        if not self.triangles:
            # Cutting may remove every triangle; a blank input is an error.
            if self.removed:
                return Classification(())
            raise MalformedGluing("empty complex")
        topo = self.topology
        for r in self.R:
            if r not in topo.partner:
                raise MalformedGluing(f"R names {r}, which is not an interior edge")
        seen_copies = set()
        for s, p in self.boundary_provenance:
            if s not in topo.loc or s in topo.partner:
                raise MalformedGluing(f"provenance given for non-boundary side {s}")
            if isinstance(p, ArcCopy):
                if p.tag not in (LEFT, RIGHT):
                    raise MalformedGluing(f"bad arc copy tag {p.tag!r}")
                if (p.arc, p.tag) in seen_copies:
                    raise MalformedGluing(f"arc {p.arc} copied twice on side {p.tag}")
                seen_copies.add((p.arc, p.tag))

        class_size: dict[int, int] = {}
        for c in topo.corner_class:
            class_size[c] = class_size.get(c, 0) + 1
        out_boundary: dict[int, list[int]] = {c: [] for c in class_size}
        for s in self.boundary_sides:
            out_boundary[topo.start(s)].append(s)
        for v, outs in out_boundary.items():
            if not outs:
                raise PuncturedVertex(f"vertex class {v} touches no boundary edge")
            if len(outs) > 1:
                raise MalformedGluing(f"vertex class {v} is not a manifold point")
        for s in self.boundary_sides:
            _, corners = topo.fan(s)
            if corners != class_size[topo.end(s)]:
                raise MalformedGluing(f"vertex at end of side {s} is pinched")

        result = []
        for comp in self.components:
            cls = self._classify(comp)
            if cls.genus == 0 and cls.boundaries == 1 and cls.marked <= 3:
                raise ForbiddenComponent(
                    f"component with triangles {[self.triangles[t].id for t in comp]}"
                    f" is a {('monogon', 'digon', 'triangle')[cls.marked - 1]}"
                )
            expected = 6 * cls.genus + 3 * cls.boundaries + cls.marked - 6
            if cls.arcs != expected:
                raise ArcCountMismatch(f"{cls.arcs} interior edges, expected {expected}")
            result.append(cls)
        return Classification(tuple(result))

    def _classify(self, comp: tuple[int, ...]) -> ComponentClass:
        topo = self.topology
        verts = {topo.corner_class[3 * t + k] for t in comp for k in range(3)}
        sides = [s for t in comp for s in self.triangles[t].sides]
        n_boundary = sum(1 for s in sides if s not in topo.partner)
        n_interior = (len(sides) - n_boundary) // 2
        V, E, F = len(verts), n_interior + n_boundary, len(comp)
        chi = V - E + F
        cycles = self.boundary_cycles(comp)
        b = len(cycles)
        twice_g = 2 - chi - b
        if twice_g < 0 or twice_g % 2:
            raise MalformedGluing(f"component has chi={chi}, b={b}: not a surface")
        return ComponentClass(
            genus=twice_g // 2,
            boundaries=b,
            points=tuple(len(c) for c in cycles),
            marked=V,
            euler=chi,
            arcs=n_interior,
        )

    def classify(self, component: Iterable[int]) -> ComponentClass:
        return self._classify(tuple(component))

    # -- operations (thin wrappers) ------------------------------------

    def cut(self, arcs: Iterable[int], remove_triangles: bool = True) -> "SurfaceComplex":
        return cut(self, arcs, remove_triangles)

    def reglue(self, arcs: Iterable[int]) -> "SurfaceComplex":
        return reglue(self, arcs)

    def flip(self, edge: int) -> "SurfaceComplex":
        return flip(self, edge)

    def with_R(self, R: Iterable[int]) -> "SurfaceComplex":
        return SurfaceComplex.build(
            self.triangles, self.pairs, R, self._prov, self.removed
        )

    @property
    def max_id(self) -> int:
        ids = [s for t in self.triangles for s in t.sides] + [t.id for t in self.triangles]
        return max(ids, default=0)


def cut(cx: SurfaceComplex, arcs: Iterable[int], remove_triangles: bool = True) -> SurfaceComplex:
    """Cut along interior edges; drop any all-boundary triangle component.

    Dropped triangles are recorded in ``removed`` together with the arc copies
    they carried, so callers can tell when only one copy of an arc survives.
    """
    edges = sorted({cx.edge_id(a) for a in arcs})
    if not edges:
        return cx
    cut_set = set(edges)
    pairs = [p for p in cx.pairs if p[0] not in cut_set]
    prov = dict(cx._prov)
    for e in edges:
        a, b = cx.edge_sides(e)
        in_r = e in cx.R
        prov[a] = ArcCopy(e, LEFT, in_r)
        prov[b] = ArcCopy(e, RIGHT, in_r)
    result = SurfaceComplex.build(cx.triangles, pairs, cx.R - cut_set, prov, cx.removed)
    if not remove_triangles:
        return result
    drop = []
    for comp in result.components:
        if len(comp) == 1:
            tri = result.triangles[comp[0]]
            if all(result.is_boundary(s) for s in tri.sides):
                drop.append(tri)
    if not drop:
        return result
    dropped_sides = {s for t in drop for s in t.sides}
    removals = list(cx.removed)
    for tri in drop:
        lost = tuple(prov[s] for s in tri.sides if isinstance(prov.get(s), ArcCopy))
        removals.append(Removal(tri, lost))
    kept = [t for t in result.triangles if t not in drop]
    prov = {s: p for s, p in prov.items() if s not in dropped_sides}
    return SurfaceComplex.build(kept, pairs, result.R, prov, removals)


def reglue(cx: SurfaceComplex, arcs: Iterable[int]) -> SurfaceComplex:
    """Re-pair the two copies of each named arc (inverse of :func:`cut`)."""
    arcs = sorted(set(arcs))
    if not arcs:
        return cx
    copies: dict[tuple[int, str], int] = {}
    for s, p in cx.boundary_provenance:
        if isinstance(p, ArcCopy):
            copies[(p.arc, p.tag)] = s
    prov = dict(cx._prov)
    pairs = list(cx.pairs)
    R = set(cx.R)
    for a in arcs:
        left, right = copies.get((a, LEFT)), copies.get((a, RIGHT))
        if left is None or right is None:
            raise MissingCopy(f"arc {a} has only {int(left is not None) + int(right is not None)} copies")
        pairs.append((left, right))
        if prov[left].in_r:
            R.add(min(left, right))
        del prov[left], prov[right]
    return SurfaceComplex.build(cx.triangles, pairs, R, prov, cx.removed)


def flip(cx: SurfaceComplex, edge: int) -> SurfaceComplex:
    """Replace ``edge`` by the other diagonal of its quadrilateral.

    Side and triangle ids are kept, so R membership carries over.
    """
    s, s2 = cx.edge_sides(edge)
    topo = cx.topology
    t1, k1 = topo.loc[s]
    t2, k2 = topo.loc[s2]
    if t1 == t2:
        raise MalformedGluing(f"edge {edge} has the same triangle on both sides")
    sides1 = cx.triangles[t1].sides
    sides2 = cx.triangles[t2].sides
    a, b = sides1[(k1 + 1) % 3], sides1[(k1 + 2) % 3]
    c, d = sides2[(k2 + 1) % 3], sides2[(k2 + 2) % 3]
    tris = list(cx.triangles)
    tris[t1] = Triangle(cx.triangles[t1].id, (b, c, s))
    tris[t2] = Triangle(cx.triangles[t2].id, (d, a, s2))
    return SurfaceComplex.build(tris, cx.pairs, cx.R, cx._prov, cx.removed)


def canonical_form(cx: SurfaceComplex):
    """An id-free encoding; equal iff the complexes are combinatorially isomorphic."""
    topo = cx.topology
    forms = []
    for comp in cx.components:
        best = None
        for t0 in comp:
            for rot in range(3):
                enc = _encode_from(cx, topo, t0, rot)
                if best is None or enc < best:
                    best = enc
        forms.append(best)
    return tuple(sorted(forms))


def _encode_from(cx, topo, t0, rot):
    order = {t0: (0, rot)}
    queue = deque([t0])
    seq = []
    while queue:
        t = queue.popleft()
        seq.append(t)
        _, r = order[t]
        sides = cx.triangles[t].sides
        for j in range(3):
            s = sides[(r + j) % 3]
            p = topo.partner.get(s)
            if p is not None:
                tp, kp = topo.loc[p]
                if tp not in order:
                    order[tp] = (len(order), kp)
                    queue.append(tp)
    arc_names: dict[int, int] = {}
    out = []
    for t in seq:
        _, r = order[t]
        sides = cx.triangles[t].sides
        row = []
        for j in range(3):
            s = sides[(r + j) % 3]
            p = topo.partner.get(s)
            if p is not None:
                tp, kp = topo.loc[p]
                pos = (kp - order[tp][1]) % 3
                row.append((0, order[tp][0], pos, int(cx.edge_id(s) in cx.R)))
            else:
                prov = cx.provenance(s)
                if isinstance(prov, ArcCopy):
                    name = arc_names.setdefault(prov.arc, len(arc_names))
                    row.append((1, name, prov.tag == LEFT, int(prov.in_r)))
                else:
                    row.append((2, 0, 0, 0))
        out.append(tuple(row))
    return tuple(out)


def isomorphic(a: SurfaceComplex, b: SurfaceComplex) -> bool:
    return canonical_form(a) == canonical_form(b)
