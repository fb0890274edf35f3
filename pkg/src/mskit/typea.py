"""Combinatorial mutation of coloured quivers of polygon partial triangulations.

The rule works on a "working form" in which every pair of adjacent vertices
carries exactly two colours in each direction.  Arcs that are diameters of
their reduction polygon only produce one colour per neighbour, so step (ii)
doubles them first and step (vi) undoes the doubling at the end.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .charts import INF
from .errors import InconsistentQuiver, IsolatedVertex, NotTypeA
from .quiver import ColouredQuiver


@dataclass
class Working:
    """Mutable working form: periodicities and colour lists per ordered pair."""

    d: dict
    colours: dict = field(default_factory=dict)

    def copy(self) -> "Working":
        return Working(dict(self.d), {p: list(c) for p, c in self.colours.items()})

    def adjacent(self, i, j) -> bool:
        return bool(self.colours.get((i, j))) or bool(self.colours.get((j, i)))

    def neighbours(self, i) -> list:
        return sorted({b for (a, b), cs in self.colours.items() if a == i and cs}
                      | {a for (a, b), cs in self.colours.items() if b == i and cs})

    def pair(self, i, j) -> tuple:
        cs = sorted(self.colours.get((i, j), ()))
        if len(cs) != 2:
            raise NotTypeA(f"expected two colours on {i}->{j}, found {cs}")
        return cs[0], cs[1]

    def set_pair(self, i, j, cs) -> None:
        self.colours[(i, j)] = sorted(cs)

    def to_quiver(self) -> ColouredQuiver:
        arrows = Counter()
        for (i, j), cs in self.colours.items():
            for c in cs:
                arrows[(i, j, c % self.d[i])] += 1
        return ColouredQuiver.make(self.d, arrows)


def working_form(Q: ColouredQuiver) -> Working:
    if any(p == INF for p in Q.periods):
        raise NotTypeA("infinite periodicity cannot occur in a polygon")
    w = Working({v: int(p) for v, p in Q.d.items()})
    for (i, j, c), m in Q.arrows:
        if i == j:
            raise NotTypeA(f"loop at vertex {i}")
        w.colours.setdefault((i, j), []).extend([c] * m)
    for cs in w.colours.values():
        cs.sort()
    return w


def d_from_quiver(Q: ColouredQuiver, i) -> int:
    """Periodicity of vertex i read off the colours between i and any neighbour."""
    values = {}
    for j in sorted(Q.neighbours(i)):
        out = [c for (a, b, c), _m in Q.arrows if a == i and b == j]
        back = [c for (a, b, c), _m in Q.arrows if a == j and b == i]
        if not out or not back:
            raise InconsistentQuiver(f"arrows between {i} and {j} go only one way")
        values[j] = max(out) + min(back) + 1
    if not values:
        raise IsolatedVertex(f"vertex {i} has no neighbours")
    if len(set(values.values())) != 1:
        raise InconsistentQuiver(f"neighbours of {i} give different periodicities {values}")
    return next(iter(values.values()))


def step_i(Q: ColouredQuiver) -> Working:
    """Recompute d for every vertex with arrows; isolated vertices keep their stored d."""
    w = working_form(Q)
    for i in Q.vertices:
        if Q.neighbours(i):
            di = d_from_quiver(Q, i)
            if di != w.d[i]:
                raise InconsistentQuiver(f"vertex {i}: stored d={w.d[i]}, colours give {di}")
    return w


def step_ii(w: Working) -> tuple[Working, set]:
    """Give every single-colour direction a second colour c + d_i and double d_i."""
    w = w.copy()
    doubled = set()
    for (i, j), cs in sorted(w.colours.items()):
        if len(cs) == 1:
            cs.append(cs[0] + w.d[i])
            doubled.add(i)
    for i in doubled:
        w.d[i] *= 2
    for (i, j), cs in w.colours.items():
        if len(cs) != 2:
            raise NotTypeA(f"{i}->{j} carries {len(cs)} colours after doubling")
    return w, doubled


def _zero_from_k(w: Working, k) -> list:
    return [i for i in w.neighbours(k) if w.pair(k, i)[0] == 0]


def step_iii(w: Working, k) -> Working:
    """Complete i <- k -> j when k -> i starts at colour 0 and k -> j does not."""
    out = w.copy()
    zero = _zero_from_k(w, k)
    for i in zero:
        a, a2 = w.pair(i, k)
        for j in w.neighbours(k):
            if j == i:
                continue
            d, _d2 = w.pair(k, j)
            if d == 0:
                continue
            c, c2 = w.pair(j, k)
            _add_and_cancel(out, i, j, [d, d + a2 - a])
            _add_and_cancel(out, j, i, [c, c2])
    return out


def _add_and_cancel(w: Working, i, j, new) -> None:
    old = list(w.colours.get((i, j), []))
    fresh = list(new)
    for x in list(old):
        for y in list(fresh):
            if abs(x - y) == 1:
                old.remove(x)
                fresh.remove(y)
                break
    w.colours[(i, j)] = sorted(old + fresh)


def step_iv(w: Working, k, before: Working) -> Working:
    """Rewrite i -> j for j adjacent to i but not to k, when k -> i starts at 0."""
    out = w.copy()
    for i in _zero_from_k(before, k):
        _b, b2 = before.pair(k, i)
        for j in before.neighbours(i):
            if j == k or before.adjacent(j, k):
                continue
            d, _d2 = before.pair(i, j)
            out.set_pair(i, j, [d, d + b2])
    return out


def step_v(w: Working, k, before: Working) -> Working:
    """Rotate the colours on every arrow at k."""
    out = w.copy()
    for i in before.neighbours(k):
        a, a2 = before.pair(i, k)
        b, b2 = before.pair(k, i)
        if b != 0:
            out.set_pair(i, k, [a + 1, a2 + 1])
            out.set_pair(k, i, [b - 1, b2 - 1])
        else:
            out.set_pair(i, k, [0, a2 - a])
            out.set_pair(k, i, [b2 - 1, a + b2])
            out.d[i] = b2 + a2 - a
    return out


def step_vi(w: Working) -> Working:
    """Undo the doubling: drop colour c + d_i/2 wherever it pairs with c."""
    out = w.copy()
    for (i, j), cs in out.colours.items():
        out.colours[(i, j)] = sorted(c % out.d[i] for c in cs)
    halve = set()
    for (i, j), cs in out.colours.items():
        if len(cs) == 2 and out.d[i] % 2 == 0 and cs[1] - cs[0] == out.d[i] // 2:
            halve.add(i)
    for i in halve:
        for j in out.neighbours(i):
            cs = out.colours.get((i, j))
            if not cs:
                continue
            if len(cs) != 2 or cs[1] - cs[0] != out.d[i] // 2:
                raise NotTypeA(f"vertex {i} pairs with {j} by {cs}, not a diameter pattern")
            out.colours[(i, j)] = [cs[0]]
        out.d[i] //= 2
    return out


def typea_steps(Q: ColouredQuiver, k) -> list:
    """The working quiver after each of the six steps, for inspection."""
    if k not in Q.d:
        raise NotTypeA(f"{k} is not a vertex")
    w1 = step_i(Q)
    w2, _ = step_ii(w1)
    w3 = step_iii(w2, k)
    w4 = step_iv(w3, k, w2)
    w5 = step_v(w4, k, w2)
    w6 = step_vi(w5)
    return [w1, w2, w3, w4, w5, w6]


def typea_mutate(Q: ColouredQuiver, k) -> ColouredQuiver:
    return typea_steps(Q, k)[-1].to_quiver()


# -- exhaustive comparison with the geometric engine -------------------------

def polygon_partial_triangulations(N: int) -> Iterable[tuple]:
    """Every nonempty set of pairwise noncrossing chords of the N-gon."""
    chords = [(i, j) for i in range(N) for j in range(i + 2, N) if j - i != N - 1]

    def crosses(a, b):
        (x, y), (u, v) = a, b
        if len({x, y, u, v}) < 4:
            return False
        return (x < u < y) != (x < v < y)

    def extend(start, current):
        for idx in range(start, len(chords)):
            c = chords[idx]
            if all(not crosses(c, e) for e in current):
                nxt = current + (c,)
                yield nxt
                yield from extend(idx + 1, nxt)

    yield from extend(0, ())


@dataclass
class CrossCheckReport:
    N: int
    instances: int = 0
    mutations: int = 0
    failures: int = 0
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def __str__(self) -> str:
        s = (f"N={self.N}: {self.instances} partial triangulations, "
             f"{self.mutations} mutations, {self.failures} mismatches")
        if self.counterexample:
            s += f"\nfirst mismatch: {self.counterexample}"
        return s


def cross_check(N: int, stop_at_first: bool = False) -> CrossCheckReport:
    """Compare the combinatorial rule with geometric mutation on every instance."""
    from .catalog import polygon_complex
    from .charts import DiskChart, DiskArc
    from .quiver import coloured_quiver, mutate

    rep = CrossCheckReport(N)
    chart = DiskChart(N)
    for R in polygon_partial_triangulations(N):
        full = chart.extend_to_triangulation([DiskArc(*c) for c in R])
        cx = polygon_complex(N, [(a.i, a.j) for a in full], R)
        Q = coloured_quiver(cx)
        rep.instances += 1
        for k in sorted(cx.R):
            rep.mutations += 1
            expected = coloured_quiver(mutate(cx, k))
            try:
                got = typea_mutate(Q, k)
                good = got == expected
            except (NotTypeA, InconsistentQuiver) as exc:
                got, good = repr(exc), False
            if not good:
                rep.failures += 1
                if rep.counterexample is None:
                    rep.counterexample = {
                        "N": N,
                        "R": [list(c) for c in R],
                        "k": k,
                        "quiver": str(Q),
                        "expected": str(expected),
                        "got": str(got),
                    }
                if stop_at_first:
                    return rep
    return rep
