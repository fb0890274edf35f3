"""Seeded random instances and batch checks of the engine's identities."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .catalog import annulus_complex, polygon_complex, torus_complex
from .charts import DiskChart
from .errors import UnsupportedSurface
from .quiver import (
    check_theorem71,
    coloured_quiver,
    mutate,
    subquiver_after_cut,
    twist,
)
from .qp import flip_fz_consistent, fz_mutate, gentle_check, qp_from_triangulation
from .surface import SurfaceComplex, flip, isomorphic

DEFAULT_WINDOW = (-6, 6)


@dataclass
class RunReport:
    name: str
    instances: int = 0
    passed: int = 0
    failed: int = 0
    tallies: dict = field(default_factory=dict)
    counterexample: dict | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def tally(self, key: str, ok: bool) -> None:
        good, bad = self.tallies.get(key, (0, 0))
        self.tallies[key] = (good + ok, bad + (not ok))

    def fail(self, payload: dict) -> None:
        self.failed += 1
        if self.counterexample is None:
            self.counterexample = payload

    def merge(self, other: "RunReport") -> "RunReport":
        out = RunReport(self.name, self.instances + other.instances,
                        self.passed + other.passed, self.failed + other.failed)
        for src in (self.tallies, other.tallies):
            for key, (g, b) in src.items():
                og, ob = out.tallies.get(key, (0, 0))
                out.tallies[key] = (og + g, ob + b)
        out.counterexample = self.counterexample or other.counterexample
        out.seconds = self.seconds + other.seconds
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "tallies": {k: list(v) for k, v in self.tallies.items()},
            "counterexample": self.counterexample,
            "seconds": round(self.seconds, 3),
        }

    def __str__(self) -> str:
        return json.dumps(self.to_json(), indent=2, default=str)


# -- random instances ---------------------------------------------------------

def random_flips(cx: SurfaceComplex, rng: random.Random, count: int) -> SurfaceComplex:
    for _ in range(count):
        edges = cx.interior_edges
        if not edges:
            break
        cx = flip(cx, rng.choice(edges))
    return cx


def random_disk(rng: random.Random, N: int | None = None) -> SurfaceComplex:
    """A random full triangulation of an N-gon with a random nonempty R."""
    N = N or rng.randint(4, 10)
    order = DiskChart(N).all_arcs()
    rng.shuffle(order)
    full = DiskChart(N).extend_to_triangulation(order[:1])
    cx = polygon_complex(N, [(a.i, a.j) for a in full])
    cx = random_flips(cx, rng, 2 * N)
    return _random_R(cx, rng)


def random_annulus(rng: random.Random, n0: int | None = None, n1: int | None = None) -> SurfaceComplex:
    n0 = n0 or rng.randint(1, 4)
    n1 = n1 or rng.randint(1, 4)
    cx = annulus_complex(n0, n1)
    cx = random_flips(cx, rng, 3 * (n0 + n1))
    return _random_R(cx, rng)


def random_torus(rng: random.Random) -> SurfaceComplex:
    """A flipped two-point torus whose R admits a chart for every reduction."""
    base = random_flips(torus_complex(), rng, rng.randint(0, 12))
    edges = list(base.interior_edges)
    while True:
        size = rng.randint(2, len(edges))
        cx = base.with_R(rng.sample(edges, size))
        if supported(cx):
            return cx


def _random_R(cx: SurfaceComplex, rng: random.Random) -> SurfaceComplex:
    edges = list(cx.interior_edges)
    size = rng.randint(1, len(edges))
    return cx.with_R(rng.sample(edges, size))


def supported(cx: SurfaceComplex) -> bool:
    try:
        coloured_quiver(cx, DEFAULT_WINDOW)
    except UnsupportedSurface:
        return False
    return True


def random_instance(rng: random.Random, kind: str | None = None) -> SurfaceComplex:
    kind = kind or rng.choice(["disk", "annulus", "torus"])
    if kind == "disk":
        return random_disk(rng)
    if kind == "annulus":
        return random_annulus(rng)
    return random_torus(rng)


KINDS = ("disk", "annulus", "torus")


def describe(cx: SurfaceComplex) -> dict:
    from .io import surface_to_json

    return surface_to_json(cx)


# -- batch checks -------------------------------------------------------------

def check_theorem_batch(seed: int, count: int, window=(-8, 8)) -> RunReport:
    rng = random.Random(seed)
    rep = RunReport("theorem71")
    start = time.perf_counter()
    for n in range(count):
        while True:
            cx = random_instance(rng, KINDS[n % 3])
            k = rng.choice(sorted(cx.R))
            try:
                Q = coloured_quiver(cx, window)
                Qt = coloured_quiver(mutate(cx, k), window)
                break
            except UnsupportedSurface:
                rep.tally("redrawn-unsupported", True)
        result = check_theorem71(Q, Qt, k)
        rep.instances += 1
        rep.tally(KINDS[n % 3], result.ok)
        if result.ok:
            rep.passed += 1
        else:
            rep.fail({"surface": describe(cx), "k": k, "failures": result.failures[:5]})
    rep.seconds = time.perf_counter() - start
    return rep


def check_cut_batch(seed: int, count: int, window=(-8, 8)) -> RunReport:
    rng = random.Random(seed)
    rep = RunReport("cut-subquiver")
    start = time.perf_counter()
    for n in range(count):
        cx = random_instance(rng, KINDS[n % 3])
        R = sorted(cx.R)
        S = rng.sample(R, rng.randint(0, len(R) - 1)) if len(R) > 1 else []
        rep.instances += 1
        try:
            left = coloured_quiver(cx.cut(S), window)
        except UnsupportedSurface:
            rep.tally("unsupported", True)
            rep.passed += 1
            continue
        right = subquiver_after_cut(coloured_quiver(cx, window), S)
        ok = left == right
        rep.tally(KINDS[n % 3], ok)
        if ok:
            rep.passed += 1
        else:
            rep.fail({"surface": describe(cx), "cut": S})
    rep.seconds = time.perf_counter() - start
    return rep


def check_order_batch(seed: int, count: int) -> RunReport:
    """Mutating d_k times at k restores the quiver (finite d_k only)."""
    rng = random.Random(seed)
    rep = RunReport("mutation-order")
    start = time.perf_counter()
    n = 0
    while rep.instances < count:
        cx = random_instance(rng, KINDS[n % 3])
        n += 1
        Q = coloured_quiver(cx, DEFAULT_WINDOW)
        finite = [k for k in sorted(cx.R) if Q.d[k] != float("inf")]
        if not finite:
            rep.tally("redrawn-infinite", True)
            continue
        k = rng.choice(finite)
        cur = cx
        for _ in range(int(Q.d[k])):
            cur = mutate(cur, k)
        try:
            ok = coloured_quiver(cur, DEFAULT_WINDOW) == Q
        except UnsupportedSurface:
            ok = False
        rep.instances += 1
        rep.tally("order", ok)
        if ok:
            rep.passed += 1
        else:
            rep.fail({"surface": describe(cx), "k": k})
    rep.seconds = time.perf_counter() - start
    return rep


def check_twist_batch(seed: int, count: int) -> RunReport:
    rng = random.Random(seed)
    rep = RunReport("twist-inverse")
    start = time.perf_counter()
    for n in range(count):
        cx = random_instance(rng, KINDS[n % 3])
        k = rng.choice(sorted(cx.R))
        from .quiver import reduction_chart

        red = reduction_chart(cx, k)
        forward = twist(cx, k, 1)
        ok = red.chart.shift(forward, -1) == red.arc and red.chart.shift(
            twist(cx, k, -1), 1) == red.arc
        rep.instances += 1
        rep.tally("twist", ok)
        if ok:
            rep.passed += 1
        else:
            rep.fail({"surface": describe(cx), "k": k})
    rep.seconds = time.perf_counter() - start
    return rep


def check_flip_batch(seed: int, count: int) -> RunReport:
    rng = random.Random(seed)
    rep = RunReport("flip-involution")
    start = time.perf_counter()
    for n in range(count):
        cx = random_instance(rng, KINDS[n % 3])
        e = rng.choice(cx.interior_edges)
        twice = flip(flip(cx, e), e)
        ok = isomorphic(twice, cx) and twice.validate() == cx.validate()
        rep.instances += 1
        rep.tally("flip", ok)
        if ok:
            rep.passed += 1
        else:
            rep.fail({"surface": describe(cx), "edge": e})
    rep.seconds = time.perf_counter() - start
    return rep


def check_flip_fz_batch(seed: int, count: int) -> RunReport:
    """Flip versus FZ mutation, FZ involutivity and gentleness on random triangulations."""
    rng = random.Random(seed)
    rep = RunReport("flip-fz")
    start = time.perf_counter()
    for n in range(count):
        cx = random_instance(rng, KINDS[n % 3])
        e = rng.choice(cx.interior_edges)
        qp = qp_from_triangulation(cx)
        reduced = qp.quiver.reduced()
        checks = {
            "flip-fz": flip_fz_consistent(cx, e),
            "involution": fz_mutate(fz_mutate(reduced, e), e) == reduced,
            "gentle": gentle_check(qp, qp.relations()).gentle,
        }
        rep.instances += 1
        for key, ok in checks.items():
            rep.tally(key, ok)
        if all(checks.values()):
            rep.passed += 1
        else:
            rep.fail({"surface": describe(cx), "edge": e,
                      "failed": [k for k, ok in checks.items() if not ok]})
    rep.seconds = time.perf_counter() - start
    return rep
