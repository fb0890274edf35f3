import json
import random

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mskit import io
from mskit.charts import AnnulusChart, Bridging, DiskChart, Peripheral
from mskit.errors import UnsupportedSurface
from mskit.harness import RunReport, random_instance
from mskit.qp import Quiver, fz_mutate, gentle_check, qp_from_triangulation
from mskit.quiver import (
    check_theorem71,
    coloured_quiver,
    mutate,
    subquiver_after_cut,
)
from mskit.surface import cut, flip, isomorphic, reglue

from helpers import full_polygon, local_quiver, polygon_chords

SLOW = settings(max_examples=40, deadline=None)
FAST = settings(max_examples=200, deadline=None)
WINDOW = (-6, 6)

kinds = st.sampled_from(["disk", "annulus", "torus"])
seeds = st.integers(0, 2**32 - 1)


@st.composite
def disk_arcs(draw, min_n=4, max_n=12):
    N = draw(st.integers(min_n, max_n))
    arcs = DiskChart(N).all_arcs()
    return N, draw(st.sampled_from(arcs)), draw(st.sampled_from(arcs))


@st.composite
def annulus_arcs(draw):
    n0, n1 = draw(st.integers(1, 4)), draw(st.integers(1, 4))
    A = AnnulusChart(n0, n1)

    def arc():
        if draw(st.booleans()):
            return Bridging(draw(st.integers(0, n0 - 1)), draw(st.integers(0, n1 - 1)),
                            draw(st.integers(-3, 3)))
        b = draw(st.integers(0, 1))
        nb = A.n(b)
        p = draw(st.integers(0, nb - 1))
        span = draw(st.integers(2, nb)) if nb >= 2 else None
        assume(span is not None)
        return Peripheral(b, p, (p + span) % nb)

    return A, arc(), arc()


@st.composite
def polygon_partials(draw):
    N = draw(st.integers(4, 10))
    order = draw(st.permutations(DiskChart(N).all_arcs()))
    chosen = []
    for a in order:
        if all(DiskChart(N).crossing(a, b) == 0 for b in chosen):
            if draw(st.booleans()):
                chosen.append(a)
    assume(chosen)
    return N, [(a.i, a.j) for a in chosen]


# -- charts ------------------------------------------------------------------------

@FAST
@given(disk_arcs(), st.integers(-20, 20))
def test_disk_shift_properties(data, k):
    N, a, b = data
    ch = DiskChart(N)
    assert ch.shift(ch.shift(a, k), -k) == a
    assert ch.crossing(ch.shift(a, k), ch.shift(b, k)) == ch.crossing(a, b)
    assert ch.crossing(a, b) == ch.crossing(b, a)
    assert ch.crossing(a, a) == 0
    assert ch.shift(a, ch.periodicity(a)) == a
    assert all(ch.shift(a, m) != a for m in range(1, ch.periodicity(a)))


@FAST
@given(disk_arcs())
def test_disk_crossing_interval_rule(data):
    N, a, b = data
    inside = lambda x: 0 < (x - a.i) % N < (a.j - a.i) % N
    shared = {a.i, a.j} & {b.i, b.j}
    expected = int(not shared and inside(b.i) != inside(b.j))
    assert DiskChart(N).crossing(a, b) == expected


@FAST
@given(annulus_arcs(), st.integers(-12, 12))
def test_annulus_shift_properties(data, k):
    A, a, b = data
    assert A.shift(A.shift(a, k), -k) == a
    assert A.crossing(A.shift(a, k), A.shift(b, k)) == A.crossing(a, b)
    assert A.crossing(a, b) == A.crossing(b, a)
    assert A.crossing(a, a) == 0


@FAST
@given(annulus_arcs())
def test_annulus_periodicity(data):
    A, a, _ = data
    if isinstance(a, Peripheral):
        assert A.shift(a, A.periodicity(a)) == a
    else:
        turn = A.n0 * A.n1
        assert A.shift(a, turn) != a


@SLOW
@given(annulus_arcs())
def test_annulus_extension(data):
    A, a, b = data
    arcs = [a] if A.crossing(a, b) else [a, b]
    assume(a != b)
    full = A.extend_to_triangulation(arcs)
    assert set(arcs) <= set(full)
    assert len(full) == A.n0 + A.n1
    assert all(A.crossing(x, y) == 0 for x in full for y in full)


@FAST
@given(st.integers(4, 14), st.data())
def test_disk_extension(N, data):
    ch = DiskChart(N)
    seed = data.draw(st.sampled_from(ch.all_arcs()))
    full = ch.extend_to_triangulation([seed])
    assert seed in full and len(full) == N - 3
    assert all(ch.crossing(x, y) == 0 for x in full for y in full)


# -- surfaces ----------------------------------------------------------------------

@SLOW
@given(kinds, seeds)
def test_arc_count_formula(kind, seed):
    cx = random_instance(random.Random(seed), kind)
    for c in cx.validate():
        assert c.arcs == 6 * c.genus + 3 * c.boundaries + c.marked - 6


@SLOW
@given(kinds, seeds)
def test_cut_reglue_round_trip(kind, seed):
    rng = random.Random(seed)
    cx = random_instance(rng, kind)
    S = rng.sample(sorted(cx.interior_edges), rng.randint(0, len(cx.interior_edges)))
    # Without removal, triangle pieces survive and both copies stay available.
    pieces = cut(cx, S, remove_triangles=False)
    assert isomorphic(reglue(pieces, S), cx)
    removed = cut(cx, S)
    removed.validate()


@SLOW
@given(kinds, seeds)
def test_flip_properties(kind, seed):
    rng = random.Random(seed)
    cx = random_instance(rng, kind)
    e = rng.choice(cx.interior_edges)
    once = flip(cx, e)
    assert str(once.validate()) == str(cx.validate())
    assert once.R == cx.R
    assert isomorphic(flip(once, e), cx)


# -- quivers -------------------------------------------------------------------------

@SLOW
@given(polygon_partials())
def test_engine_matches_local_oracle(data):
    N, R = data
    cx = full_polygon(N, R)
    chords = polygon_chords(cx, N)
    Q = coloured_quiver(cx)
    d, arrows = local_quiver(N, R)
    assert {chords[v]: p for v, p in Q.d.items()} == d
    assert {(chords[i], chords[j], c): m for (i, j, c), m in Q.arrows} == +arrows


@SLOW
@given(kinds, seeds)
def test_theorem_on_random_instances(kind, seed):
    rng = random.Random(seed)
    cx = random_instance(rng, kind)
    k = rng.choice(sorted(cx.R))
    try:
        Q = coloured_quiver(cx, WINDOW)
        Qt = coloured_quiver(mutate(cx, k), WINDOW)
    except UnsupportedSurface:
        assume(False)
    assert check_theorem71(Q, Qt, k).ok


@SLOW
@given(kinds, seeds)
def test_cut_compatibility(kind, seed):
    rng = random.Random(seed)
    cx = random_instance(rng, kind)
    R = sorted(cx.R)
    S = rng.sample(R, rng.randint(0, len(R) - 1))
    try:
        left = coloured_quiver(cut(cx, S), WINDOW)
    except UnsupportedSurface:
        assume(False)
    assert left == subquiver_after_cut(coloured_quiver(cx, WINDOW), S)


@SLOW
@given(kinds, seeds)
def test_mutation_preserves_surface(kind, seed):
    rng = random.Random(seed)
    cx = random_instance(rng, kind)
    k = rng.choice(sorted(cx.R))
    out = mutate(cx, k)
    assert str(out.validate()) == str(cx.validate())
    assert out.R == cx.R


@SLOW
@given(kinds, seeds)
def test_quiver_json_round_trip(kind, seed):
    cx = random_instance(random.Random(seed), kind)
    Q = coloured_quiver(cx, WINDOW)
    assert io.quiver_from_json(json.loads(io.dumps(io.quiver_to_json(Q)))) == Q
    assert io.surface_from_json(json.loads(io.dumps(io.surface_to_json(cx)))) == cx
    qp = qp_from_triangulation(cx)
    assert io.qp_from_json(json.loads(io.dumps(io.qp_to_json(qp)))) == qp


# -- quivers with potential ----------------------------------------------------------------

@st.composite
def acyclic_at(draw):
    n = draw(st.integers(2, 6))
    verts = list(range(1, n + 1))
    edges = draw(st.lists(st.tuples(st.sampled_from(verts), st.sampled_from(verts)), max_size=12))
    edges = [(i, j) for i, j in edges if i != j]
    Q = Quiver.make(verts, edges).reduced()
    k = draw(st.sampled_from(verts))
    return Q, k


@FAST
@given(acyclic_at())
def test_fz_involution(data):
    Q, k = data
    assert fz_mutate(fz_mutate(Q, k), k) == Q


@SLOW
@given(kinds, seeds)
def test_surface_qps_are_gentle(kind, seed):
    cx = random_instance(random.Random(seed), kind)
    qp = qp_from_triangulation(cx)
    assert gentle_check(qp, qp.relations())


@FAST
@given(st.lists(st.booleans(), max_size=20))
def test_run_report_fail_tally(outcomes):
    rep = RunReport("r")
    for n, ok in enumerate(outcomes):
        rep.tally("x", ok)
        if ok:
            rep.passed += 1
        else:
            rep.fail({"n": n})
    assert (rep.failed == 0) == (rep.counterexample is None)
    merged = rep.merge(RunReport("r"))
    assert merged.failed == rep.failed and merged.tallies == rep.tallies
