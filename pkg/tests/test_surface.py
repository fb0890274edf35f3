import pytest

from mskit.catalog import annulus_complex, polygon_complex, torus_complex
from mskit.errors import (
    ArcCountMismatch,
    ForbiddenComponent,
    MalformedGluing,
    MissingCopy,
    PuncturedVertex,
    UnknownEdge,
)
from mskit.surface import (
    ArcCopy,
    OriginalBoundary,
    SurfaceComplex,
    Triangle,
    canonical_form,
    cut,
    flip,
    isomorphic,
    reglue,
)

from helpers import polygon_chords


def pentagon(R=((0, 2), (0, 3))):
    return polygon_complex(5, [(0, 2), (0, 3)], R)


def square():
    return polygon_complex(4, [(0, 2)])


# -- validate ---------------------------------------------------------------

def test_torus_classification():
    cls = torus_complex().validate()
    assert len(cls) == 1
    c = cls[0]
    assert (c.genus, c.boundaries, c.marked, c.arcs) == (1, 1, 2, 5)
    assert c.points == (2,)
    assert str(cls) == "g=1 b=1 c=2 n=5"


def test_square_classification():
    c = square().validate()[0]
    assert (c.genus, c.boundaries, c.marked, c.arcs) == (0, 1, 4, 1)
    assert c.is_disk and not c.is_annulus


def test_single_triangle_is_forbidden():
    cx = SurfaceComplex.build([Triangle(0, (1, 2, 3))], [])
    with pytest.raises(ForbiddenComponent):
        cx.validate()


def test_two_triangles_glued_into_digon_rejected():
    # Two triangles glued along two sides form a digon with an interior vertex.
    cx = SurfaceComplex.build([Triangle(0, (1, 2, 3)), Triangle(1, (4, 5, 6))], [(1, 5), (2, 4)])
    with pytest.raises((PuncturedVertex, ForbiddenComponent)):
        cx.validate()


def test_side_glued_to_itself_is_malformed():
    with pytest.raises(MalformedGluing):
        SurfaceComplex.build([Triangle(0, (1, 2, 3)), Triangle(1, (4, 5, 6))], [(1, 1)]).validate()


def test_side_in_two_triangles_is_malformed():
    with pytest.raises(MalformedGluing):
        SurfaceComplex.build([Triangle(0, (1, 2, 3)), Triangle(1, (3, 5, 6))], []).validate()


def test_gluing_is_always_orientation_compatible():
    # Paired sides are identified with opposite directions, so any pairing of
    # two clockwise triangles gives an oriented square.
    cx = SurfaceComplex.build([Triangle(0, (1, 2, 3)), Triangle(1, (4, 5, 6))], [(1, 4)])
    assert cx.validate()[0].marked == 4


def test_punctured_vertex_rejected():
    # Three triangles round an interior vertex.
    tris = [Triangle(0, (1, 2, 3)), Triangle(1, (4, 5, 6)), Triangle(2, (7, 8, 9))]
    cx = SurfaceComplex.build(tris, [(1, 6), (4, 9), (7, 3)])
    with pytest.raises(PuncturedVertex):
        cx.validate()


def test_unknown_R_edge():
    with pytest.raises((UnknownEdge, MalformedGluing, ArcCountMismatch)):
        square().with_R([99]).validate()


@pytest.mark.parametrize("N", range(4, 13))
def test_polygon_arc_count(N):
    chords = [(0, j) for j in range(2, N - 1)]
    c = polygon_complex(N, chords).validate()[0]
    assert c.arcs == N - 3 == 6 * c.genus + 3 * c.boundaries + c.marked - 6


@pytest.mark.parametrize("n0,n1", [(1, 1), (1, 3), (2, 2), (3, 4), (4, 4)])
def test_annulus_arc_count(n0, n1):
    c = annulus_complex(n0, n1).validate()[0]
    assert c.is_annulus
    assert c.arcs == n0 + n1


# -- cut ----------------------------------------------------------------------

def test_cut_pentagon_removes_triangle():
    cx = pentagon()
    out = cut(cx, [2])
    c = out.validate()[0]
    assert (c.genus, c.boundaries, c.marked, c.arcs) == (0, 1, 4, 1)
    assert len(out.removed) == 1
    assert out.removed[0].lost[0].arc == 2
    copies = [s for s in out.boundary_sides if isinstance(out.provenance(s), ArcCopy)]
    assert len(copies) == 1


def test_cut_torus_along_arc_3_gives_cylinder():
    cls = torus_complex().cut([3]).validate()
    assert len(cls) == 1
    c = cls[0]
    assert (c.genus, c.boundaries, c.marked) == (0, 2, 4)
    assert sorted(c.points) == [1, 3]


def test_cut_nothing_is_identity():
    cx = pentagon()
    assert cut(cx, []) == cx


def test_cut_unknown_edge():
    with pytest.raises(UnknownEdge):
        cut(pentagon(), [42])


def test_cut_keeps_both_copies_without_removal():
    out = cut(pentagon(), [2], remove_triangles=False)
    tags = sorted(out.provenance(s).tag for s in out.boundary_sides
                  if isinstance(out.provenance(s), ArcCopy))
    assert tags == ["left", "right"]
    assert not out.removed


# -- reglue -------------------------------------------------------------------

def test_reglue_after_triangle_removal_fails():
    with pytest.raises(MissingCopy):
        reglue(cut(pentagon(), [2]), [2])


def test_reglue_torus_round_trip():
    cx = torus_complex([1, 2, 3])
    back = reglue(cut(cx, [3]), [3])
    assert isomorphic(back, cx)
    assert back.R == cx.R


def test_reglue_nothing_is_identity():
    cx = torus_complex()
    assert reglue(cx, []) == cx


# -- flip ---------------------------------------------------------------------

def test_flip_square_diagonal():
    out = flip(square(), 1)
    assert polygon_chords(out, 4) == {1: (1, 3)}


def test_flip_pentagon():
    out = flip(pentagon(), 2)
    assert sorted(polygon_chords(out, 5).values()) == [(0, 2), (2, 4)]
    assert out.R == frozenset({1, 2})


def test_flip_twice_is_identity():
    cx = torus_complex([1, 2])
    for e in cx.interior_edges:
        assert isomorphic(flip(flip(cx, e), e), cx)


def test_flip_unknown_edge():
    with pytest.raises(UnknownEdge):
        flip(square(), 7)


def test_flip_preserves_classification():
    cx = torus_complex()
    for e in cx.interior_edges:
        assert str(flip(cx, e).validate()) == str(cx.validate())


# -- equality and isomorphism ----------------------------------------------------

def test_isomorphism_ignores_ids():
    a = polygon_complex(5, [(0, 2), (0, 3)])
    b = polygon_complex(5, [(1, 3), (1, 4)])
    assert isomorphic(a, b)
    assert canonical_form(a) == canonical_form(b)


def test_isomorphism_respects_R():
    a = polygon_complex(5, [(0, 2), (0, 3)], [(0, 2)])
    b = polygon_complex(5, [(0, 2), (0, 3)], [(0, 2), (0, 3)])
    assert not isomorphic(a, b)


def test_provenance_defaults_to_original_boundary():
    cx = square()
    s = cx.boundary_sides[0]
    assert cx.provenance(s) == OriginalBoundary(s)
