import pytest

from mskit.catalog import polygon_complex
from mskit.charts import (
    INF,
    AnnulusChart,
    Bridging,
    DiskArc,
    DiskChart,
    Peripheral,
    crossing,
    extend_to_triangulation,
    followers,
    parse_arc,
    periodicity,
    shift,
)
from mskit.errors import CrossingInput, InvalidArc
from mskit.quiver import reduction_chart
from mskit.surface import ArcCopy, OriginalBoundary


# -- disk --------------------------------------------------------------------

def test_disk_shift():
    assert shift(DiskChart(6), DiskArc(0, 2)) == DiskArc(1, 3)
    assert shift(DiskChart(6), DiskArc(1, 5)) == DiskArc(0, 2)
    assert shift(DiskChart(6), DiskArc(1, 3), -1) == DiskArc(0, 2)


def test_disk_periodicity():
    assert periodicity(DiskChart(6), DiskArc(0, 3)) == 3
    assert periodicity(DiskChart(5), DiskArc(0, 2)) == 5
    assert periodicity(DiskChart(8), DiskArc(1, 5)) == 4
    assert periodicity(DiskChart(8), DiskArc(1, 4)) == 8


def test_disk_crossing():
    ch = DiskChart(4)
    assert crossing(ch, DiskArc(0, 2), DiskArc(1, 3)) == 1
    assert crossing(DiskChart(6), DiskArc(0, 2), DiskArc(0, 4)) == 0
    assert crossing(DiskChart(6), DiskArc(0, 3), DiskArc(0, 3)) == 0


def test_disk_followers_all_original():
    ch = DiskChart(4)
    assert followers(ch, DiskArc(1, 3)) == (OriginalBoundary(1), OriginalBoundary(3))


def test_disk_invalid_arcs():
    ch = DiskChart(5)
    for bad in (DiskArc(0, 1), DiskArc(0, 4), DiskArc(2, 7)):
        with pytest.raises(InvalidArc):
            ch.check(bad)
    with pytest.raises(InvalidArc):
        DiskChart(3)


def test_disk_extend():
    out = extend_to_triangulation(DiskChart(5), [DiskArc(0, 2)])
    assert DiskArc(0, 2) in out and len(out) == 2
    assert len(extend_to_triangulation(DiskChart(4), [])) == 1
    with pytest.raises(CrossingInput):
        extend_to_triangulation(DiskChart(4), [DiskArc(0, 2), DiskArc(1, 3)])


def test_pentagon_reduction_charts():
    cx = polygon_complex(5, [(0, 2), (0, 3)], [(0, 2), (0, 3)])
    red = reduction_chart(cx, 1)
    assert red.chart.N == 4
    assert red.arc == DiskArc(0, 2)
    prov = red.chart.provenance
    assert isinstance(prov[3], ArcCopy) and prov[3].arc == 2
    assert all(isinstance(p, OriginalBoundary) for p in prov[:3])
    # The boundary segments of the pentagon are sides 5..9.
    assert followers(red.chart, DiskArc(0, 2)) == (OriginalBoundary(5), OriginalBoundary(7))
    first, second = followers(red.chart, DiskArc(1, 3))
    assert first == OriginalBoundary(6)
    assert isinstance(second, ArcCopy) and second.arc == 2


# -- annulus -----------------------------------------------------------------

def test_annulus_peripheral_shift():
    assert shift(AnnulusChart(4, 4), Peripheral(0, 0, 2)) == Peripheral(0, 1, 3)


def test_annulus_bridging_shift_carry():
    # Both endpoints pass the reference points of their cycles.
    A = AnnulusChart(2, 2)
    assert shift(A, Bridging(1, 1, 0)) == Bridging(0, 0, 2)
    assert shift(A, Bridging(0, 0, 0)) == Bridging(1, 1, 0)
    assert shift(AnnulusChart(3, 2), Bridging(2, 0, 5)) == Bridging(0, 1, 6)


def test_annulus_periodicity():
    A = AnnulusChart(3, 2)
    assert periodicity(A, Peripheral(0, 0, 2)) == 3
    assert periodicity(A, Peripheral(1, 1, 1)) == 2
    assert periodicity(A, Bridging(0, 0, 0)) == INF


def test_annulus_bridging_drifts_after_full_turn():
    A = AnnulusChart(2, 3)
    b = Bridging(1, 2, 0)
    turned = shift(A, b, 6)
    assert (turned.p, turned.q) == (b.p, b.q) and turned.w != b.w


def test_annulus_crossing():
    A = AnnulusChart(2, 2)
    # These two coexist in a triangulation, so they cannot cross.
    assert crossing(A, Bridging(0, 0, 0), Bridging(0, 0, 1)) == 0
    assert crossing(A, Bridging(0, 0, 0), Bridging(0, 0, 2)) == 1
    assert crossing(A, Bridging(0, 0, 0), Bridging(0, 0, 0)) == 0
    assert crossing(A, Peripheral(0, 0, 0), Bridging(1, 0, 0)) >= 1


def test_annulus_extend_empty():
    A = AnnulusChart(2, 2)
    out = extend_to_triangulation(A, [])
    assert len(out) == 4
    assert all(crossing(A, a, b) == 0 for a in out for b in out)


def test_annulus_extend_with_peripheral():
    A = AnnulusChart(3, 1)
    out = extend_to_triangulation(A, [Peripheral(0, 0, 2)])
    assert Peripheral(0, 0, 2) in out and len(out) == 4


def test_annulus_invalid_arcs():
    A = AnnulusChart(3, 2)
    for bad in (Peripheral(0, 0, 1), Bridging(3, 0, 0), Peripheral(2, 0, 0), DiskArc(0, 2)):
        with pytest.raises(InvalidArc):
            A.check(bad)


# -- literals ------------------------------------------------------------------

@pytest.mark.parametrize("text,arc", [
    ("D{0,3}", DiskArc(0, 3)),
    ("D{3, 0}", DiskArc(0, 3)),
    ("B(1,0;-2)", Bridging(1, 0, -2)),
    ("P(1;0,2)", Peripheral(1, 0, 2)),
])
def test_parse_arc(text, arc):
    assert parse_arc(text) == arc
    assert parse_arc(str(arc)) == arc


def test_parse_arc_rejects_garbage():
    with pytest.raises(InvalidArc):
        parse_arc("X{1}")
