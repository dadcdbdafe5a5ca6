"""Lattice geometry, linking forms, cluster files, drawing."""

from __future__ import annotations

from pathlib import Path

import pytest

from grapecalc.constants import twist_sign
from grapecalc.data import load_named_cluster
from grapecalc.hexgrapes import (
    GrapeCluster,
    HexCell,
    InvalidClusterError,
    canonical_order,
    render_svg,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "grapecalc" / "data"


def test_six_neighbors_each():
    c = HexCell(3, -2)
    nbs = c.neighbors()
    assert len(set(nbs)) == 6
    for nb in nbs:
        assert c.is_adjacent(nb) and nb.is_adjacent(c)
    assert not c.is_adjacent(HexCell(4, 1))
    assert not c.is_adjacent(c)


def test_twist_signs_by_slope_class():
    # positive slope (right-handed) carries the calibrated sign -1,
    # the two left-handed classes carry +1
    assert twist_sign((0, 1)) == twist_sign((0, -1)) == -1
    assert twist_sign((1, 0)) == twist_sign((-1, 0)) == 1
    assert twist_sign((1, -1)) == twist_sign((-1, 1)) == 1
    with pytest.raises(ValueError):
        twist_sign((2, 0))


def test_lone_grape_linking_form():
    cl = GrapeCluster.from_cells([(0, 0)])
    assert cl.linking_form().rows == ((-2,),)


def test_vertical_pair_linking_form():
    cl = GrapeCluster.from_cells([(0, 0), (0, 1)])
    assert cl.linking_form().rows == ((-2, -1), (-1, -2))


def test_horizontal_pair_linking_form():
    cl = GrapeCluster.from_cells([(0, 0), (1, 0)])
    assert cl.linking_form().rows == ((-2, 1), (1, -2))


def test_form_shape_properties_on_shipped_clusters():
    for name in ("e8", "c2"):
        cl = load_named_cluster(name)
        f = cl.linking_form()
        for i in range(f.n):
            assert f[i, i] == -2
            for j in range(f.n):
                if i != j:
                    assert f[i, j] in (-1, 0, 1)
        assert f.is_even()


def test_c2_cluster_invariants():
    b = load_named_cluster("c2").linking_form().invariants()
    assert b.rank == 8
    assert abs(b.determinant) == 1
    assert b.signature == -8
    assert b.even


def test_canonical_order_is_y_then_x():
    cells = [HexCell(1, 0), HexCell(0, 1), HexCell(-1, 1), HexCell(0, 0)]
    assert canonical_order(cells) == [HexCell(0, 0), HexCell(1, 0),
                                      HexCell(-1, 1), HexCell(0, 1)]


def test_disconnected_cluster_rejected_unless_flagged():
    with pytest.raises(InvalidClusterError):
        GrapeCluster.from_cells([(0, 0), (5, 5)])
    cl = GrapeCluster.from_cells([(0, 0), (5, 5)], allow_disconnected=True)
    assert len(cl) == 2


def test_cluster_file_round_trip():
    cl = load_named_cluster("e8")
    text = cl.to_text()
    again = GrapeCluster.from_text(text)
    assert again.cells == cl.cells
    assert again.to_text() == text  # canonical serialization is stable


def test_cluster_file_errors():
    with pytest.raises(InvalidClusterError):
        GrapeCluster.from_text("a 0 0\nb 0 0\n")  # duplicate cell
    with pytest.raises(InvalidClusterError):
        GrapeCluster.from_text("a 0\n")
    with pytest.raises(InvalidClusterError):
        GrapeCluster.from_text("# nothing here\n")


def test_translation_canonicalization():
    cl = GrapeCluster.from_cells([(3, 2), (4, 2)])
    assert cl.canonical_key() == GrapeCluster.from_cells([(0, 0), (1, 0)]).canonical_key()
    assert cl.canonical_translation().ordered_cells()[0] == HexCell(0, 0)


def test_render_single_grape():
    svg = render_svg(GrapeCluster.from_cells([(0, 0)]))
    assert svg.count("<circle") == 1
    assert svg.startswith("<svg")


def test_render_vertical_pair_marks_right_handed_twist():
    svg = render_svg(GrapeCluster.from_cells([(0, 0), (0, 1)]))
    assert svg.count("<circle") == 2
    assert "−" in svg  # right-handed tangency drawn with a minus mark


def test_render_e8_matches_golden_file():
    cl = load_named_cluster("e8")
    golden = (DATA / "e8.svg").read_text(encoding="utf-8")
    assert render_svg(cl) == golden
