"""SVG rendering: determinism, structure, overlays."""
import pytest

from dellac.grid import make
from dellac.render import render_svg

from anchors import DC2_ELEMENTS, P_REF, REF_TE7

REF = make("te", 7, REF_TE7)
ODD = make("to", 6, P_REF)
DC = make("dc", 2, DC2_ELEMENTS[0])


def test_deterministic():
    a = render_svg(REF, overlay="paths")
    b = render_svg(REF, overlay="paths")
    assert a == b
    assert render_svg(DC) == render_svg(DC)


def test_well_formed():
    svg = render_svg(REF)
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>")
    assert svg.count("<svg ") == 1


def test_point_marks():
    t = make("te", 2, (1, 2, 2, 1))
    svg = render_svg(t)
    # two free points as stars, two others as dots
    assert svg.count("<polygon") == 2
    assert svg.count('fill="#222"/>') == 4


def test_empty_row_shaded():
    svg = render_svg(ODD)
    assert 'fill="#eee"' in svg
    assert 'fill="#eee"' not in render_svg(REF)


def test_paths_overlay_draws_chains():
    plain = render_svg(REF)
    with_paths = render_svg(REF, overlay="paths")
    assert len(with_paths) > len(plain)
    assert "<polyline" in with_paths
    assert "#1f77b4" in with_paths and "#d62728" in with_paths
    odd = render_svg(ODD, overlay="paths")
    assert "#9467bd" in odd


def test_labels_overlay_draws_letters():
    svg = render_svg(REF, overlay="labels")
    assert "<text" in svg
    assert "β" in svg and "ρ" in svg and "γ" in svg
    odd = render_svg(ODD, overlay="labels")
    assert "ν" in odd


def test_overlays_ignored_on_square_kinds():
    assert render_svg(DC, overlay="paths") == render_svg(DC)
    assert render_svg(DC, overlay="labels") == render_svg(DC)


def test_bad_arguments():
    with pytest.raises(ValueError):
        render_svg(DC, overlay="wat")
    with pytest.raises(ValueError):
        render_svg(DC, cell=2)
