import pytest
from hypothesis import given, strategies as st

from dellac.grid import (
    InvalidTableau,
    Tableau,
    delete_empty_row,
    dims,
    free_points,
    fr,
    insert_empty_row,
    is_symmetric,
    make,
    rotate_pi,
    validate,
)

from anchors import DC2_ELEMENTS, REF_TE7, TE2_ELEMENTS, TE2_FR


def test_dims():
    assert dims("dc", 3) == (3, 6)
    assert dims("sdc", 5) == (5, 10)
    assert dims("te", 4) == (4, 8)
    assert dims("to", 4) == (4, 9)


def test_make_valid_te():
    t = make("te", 2, (1, 2, 2, 1))
    assert t.points() == [(1, 1), (2, 2), (2, 3), (1, 4)]
    assert t.column_rows(2) == [2, 3]


def test_validate_reports_first_violation():
    # three points in column 1
    rep = validate(Tableau("te", 2, (1, 1, 1, 2)))
    assert not rep.ok and rep.violation == "more than two points in a column"
    assert rep.witness == (1, 3)
    # below the diagonal
    rep = validate(Tableau("te", 2, (2, 1, 1, 2)))
    assert not rep.ok and rep.witness == (2, 1)
    # wrong row count
    assert not validate(Tableau("te", 2, (1, 2, 2)))
    # the diagonal band of the configuration kinds
    assert validate(Tableau("dc", 2, (1, 1, 2, 2)), "dc").ok
    rep = validate(Tableau("dc", 2, (1, 2, 2, 1)))
    assert not rep.ok and rep.violation.startswith("point outside the diagonal band")


def test_validate_total_on_junk():
    assert not validate(Tableau("xx", 1, (1,)))
    assert not validate(Tableau("te", 0, ()))
    assert not validate(Tableau("te", 2, (None, 1, 2, 2)))


def test_odd_kind_validation():
    assert validate(Tableau("to", 1, (1, None, 1))).ok
    assert validate(Tableau("to", 1, (1, 1, None))).ok
    # empty row must sit in the upper half
    assert not validate(Tableau("to", 2, (None, 1, 1, 2, 2)))
    # two empty rows
    assert not validate(Tableau("to", 1, (1, None, None)))
    # a point above the empty row obeys the shifted diagonal: (3, 3) with the
    # empty row at 2 reduces to (3, 2), which is below the diagonal
    assert not validate(Tableau("to", 3, (1, None, 3, 1, 2, 2, 3)))


def test_make_raises():
    with pytest.raises(InvalidTableau):
        make("te", 2, (1, 1, 1, 2))


def test_rotation_involution_and_symmetry():
    for rows in DC2_ELEMENTS:
        d = make("dc", 2, rows)
        assert is_symmetric(d)  # both 2-column configurations are symmetric
        assert rotate_pi(rotate_pi(d)) == d
    t = make("te", 7, REF_TE7)
    assert rotate_pi(rotate_pi(t)).rows == t.rows


def test_free_points_te2():
    for rows, expected in zip(TE2_ELEMENTS, TE2_FR):
        t = make("te", 2, rows)
        assert fr(t) == expected
        assert all(i + j >= 5 for j, i in free_points(t))


def test_free_points_ref():
    t = make("te", 7, REF_TE7)
    assert fr(t) == 6
    assert free_points(t) == [(6, 9), (7, 10), (7, 11), (3, 12), (2, 13), (4, 14)]


def test_empty_row_round_trip():
    t = make("to", 1, (1, None, 1))
    assert t.empty_row == 2
    reduced = delete_empty_row(t)
    assert reduced.kind == "te" and reduced.rows == (1, 1)
    assert insert_empty_row(reduced, 2) == t


def test_json_round_trip():
    t = make("to", 2, (1, 1, 2, None, 2))
    assert Tableau.from_json_dict(t.to_json_dict()) == t


@given(st.sampled_from(DC2_ELEMENTS + [(1, 2, 1, 3, 2, 3), (1, 2, 3, 1, 2, 3)]))
def test_rotation_preserves_square_validity(rows):
    N = len(rows) // 2
    t = make("dc", N, rows)
    assert validate(rotate_pi(t)).ok
    assert rotate_pi(rotate_pi(t)) == t
