"""Tableau grids: the four configuration kinds, validation, symmetry, free points.

Conventions used throughout the package:

* boxes are written ``(j, i)`` = (column, row), both 1-based; column 1 is the
  leftmost column and row 1 is the *bottom* row;
* a tableau is stored row by row, bottom to top, as the column index of the
  point in each row (``None`` for the empty row of the odd kind);
* kinds: ``dc`` (N columns x 2N rows, one point per row, two per column,
  j <= i <= N+j), ``sdc`` (a ``dc`` fixed by the half-turn), ``te``
  (n x 2n, one per row, two per column, j <= i), ``to`` (n x 2n+1, two per
  column, at most one per row, exactly one empty row, reducing to ``te`` when
  the empty row is deleted).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

Point = tuple[int, int]  # (column j, row i)

KINDS = ("dc", "sdc", "te", "to")


class InvalidTableau(ValueError):
    """Raised when a tableau value violates the invariants of its kind."""


class IntegrityError(RuntimeError):
    """An internal consistency guarantee failed (always a bug, never bad input)."""


def dims(kind: str, n: int) -> tuple[int, int]:
    """(width, height) of the grid for a given kind and size parameter."""
    if kind in ("dc", "sdc"):
        return n, 2 * n
    if kind == "te":
        return n, 2 * n
    if kind == "to":
        return n, 2 * n + 1
    raise InvalidTableau(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class Tableau:
    """An immutable tableau of one of the four kinds.

    ``rows[i-1]`` is the column of the point in row i (``None`` = empty row).
    """

    kind: str
    n: int
    rows: tuple[Optional[int], ...]

    @property
    def width(self) -> int:
        return dims(self.kind, self.n)[0]

    @property
    def height(self) -> int:
        return dims(self.kind, self.n)[1]

    def points(self) -> list[Point]:
        """All points as (j, i), in ascending row order."""
        return [(j, i) for i, j in enumerate(self.rows, start=1) if j is not None]

    def point_in_row(self, i: int) -> Optional[Point]:
        j = self.rows[i - 1]
        return None if j is None else (j, i)

    def column_rows(self, j: int) -> list[int]:
        """Rows of the points in column j, ascending."""
        return [i for i, c in enumerate(self.rows, start=1) if c == j]

    def columns(self) -> list[list[int]]:
        """``columns()[j]`` = ascending rows of column j (index 0 unused)."""
        cols: list[list[int]] = [[] for _ in range(self.width + 1)]
        for i, j in enumerate(self.rows, start=1):
            if j is not None:
                cols[j].append(i)
        return cols

    @property
    def empty_row(self) -> Optional[int]:
        """Row index of the empty row (``to`` kind), else None."""
        for i, j in enumerate(self.rows, start=1):
            if j is None:
                return i
        return None

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "rows": list(self.rows)}

    @staticmethod
    def from_json_dict(d: dict) -> "Tableau":
        try:
            kind, n, rows = d["kind"], d["n"], d["rows"]
        except (KeyError, TypeError) as exc:
            raise InvalidTableau(f"malformed tableau object: {exc}") from None
        if not isinstance(n, int):
            raise InvalidTableau("size parameter must be an integer")
        return make(kind, n, rows)


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of validation: ok, or the first violated invariant + witness box."""

    ok: bool
    violation: Optional[str] = None
    witness: Optional[Point] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violation": self.violation,
            "witness": list(self.witness) if self.witness else None,
        }


def make(kind: str, n: int, rows: Sequence[Optional[int]], *, validate_kind: bool = True) -> Tableau:
    """Build a tableau, validating it unless ``validate_kind`` is False."""
    t = Tableau(kind, n, tuple(rows))
    if validate_kind:
        rep = validate(t)
        if not rep:
            raise InvalidTableau(f"{rep.violation} (witness box {rep.witness})")
    return t


def _first_bad_column(t: Tableau) -> Optional[tuple[str, Point]]:
    counts = [0] * (t.width + 1)
    for i, j in enumerate(t.rows, start=1):
        if j is None:
            continue
        if not isinstance(j, int) or not 1 <= j <= t.width:
            return ("point outside the grid", (j, i))
        counts[j] += 1
        if counts[j] > 2:
            return ("more than two points in a column", (j, i))
    for j in range(1, t.width + 1):
        if counts[j] != 2:
            return ("column does not hold exactly two points", (j, 0))
    return None


def validate(t: Tableau, kind: Optional[str] = None) -> ValidityReport:
    """Check all invariants of ``kind`` (default: the tableau's own kind).

    Total: never raises on well-typed input; returns the first violated
    invariant with a witness box.
    """
    kind = kind or t.kind
    if kind not in KINDS:
        return ValidityReport(False, f"unknown kind {kind!r}", None)
    if t.n < 1:
        return ValidityReport(False, "size parameter must be >= 1", None)
    W, H = dims(kind, t.n)
    if len(t.rows) != H:
        return ValidityReport(False, f"expected {H} rows, got {len(t.rows)}", None)

    empties = [i for i, j in enumerate(t.rows, start=1) if j is None]
    if kind in ("dc", "sdc", "te"):
        if empties:
            return ValidityReport(False, "empty row in a kind with one point per row",
                                  (0, empties[0]))
    else:  # to
        if len(empties) != 1:
            return ValidityReport(False, "odd kind needs exactly one empty row",
                                  (0, empties[0] if empties else 0))
        e = empties[0]
        if not t.n + 1 <= e <= 2 * t.n + 1:
            return ValidityReport(False, "empty row must lie in the upper half", (0, e))

    bad = _first_bad_column(t)
    if bad:
        return ValidityReport(False, *bad)

    if kind in ("dc", "sdc"):
        for i, j in enumerate(t.rows, start=1):
            if not j <= i <= t.n + j:
                return ValidityReport(False, "point outside the diagonal band j <= i <= n+j",
                                      (j, i))
        if kind == "sdc" and not is_symmetric(t):
            return ValidityReport(False, "not fixed by the half-turn", None)
    elif kind == "te":
        for i, j in enumerate(t.rows, start=1):
            if not j <= i:
                return ValidityReport(False, "point below the diagonal j <= i", (j, i))
    else:  # to: deleting the empty row must leave a valid te
        e = t.rows.index(None) + 1
        for i, j in enumerate(t.rows, start=1):
            if j is None:
                continue
            bound = i if i < e else i - 1
            if not j <= bound:
                return ValidityReport(False,
                                      "point below the diagonal after removing the empty row",
                                      (j, i))
    return ValidityReport(True)


def rotate_pi(t: Tableau) -> Tableau:
    """Half-turn of the grid: box (j, i) goes to (W+1-j, H+1-i). Involution."""
    W, H = t.width, t.height
    new_rows: list[Optional[int]] = [None] * H
    for i, j in enumerate(t.rows, start=1):
        if j is not None:
            new_rows[H - i] = W + 1 - j
    return Tableau(t.kind, t.n, tuple(new_rows))


def is_symmetric(t: Tableau) -> bool:
    """True iff the tableau is fixed by the half-turn."""
    return rotate_pi(t).rows == t.rows


def mirror_point(t: Tableau, p: Point) -> Point:
    """Image of a point under the half-turn."""
    j, i = p
    return (t.width + 1 - j, t.height + 1 - i)


def free_points(t: Tableau) -> list[Point]:
    """Points strictly above the anti-diagonal: i + j >= H + 1 (ascending rows)."""
    H = t.height
    return [(j, i) for i, j in enumerate(t.rows, start=1)
            if j is not None and i + j >= H + 1]


def fr(t: Tableau) -> int:
    """Number of free points."""
    H = t.height
    return sum(1 for i, j in enumerate(t.rows, start=1)
               if j is not None and i + j >= H + 1)


def delete_empty_row(t: Tableau) -> Tableau:
    """Collapse the empty row of a ``to`` tableau, yielding the ``te`` reduction."""
    if t.kind != "to":
        raise InvalidTableau("delete_empty_row applies to the odd kind only")
    e = t.empty_row
    if e is None:
        raise InvalidTableau("no empty row")
    rows = t.rows[:e - 1] + t.rows[e:]
    return make("te", t.n, rows)


def insert_empty_row(t: Tableau, e: int) -> Tableau:
    """Inverse of delete_empty_row: reinsert an empty row at index e."""
    if t.kind != "te":
        raise InvalidTableau("insert_empty_row applies to the even kind only")
    rows = t.rows[:e - 1] + (None,) + t.rows[e - 1:]
    return make("to", t.n, rows)


def point_set(t: Tableau) -> frozenset[Point]:
    return frozenset(t.points())


def iter_points_by_column(t: Tableau) -> Iterator[tuple[int, list[int]]]:
    cols = t.columns()
    for j in range(1, t.width + 1):
        yield j, cols[j]
