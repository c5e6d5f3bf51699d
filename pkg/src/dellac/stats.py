"""Inversion statistics, point walks, path reports, and label assignment.

The walk of a point (c : i): the upper point of a column c moves to row H-c,
the lower one to row c (H = number of rows); reaching column n freezes, and in
the odd kind stepping into the empty row freezes.  Walks may cycle without
freezing; record extraction stops at the first repeated point, past which no
new column record can occur.

The value walk of a box (j, i) ("iota"): values in [j, H-j] or H are
stationary; a value in [H-j+1, H-1] moves to the upper row of column H-value;
a value in [1, j-1] moves to the lower row of that column.  Its stationary
value is the root of the box.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .grid import (
    IntegrityError,
    InvalidTableau,
    Point,
    Tableau,
    is_symmetric,
    mirror_point,
)
from .polynomials import Poly

Rows = Sequence[Optional[int]]


# ---------------------------------------------------------------------------
# Inversions.
# ---------------------------------------------------------------------------

def inversions(t: Tableau) -> list[tuple[Point, Point]]:
    """All pairs (p1, p2) with column(p1) < column(p2) and row(p1) > row(p2)."""
    pts = t.points()
    out = [(p1, p2)
           for p1 in pts for p2 in pts
           if p1[0] < p2[0] and p1[1] > p2[1]]
    out.sort()
    return out


def inv(t: Tableau) -> int:
    return len(inversions(t))


def _mirror_pair(t: Tableau, pair: tuple[Point, Point]) -> tuple[Point, Point]:
    p1, p2 = pair
    return (mirror_point(t, p2), mirror_point(t, p1))


def fixed_pair_count(t: Tableau) -> int:
    """Inversions of the form (p, image of p under the half-turn)."""
    return sum(1 for pair in inversions(t) if _mirror_pair(t, pair) == pair)


def tilde_inv(t: Tableau) -> int:
    """Orbit count of the half-turn involution acting on the inversion set."""
    if not is_symmetric(t):
        raise InvalidTableau("orbit inversion statistics need a symmetric configuration")
    pairs = inversions(t)
    orbits = {min(pair, _mirror_pair(t, pair)) for pair in pairs}
    fixed = sum(1 for pair in pairs if _mirror_pair(t, pair) == pair)
    if 2 * len(orbits) != len(pairs) + fixed:
        raise IntegrityError("orbit count inconsistent with pair/fixed-point counts")
    return len(orbits)


def bar_inv(t: Tableau) -> int:
    """Orbit count minus the number of self-paired inversions."""
    return tilde_inv(t) - fixed_pair_count(t)


def poincare_poly(variety: str, N: int) -> Poly:
    """Inversion generating polynomial in q over the configuration family.

    ``a``: plain inversions over all N-column configurations; ``sp``: orbit
    inversions over the symmetric ones; ``so``: orbit inversions minus
    self-paired inversions over the symmetric ones.
    """
    from .enumeration import enum_dc, enum_sdc

    if variety == "a":
        stat: Callable[[Tableau], int] = inv
        source = enum_dc(N)
    elif variety == "sp":
        stat = tilde_inv
        source = enum_sdc(N)
    elif variety == "so":
        stat = bar_inv
        source = enum_sdc(N)
    else:
        raise ValueError(f"unknown variety {variety!r} (expected a, sp or so)")
    coeffs: list[int] = []
    for t in source:
        e = stat(t)
        while len(coeffs) <= e:
            coeffs.append(0)
        coeffs[e] += 1
    return Poly.of(coeffs)


# ---------------------------------------------------------------------------
# Walk primitives over raw row tuples (shared by reports and the hot loops).
# ---------------------------------------------------------------------------

def _columns_of(rows: Rows, width: int) -> list[list[int]]:
    cols: list[list[int]] = [[] for _ in range(width + 1)]
    for i, j in enumerate(rows, start=1):
        if j is not None:
            cols[j].append(i)
    return cols


def _srecord_rows(rows: Rows, cols: list[list[int]], n: int, H: int, i0: int) -> list[int]:
    """Rows of the strict column records of the point walk started at row i0."""
    if rows[i0 - 1] is None:
        return []
    seen = bytearray(H + 1)
    rec: list[int] = []
    best = 0
    i = i0
    while not seen[i]:
        seen[i] = 1
        j = rows[i - 1]
        if j > best:
            rec.append(i)
            best = j
        if j == n:
            break
        a, b = cols[j]
        nxt = H - j if i == b else j
        if rows[nxt - 1] is None:
            break
        i = nxt
    return rec


def _root_row(cols: list[list[int]], H: int, j: int, i: int) -> int:
    """Stationary value of the value walk of box (j, i)."""
    steps = 0
    while True:
        if j <= i <= H - j or i == H:
            return i
        if i > H - j:
            i = cols[H - i][1]
        else:
            i = cols[i][0]
        steps += 1
        if steps > 4 * H:
            raise IntegrityError("value walk failed to stabilize")


def _g_rows(rows: Rows, cols: list[list[int]], n: int, H: int,
            base_rows: Sequence[int]) -> list[int]:
    """Rows of free points whose column partner lies on the base path and whose
    box stabilizes at its own column value."""
    base = set(base_rows)
    out: list[int] = []
    for i, j in enumerate(rows, start=1):
        if j is None or i + j <= H:
            continue
        a, b = cols[j]
        mate = a if i == b else b
        if mate in base and _root_row(cols, H, j, i) == j:
            out.append(i)
    return out


# ---------------------------------------------------------------------------
# Public walk API on tableaux.
# ---------------------------------------------------------------------------

def path_S(t: Tableau, i: int) -> list[Point]:
    """Strict column records of the walk started at row i, as points."""
    if t.kind not in ("te", "to"):
        raise InvalidTableau("point walks are defined on the extended kinds")
    rows = t.rows
    recs = _srecord_rows(rows, t.columns(), t.n, t.height, i)
    return [(rows[r - 1], r) for r in recs]


def iota_path(t: Tableau, j: int, i: int) -> list[int]:
    """Value walk of box (j, i), up to the first repetition of the root."""
    H = t.height
    if not 1 <= j <= t.width or not 1 <= i <= H:
        raise InvalidTableau(f"box ({j}, {i}) outside the grid")
    cols = t.columns()
    path = [i]
    steps = 0
    while True:
        if j <= i <= H - j or i == H:
            path.append(i)
            return path
        if i > H - j:
            i = cols[H - i][1]
        else:
            i = cols[i][0]
        path.append(i)
        steps += 1
        if steps > 4 * H:
            raise IntegrityError("value walk failed to stabilize")


def root(t: Tableau, j: int, i: int) -> int:
    """Stationary value of the value walk of box (j, i)."""
    if not 1 <= j <= t.width or not 1 <= i <= t.height:
        raise InvalidTableau(f"box ({j}, {i}) outside the grid")
    return _root_row(t.columns(), t.height, j, i)


# ---------------------------------------------------------------------------
# Path reports.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PathReport:
    """Walk data of an even extended tableau.

    B / R: records of the walks from rows n and 2n (always ending at the two
    column-n points); G: free points attached to B.  The primed data is the
    secondary pair from rows n-1 / n+1; primed counts only consider columns
    1..n-1 (a column-n head may close a primed path but never carries labels)
    and skip points already on the primary paths, so max + maxP is the size of
    the union of all six sets restricted to columns below n.
    """

    B: tuple[Point, ...]
    R: tuple[Point, ...]
    G: tuple[Point, ...]
    Bp: tuple[Point, ...]
    Rp: tuple[Point, ...]
    Gp: tuple[Point, ...]
    b: int
    r: int
    g: int
    bP: int
    rP: int
    gP: int
    max: int
    omax: int
    maxP: int
    fr: int

    def omax_set(self) -> frozenset[Point]:
        return frozenset(self.B) | frozenset(self.R) | frozenset(self.G)

    def max_set(self) -> frozenset[Point]:
        return self.omax_set() - {self.B[-1], self.R[-1]}

    def primed_set(self) -> frozenset[Point]:
        return frozenset(self.Bp) | frozenset(self.Rp) | frozenset(self.Gp)

    def to_json_dict(self) -> dict:
        enc = lambda ps: [list(p) for p in ps]
        return {
            "B": enc(self.B), "R": enc(self.R), "G": enc(self.G),
            "Bprime": enc(self.Bp), "Rprime": enc(self.Rp), "Gprime": enc(self.Gp),
            "b": self.b, "r": self.r, "g": self.g,
            "bP": self.bP, "rP": self.rP, "gP": self.gP,
            "max": self.max, "omax": self.omax, "maxP": self.maxP,
            "fr": self.fr,
        }


@dataclass(frozen=True)
class OddPathReport:
    """Walk data of an odd extended tableau: records V of the walk from the top
    row and the attached free points G."""

    V: tuple[Point, ...]
    G: tuple[Point, ...]
    v: int
    g: int
    fr: int

    def to_json_dict(self) -> dict:
        enc = lambda ps: [list(p) for p in ps]
        return {"V": enc(self.V), "G": enc(self.G),
                "v": self.v, "g": self.g, "fr": self.fr}


def _fr_of(rows: Rows, H: int) -> int:
    return sum(1 for i, j in enumerate(rows, start=1) if j is not None and i + j > H)


def primed_start(t: Tableau) -> int:
    """Starting row (n-1 or n+1) of the secondary B-side walk.

    The two column-(n-1) points decide the role split of the two walks from
    rows n-1 and n+1.  With jm / jp the columns of the row-(n-1) and
    row-(n+1) points, the nearer of the two rows (by that comparison) leads
    when the column carries an R point with a walked partner; the farther one
    leads when it carries a G point.  A lone R point (partner off every
    primary path) instead hands the lead to row n+1 exactly when the
    row-(n+1) point is free or the row-(n-1) point sits in column n-1.
    Without R or G in the column, row n+1 leads iff the row-(n+1) point is
    free.  Frozen by the exhaustive shrink-fiber count checks.
    """
    n, H, rows = t.n, t.height, t.rows
    if n < 2:
        raise InvalidTableau("the secondary walks need at least two columns")
    cols = t.columns()
    jm, jp = rows[n - 2], rows[n]
    imin, imax = (n - 1, n + 1) if jm <= jp else (n + 1, n - 1)
    Brows = _srecord_rows(rows, cols, n, H, n)
    Rrows = _srecord_rows(rows, cols, n, H, H)
    rset = set(Rrows)
    gset = set(_g_rows(rows, cols, n, H, Brows))
    ca, cb = cols[n - 1]
    r_here = [i for i in (ca, cb) if i in rset]
    if r_here:
        mate = cb if ca == r_here[0] else ca
        if mate not in set(Brows) | rset | gset:
            return n + 1 if (jp == n or jm == n - 1) else n - 1
        return imin
    if ca in gset or cb in gset:
        return imax
    if jp == n:  # the row-(n+1) point is free iff it sits in column n
        return n + 1
    return n - 1


def path_report(t: Tableau, start: Optional[int] = None) -> PathReport:
    """Full walk report of an even extended tableau.

    ``start`` overrides the starting row of the secondary B-side walk (n-1 or
    n+1); the shrink map uses the override to re-run a projection with the
    two secondary roles exchanged.
    """
    if t.kind != "te":
        raise InvalidTableau("path reports are defined on the even extended kind")
    n, H, rows = t.n, t.height, t.rows
    cols = t.columns()
    pt = lambda rs: tuple((rows[i - 1], i) for i in rs)

    Brows = _srecord_rows(rows, cols, n, H, n)
    Rrows = _srecord_rows(rows, cols, n, H, H)
    Grows = _g_rows(rows, cols, n, H, Brows)

    if n == 1:
        Bp_rows: list[int] = []
        Rp_rows: list[int] = []
        Gp_rows: list[int] = []
    else:
        if start is None:
            start = primed_start(t)
        elif start not in (n - 1, n + 1):
            raise InvalidTableau("the secondary walks start from row n-1 or n+1")
        walk = lambda i0: _srecord_rows(rows, cols, n, H, i0)
        Bp_rows, Rp_rows = walk(start), walk(2 * n - start)
        Gp_rows = _g_rows(rows, cols, n, H, Bp_rows)

    b, r, g = len(Brows) - 1, len(Rrows) - 1, len(Grows)
    unprimed = set(Brows) | set(Rrows) | set(Grows)
    low = lambda rs: sum(1 for i in rs if rows[i - 1] < n and i not in unprimed)
    bP, rP, gP = low(Bp_rows), low(Rp_rows), low(Gp_rows)
    mx, mxP = b + r + g, bP + rP + gP
    omax = len(unprimed)
    if omax != mx + 2:
        raise IntegrityError("path sets overlap: |B u R u G| != max + 2")
    if n >= 2 and mxP < 1:
        raise IntegrityError("secondary paths carry no fresh column-<n point")
    return PathReport(pt(Brows), pt(Rrows), pt(Grows),
                      pt(Bp_rows), pt(Rp_rows), pt(Gp_rows),
                      b, r, g, bP, rP, gP, mx, omax, mxP, _fr_of(rows, H))


def path_report_odd(t: Tableau) -> OddPathReport:
    """Walk report of an odd extended tableau."""
    if t.kind != "to":
        raise InvalidTableau("odd path reports are defined on the odd extended kind")
    n, H, rows = t.n, t.height, t.rows
    cols = t.columns()
    Vrows = _srecord_rows(rows, cols, n, H, H)
    Grows = _g_rows(rows, cols, n, H, Vrows)
    pt = lambda rs: tuple((rows[i - 1], i) for i in rs)
    return OddPathReport(pt(Vrows), pt(Grows), len(Vrows), len(Grows), _fr_of(rows, H))


# ---------------------------------------------------------------------------
# Label assignment on the labeled point sets.
# ---------------------------------------------------------------------------

BETA, RHO, GAMMA = "beta", "rho", "gamma"
NU = "nu"


def assign_forward_labels(t: Tableau, rep: Optional[PathReport] = None) -> dict[Point, str]:
    """beta/rho/gamma labels on the columns-<n path points of an even tableau.

    Same-column pairs (one point on B, its partner on B'; or one on R', its
    partner on R) are labeled first: beta/gamma in columns below n-1, but
    beta/rho in column n-1 itself, where the beta and gamma targets land in
    the same box.  Remaining points take beta on B u B', rho on R u R',
    gamma on G u G'.
    """
    if rep is None:
        rep = path_report(t)
    n = t.n
    Bs, Rs = set(rep.B), set(rep.R)
    Bps, Rps = set(rep.Bp), set(rep.Rp)
    dom = {p for p in (Bs | Rs | set(rep.G) | Bps | Rps | set(rep.Gp))
           if p[0] < n} - {rep.B[-1], rep.R[-1]}
    labels: dict[Point, str] = {}
    cols = t.columns()
    for j in range(1, n):
        a, b = cols[j]
        for p1, p2 in (((j, a), (j, b)), ((j, b), (j, a))):
            if p1 in labels or p2 in labels:
                continue
            if (p1 in Bs and p2 in Bps) or (p1 in Rps and p2 in Rs):
                labels[p1] = BETA
                labels[p2] = RHO if j == n - 1 else GAMMA
    for p in sorted(dom):
        if p in labels:
            continue
        if p in Bs or p in Bps:
            labels[p] = BETA
        elif p in Rs or p in Rps:
            labels[p] = RHO
        else:
            labels[p] = GAMMA
    return labels


def assign_nu_labels(t: Tableau, rep: Optional[PathReport] = None) -> dict[Point, str]:
    """nu on every B/R point, gamma on every G point (even tableau)."""
    if rep is None:
        rep = path_report(t)
    labels = {p: NU for p in rep.B}
    for p in rep.R:
        if p in labels:
            raise IntegrityError("B and R overlap")
        labels[p] = NU
    for p in rep.G:
        if p in labels:
            raise IntegrityError("G meets B u R")
        labels[p] = GAMMA
    return labels


# ---------------------------------------------------------------------------
# Raw-tuple fast paths for the exhaustive weighted sums.
# ---------------------------------------------------------------------------

def even_weight_stats(rows: Rows, n: int) -> tuple[int, int]:
    """(fr, max) of an even extended row tuple, without building a report."""
    H = 2 * n
    cols = _columns_of(rows, n)
    Brows = _srecord_rows(rows, cols, n, H, n)
    Rrows = _srecord_rows(rows, cols, n, H, H)
    g = len(_g_rows(rows, cols, n, H, Brows))
    return _fr_of(rows, H), len(Brows) + len(Rrows) + g - 2


def odd_weight_stats(rows: Rows, n: int) -> tuple[int, int, int]:
    """(fr, v, g) of an odd extended row tuple."""
    H = 2 * n + 1
    cols = _columns_of(rows, n)
    Vrows = _srecord_rows(rows, cols, n, H, H)
    g = len(_g_rows(rows, cols, n, H, Vrows))
    return _fr_of(rows, H), len(Vrows), g
