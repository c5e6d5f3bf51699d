"""Bijections between the families: expansions, reductions, and fiber builds.

Conventions shared by every construction here:

* point insertion at (j, i_f) walks backwards from row i_f (the unique chain
  of rows feeding into it) and plots j in the first row holding no point in
  columns < j; this is the unique row, among those whose first j-1 boxes are
  empty, whose box (j, .) stabilizes at i_f;
* insertions are performed column by column, ascending; when one column
  carries two labeled points the insertion order is fixed by the label
  priority lists below (frozen by the exhaustive round-trip tests).
"""
from __future__ import annotations

from itertools import product
from typing import Iterator, Optional, Sequence

from .grid import (
    IntegrityError,
    InvalidTableau,
    Point,
    Tableau,
    free_points,
    make,
)
from .stats import (
    BETA,
    GAMMA,
    NU,
    RHO,
    OddPathReport,
    PathReport,
    assign_forward_labels,
    assign_nu_labels,
    path_report,
    path_report_odd,
)

# ---------------------------------------------------------------------------
# Labeled expansions to the symmetric configurations and back.
# ---------------------------------------------------------------------------


def _check_labels(t: Tableau, labels: dict[Point, int]) -> None:
    free = set(free_points(t))
    if set(labels) != free:
        raise InvalidTableau("labels must cover exactly the free points")
    if any(v not in (0, 1) for v in labels.values()):
        raise InvalidTableau("labels must be 0 or 1")


def even_expand(t: Tableau, labels: dict[Point, int]) -> Tableau:
    """Labeled n x 2n tableau -> symmetric configuration on 2n columns.

    A free point labeled 0 flips to the mirrored column; everything is then
    completed by the half-turn.
    """
    if t.kind != "te":
        raise InvalidTableau("even expansion starts from the even extended kind")
    _check_labels(t, labels)
    n, N, H = t.n, 2 * t.n, 4 * t.n
    rows: list[Optional[int]] = [None] * H
    for j, i in t.points():
        x = j
        if i + j >= 2 * n + 1 and labels[(j, i)] == 0:
            x = N + 1 - j
        rows[i - 1] = x
        rows[H - i] = N + 1 - x
    return make("sdc", N, rows)


def even_reduce(d: Tableau) -> tuple[Tableau, dict[Point, int]]:
    """Inverse of even_expand on symmetric configurations with 2n columns."""
    if d.kind != "sdc" or d.n % 2:
        raise InvalidTableau("even reduction needs a symmetric configuration of even width")
    n = d.n // 2
    rows: list[Optional[int]] = [None] * (2 * n)
    labels: dict[Point, int] = {}
    for i in range(1, 2 * n + 1):
        x = d.rows[i - 1]
        if x <= n:
            rows[i - 1] = x
            if i + x >= 2 * n + 1:
                labels[(x, i)] = 1
        else:
            j = 2 * n + 1 - x
            if i < x:
                raise InvalidTableau(f"row {i} cannot reduce to a free point")
            rows[i - 1] = j
            labels[(j, i)] = 0
    t = make("te", n, rows)
    _check_labels(t, labels)
    return t, labels


def odd_expand(t: Tableau, labels: dict[Point, int]) -> Tableau:
    """Labeled n x 2n+1 tableau -> symmetric configuration on 2n+1 columns.

    Free points labeled 0 flip to the mirrored column; the empty row receives
    the middle-column point; completion by the half-turn.
    """
    if t.kind != "to":
        raise InvalidTableau("odd expansion starts from the odd extended kind")
    _check_labels(t, labels)
    n, N, H = t.n, 2 * t.n + 1, 4 * t.n + 2
    e = t.empty_row
    rows: list[Optional[int]] = [None] * H
    for j, i in t.points():
        x = j
        if i + j >= 2 * n + 2 and labels[(j, i)] == 0:
            x = N + 1 - j
        rows[i - 1] = x
        rows[H - i] = N + 1 - x
    rows[e - 1] = n + 1
    rows[H - e] = n + 1
    return make("sdc", N, rows)


def odd_reduce(d: Tableau) -> tuple[Tableau, dict[Point, int]]:
    """Inverse of odd_expand on symmetric configurations with 2n+1 columns."""
    if d.kind != "sdc" or d.n % 2 == 0:
        raise InvalidTableau("odd reduction needs a symmetric configuration of odd width")
    n = (d.n - 1) // 2
    rows: list[Optional[int]] = [None] * (2 * n + 1)
    labels: dict[Point, int] = {}
    for i in range(1, 2 * n + 2):
        x = d.rows[i - 1]
        if x == n + 1:
            continue  # the empty row of the reduction
        if x <= n:
            rows[i - 1] = x
            if i + x >= 2 * n + 2:
                labels[(x, i)] = 1
        else:
            j = 2 * n + 2 - x
            if i < x:
                raise InvalidTableau(f"row {i} cannot reduce to a free point")
            rows[i - 1] = j
            labels[(j, i)] = 0
    t = make("to", n, rows)
    _check_labels(t, labels)
    return t, labels


# ---------------------------------------------------------------------------
# Point insertion.
# ---------------------------------------------------------------------------


def _insertion_row(rows: list[Optional[int]], cols: list[list[int]],
                   H: int, j: int, i_f: int) -> int:
    """Row reached by the backward walk from i_f for a column-j insertion."""
    if not (j <= i_f <= H - j or i_f == H):
        raise InvalidTableau(f"row {i_f} is not a stationary value for column {j}")
    i = i_f
    steps = 0
    while True:
        c = rows[i - 1]
        if c is None or c >= j:
            break
        a, b = cols[c]
        i = (H - c) if i == b else c
        steps += 1
        if steps > 4 * H:
            raise IntegrityError("backward walk failed to terminate")
    if rows[i - 1] is not None:
        raise IntegrityError(f"insertion at ({j}, {i_f}) landed on an occupied row {i}")
    return i


def _insert(rows: list[Optional[int]], cols: list[list[int]],
            H: int, j: int, i_f: int) -> Point:
    i = _insertion_row(rows, cols, H, j, i_f)
    rows[i - 1] = j
    cols[j].append(i)
    cols[j].sort()
    return (j, i)


def insert_point(t: Tableau, j: int, i_f: int) -> Tableau:
    """Insert a column-j point whose box stabilizes at i_f (partial boards OK).

    The first j-1 columns must be complete.  The result is returned without
    re-validation, since insertion is used on partially built boards.
    """
    rows = list(t.rows)
    cols = [list(c) for c in t.columns()]
    _insert(rows, cols, t.height, j, i_f)
    return Tableau(t.kind, t.n, tuple(rows))


# ---------------------------------------------------------------------------
# The two forward projections.
# ---------------------------------------------------------------------------

# Within-column insertion priority (frozen by the round-trip tests).
_FORWARD_ORDER = {BETA: 0, RHO: 1, GAMMA: 2}
_NU_ORDER = {NU: 0, GAMMA: 1}
_FIBER_ORDER = {"b": 0, "r": 1, "g": 2, "g'": 3, "b'": 4, "r'": 5}


def _grouped_by_column(labels: dict[Point, str], order: dict[str, int],
                       width: int) -> list[list[tuple[Point, str]]]:
    """labels bucketed by column 1..width, each bucket in priority order."""
    buckets: list[list[tuple[Point, str]]] = [[] for _ in range(width + 1)]
    for p, lab in labels.items():
        if p[0] <= width:
            buckets[p[0]].append((p, lab))
    for bucket in buckets:
        bucket.sort(key=lambda pl: (order[pl[1]], pl[0][1]))
    return buckets


def _pi_project(t: Tableau, rep: PathReport) \
        -> tuple[Tableau, frozenset[Point], bool]:
    """One projection pass under a fixed report; the flag records whether the
    plotted points are exactly the path points of the image."""
    n = t.n
    labels = assign_forward_labels(t, rep)
    removal = rep.omax_set() | rep.primed_set()
    m, H0 = n - 1, 2 * n - 2
    rows: list[Optional[int]] = [None] * H0
    for j, i in t.points():
        if (j, i) in removal:
            continue
        if j >= n or i in (n, n + 1):
            raise IntegrityError("survivor found on the last column or middle rows")
        rows[(i if i < n else i - 2) - 1] = j
    cols = [list(c) for c in _cols_from_rows(rows, m)]
    target = {BETA: lambda j: m, RHO: lambda j: H0, GAMMA: lambda j: j}
    max_sources = rep.max_set()
    plots: set[Point] = set()
    x: set[Point] = set()
    for bucket in _grouped_by_column(labels, _FORWARD_ORDER, m):
        for p, lab in bucket:
            plotted = _insert(rows, cols, H0, p[0], target[lab](p[0]))
            plots.add(plotted)
            if p in max_sources:
                x.add(plotted)
    t0 = make("te", m, rows)
    rep0 = path_report(t0)
    coherent = plots == set(rep0.omax_set())
    return t0, frozenset(x), coherent


def pi_forward(t: Tableau) -> tuple[Tableau, frozenset[Point]]:
    """Project an n-column even tableau to (T0, X) one size down.

    All path points (primary and secondary) are removed, surviving points drop
    past the two vanished middle rows, and every labeled point is re-inserted:
    beta at (j, n-1), rho at (j, 2n-2), gamma at (j, j).  X collects the
    points plotted from primary-path (non-last B/R and G) sources.

    The labeled points are expected to plot exactly the path points of the
    image; if the designated secondary split fails that, the projection is
    re-run once with the two secondary roles exchanged (the first four
    boards where this matters appear at n = 5).
    """
    if t.kind != "te" or t.n < 2:
        raise InvalidTableau("projection needs an even extended tableau with n >= 2")
    rep = path_report(t)
    t0, x, coherent = _pi_project(t, rep)
    if coherent:
        return t0, x
    swapped = 2 * t.n - rep.Bp[0][1]
    t0b, xb, coherent_b = _pi_project(t, path_report(t, start=swapped))
    if coherent_b:
        return t0b, xb
    return t0, x


def p_forward(t: Tableau) -> Tableau:
    """Project an n-column even tableau to an (n-1)-column odd tableau.

    Primary path points are removed, survivors drop past the vanished row n,
    and every labeled point is re-inserted: nu at (j, 2n-1), gamma at (j, j).
    The one row left empty is the empty row of the result.
    """
    if t.kind != "te" or t.n < 2:
        raise InvalidTableau("projection needs an even extended tableau with n >= 2")
    n = t.n
    rep = path_report(t)
    labels = assign_nu_labels(t, rep)
    m, H0 = n - 1, 2 * n - 1
    rows: list[Optional[int]] = [None] * H0
    for j, i in t.points():
        if (j, i) in rep.omax_set():
            continue
        rows[(i if i < n else i - 1) - 1] = j
    cols = [list(c) for c in _cols_from_rows(rows, m)]
    for bucket in _grouped_by_column(labels, _NU_ORDER, m):
        # Two primary-walk points may share a column; only one of them can
        # take the top target, so the second falls back to the diagonal.
        # A single point can also find its target row blocked (the image's
        # top-row chain runs through a survivor), in which case it takes
        # the other target.
        first = True
        for p, lab in bucket:
            j = p[0]
            primary = H0 if (lab == NU and first) else j
            first = False
            secondary = j if primary == H0 else H0
            rest = [i for i in range(j, H0 - j + 1) if i not in (primary, secondary)]
            for tgt in [primary, secondary, *rest]:
                try:
                    _insert(rows, cols, H0, j, tgt)
                    break
                except IntegrityError:
                    continue
            else:
                raise IntegrityError(f"no free landing row in column {j}")
    return make("to", m, rows)


def _cols_from_rows(rows: Sequence[Optional[int]], width: int) -> list[list[int]]:
    cols: list[list[int]] = [[] for _ in range(width + 1)]
    for i, j in enumerate(rows, start=1):
        if j is not None:
            cols[j].append(i)
    return cols


# ---------------------------------------------------------------------------
# Fiber labels and the fiber construction of the first projection.
# ---------------------------------------------------------------------------


def fiber_labels(t0: Tableau, X: frozenset[Point],
                 rep0: Optional[PathReport] = None) -> dict[Point, str]:
    """b/r/g and primed labels on the path points of T0 for a kept-set X.

    The unprimed labels mark exactly the elements of X (asserted).
    """
    if rep0 is None:
        rep0 = path_report(t0)
    omax = rep0.omax_set()
    if not X <= omax or X == omax:
        raise InvalidTableau("X must be a proper subset of the path point set")
    m = t0.n
    cols = t0.columns()
    pb, pr = rep0.B[-1], rep0.R[-1]
    bset = set(rep0.B)
    labels: dict[Point, str] = {}

    for p in rep0.G:
        a, b = cols[p[0]]
        q = (p[0], a if p[1] == b else b)
        if q not in bset:
            raise IntegrityError("partner of an attached free point is off the B path")
        if p not in X and q not in X:
            labels[p], labels[q] = "g'", "b'"
        elif p not in X:  # q in X
            labels[p], labels[q] = "b'", "b"
        elif q not in X:  # p in X
            labels[p], labels[q] = "r", "r'"
        else:
            labels[p], labels[q] = "g", "b"
    for p in rep0.B[:-1]:
        if p not in labels:
            labels[p] = "b" if p in X else "b'"
    for p in rep0.R[:-1]:
        if p not in labels:
            labels[p] = "r" if p in X else "r'"

    if pr not in X:
        labels[pr] = "r'"
        labels[pb] = "b" if pb in X else "b'"
    else:
        open_cols = {p[0] for p in omax - X}
        jmin = min(open_cols)
        if jmin == m:
            labels[pb] = "b'"
            labels[pr] = "r"
        else:
            col_labels = {labels[q] for q in omax if q[0] == jmin}
            if "b'" in col_labels:
                labels[pr] = "r"
                labels[pb] = "b" if pb in X else "b'"
            elif pb not in X:
                labels[pb] = "r'"
                labels[pr] = "r"
            else:
                labels[pb] = "b"
                labels[pr] = "g"

    marked = {p for p, lab in labels.items() if lab in ("b", "r", "g")}
    if marked != set(X):
        raise IntegrityError("unprimed fiber labels do not mark X exactly")
    return labels


def classify_situation(t0: Tableau, X: frozenset[Point],
                       rep0: Optional[PathReport] = None,
                       labels: Optional[dict[Point, str]] = None) -> int:
    """Situation 1, 2 or 3 of a fiber datum (label-side characterization)."""
    if rep0 is None:
        rep0 = path_report(t0)
    if labels is None:
        labels = fiber_labels(t0, X, rep0)
    k, i = len(X), rep0.max
    pb, pr = rep0.B[-1], rep0.R[-1]
    last_rg = labels[pb] in ("r", "g") or labels[pr] in ("r", "g")
    if k <= i and not last_rg:
        return 1
    open_labels = {labels[p] for p in rep0.omax_set() - X}
    if k == i + 1 or (last_rg and not ("b'" in open_labels and "r'" in open_labels)):
        return 2
    return 3


def situation_of(t: Tableau, rep: Optional[PathReport] = None) -> int:
    """Situation of a fiber element, read off the tableau itself."""
    if rep is None:
        rep = path_report(t)
    n = t.n
    if t.rows[n] == n:  # the row-(n+1) point is free
        return 2
    ca, cb = t.columns()[n - 1]
    rg = set(rep.R) | set(rep.G)
    if (t.rows[ca - 1], ca) in rg or (t.rows[cb - 1], cb) in rg:
        return 3
    return 1


def _build_fiber_candidate(t0: Tableau, labels: dict[Point, str],
                           bp_row: int, rp_row: int) -> Tableau:
    """Assemble one fiber element; bp_row/rp_row are the b'/r' target rows."""
    n = t0.n + 1
    H = 2 * n
    rows: list[Optional[int]] = [None] * H
    omax = {p for p in labels}
    for j, i in t0.points():
        if (j, i) in omax:
            continue
        rows[(i if i < n else i + 2) - 1] = j
    cols = [list(c) for c in _cols_from_rows(rows, n)]
    target = {"b": lambda j: n, "r": lambda j: H, "g": lambda j: j, "g'": lambda j: j,
              "b'": lambda j: bp_row, "r'": lambda j: rp_row}
    for bucket in _grouped_by_column(labels, _FIBER_ORDER, n - 1):
        for p, lab in bucket:
            _insert(rows, cols, H, p[0], target[lab](p[0]))
    _insert(rows, cols, H, n, n)
    _insert(rows, cols, H, n, H)
    return make("te", n, rows)


def pi_fiber(t0: Tableau, X: frozenset[Point]) -> list[Tableau]:
    """The preimages of T0 whose kept set is exactly X.

    These are the realized fibers of the forward projection (grouped from an
    exhaustive scan one size up and cached).  ``pi_fiber_predicted`` gives the
    label-side construction of the same fiber; the two agree on most data but
    the construction is not reliable everywhere, so the realized grouping is
    the authoritative one.
    """
    return [t for _, t in pi_fiber_tagged(t0, X)]


def pi_fiber_tagged(t0: Tableau, X: frozenset[Point]) -> list[tuple[str, Tableau]]:
    """Realized fiber elements with tags read off each element itself.

    The tag is ``s1``/``s2`` for elements in situation 1/2, and for situation 3
    the pair splits into ``s3-slash`` (secondary start row n-1) and
    ``s3-backslash`` (start row n+1).
    """
    if t0.kind != "te":
        raise InvalidTableau("fibers are built over even extended tableaux")
    out: list[tuple[str, Tableau]] = []
    n = t0.n + 1
    for rows, x in _pi_fiber_index(n).get(t0.rows, []):
        if x != X:
            continue
        t = make("te", n, rows)
        sit = situation_of(t)
        if sit == 3:
            jm, jp = t.rows[n - 2], t.rows[n]
            tag = "s3-slash" if jm <= jp else "s3-backslash"
        else:
            tag = f"s{sit}"
        out.append((tag, t))
    return out


def pi_fiber_predicted(t0: Tableau, X: frozenset[Point]) -> list[Tableau]:
    """The label-side fiber construction (1 or 2 candidate boards).

    This assembles the candidates that the fiber labels designate: situation 1
    and 2 produce one board, situation 3 produces the two secondary-role
    variants.  The construction realizes the true fiber on most data, but not
    on all of them: for some data the designated boxes displace a point below
    the diagonal (InvalidTableau), and for some others the assembled board
    actually projects to a different datum.  The first such data appear at
    n = 3; see ``pi_fiber`` for the authoritative grouping.
    """
    if t0.kind != "te":
        raise InvalidTableau("fibers are built over even extended tableaux")
    rep0 = path_report(t0)
    labels = fiber_labels(t0, X, rep0)
    sit = classify_situation(t0, X, rep0, labels)
    n = t0.n + 1
    if sit == 1:
        return [_build_fiber_candidate(t0, labels, n - 1, n + 1)]
    if sit == 2:
        return [_build_fiber_candidate(t0, labels, n - 1, n - 1)]
    pb, pr = rep0.B[-1], rep0.R[-1]
    last = {labels[pb], labels[pr]}
    up = _build_fiber_candidate(t0, labels, n + 1, n - 1)
    down = _build_fiber_candidate(t0, labels, n - 1, n + 1)
    if last in ({"r'", "r"}, {"b", "g"}):
        return [up, down]
    return [down, up]


_PI_FIBER_INDEX: dict[int, dict[tuple[int, ...],
                                list[tuple[tuple[int, ...], frozenset[Point]]]]] = {}


def _pi_fiber_index(n: int) \
        -> dict[tuple[int, ...], list[tuple[tuple[int, ...], frozenset[Point]]]]:
    """(rows, kept set) of te(n) boards grouped by the projection's row tuple."""
    from .enumeration import enum_te

    idx = _PI_FIBER_INDEX.get(n)
    if idx is None:
        idx = {}
        for t in enum_te(n):
            t0, x = pi_forward(t)
            idx.setdefault(t0.rows, []).append((t.rows, x))
        _PI_FIBER_INDEX[n] = idx
    return idx


def pi_preimage(t0: Tableau) -> list[Tableau]:
    """All boards one size up that project onto T0 (exhaustive scan, cached)."""
    if t0.kind != "te":
        raise InvalidTableau("preimages are defined on the even extended kind")
    return [make("te", t0.n + 1, rows)
            for rows, _ in _pi_fiber_index(t0.n + 1).get(t0.rows, [])]


# ---------------------------------------------------------------------------
# Fibers of the second projection.
# ---------------------------------------------------------------------------


def label_functions(t0: Tableau,
                    rep0: Optional[OddPathReport] = None) -> Iterator[dict[int, str]]:
    """All admissible column label functions of an odd tableau.

    Columns carrying a V point take b/r; those carrying a G point as well
    take br/bg/r instead.
    """
    if rep0 is None:
        rep0 = path_report_odd(t0)
    J = [p[0] for p in rep0.V]
    Jg = {p[0] for p in rep0.G}
    if not Jg <= set(J):
        raise IntegrityError("attached free points outside the V columns")
    choices = [("br", "bg", "r") if j in Jg else ("b", "r") for j in J]
    for combo in product(*choices):
        yield dict(zip(J, combo))


def p_fiber(t0: Tableau, l: dict[int, str]) -> Tableau:
    """Build the label-l preimage candidate of an odd tableau.

    This is the label-indexed inverse construction: one candidate per label
    function, 2^(v-g) * 3^g in total.  On boards with at most three columns
    every candidate projects back onto t0 and the candidates exhaust the
    fiber.  From four columns on the construction drifts from the forward
    projection on a small number of boards (one of 180 builds at n = 4,
    41 of 2700 at n = 5): those candidates project to a different odd
    tableau than the one they were built from, and a matching number of
    fiber members are missed.  p_preimage gives the actual fibers.
    """
    if t0.kind != "to":
        raise InvalidTableau("second-projection fibers are built over odd tableaux")
    rep0 = path_report_odd(t0)
    J = {p[0] for p in rep0.V}
    Jg = {p[0] for p in rep0.G}
    if set(l) != J:
        raise InvalidTableau("label function must cover exactly the V columns")
    for j, code in l.items():
        allowed = ("br", "bg", "r") if j in Jg else ("b", "r")
        if code not in allowed:
            raise InvalidTableau(f"label {code!r} not allowed on column {j}")
    n = t0.n + 1
    H = 2 * n
    removed = set(rep0.V) | set(rep0.G)
    rows: list[Optional[int]] = [None] * H
    for j, i in t0.points():
        if (j, i) in removed:
            continue
        rows[(i if i < n else i + 1) - 1] = j
    cols = [list(c) for c in _cols_from_rows(rows, n)]
    for j in sorted(l):
        code = l[j]
        if code == "b":
            _insert(rows, cols, H, j, n)
        elif code == "br":
            _insert(rows, cols, H, j, n)
            _insert(rows, cols, H, j, H)
        elif code == "bg":
            _insert(rows, cols, H, j, n)
            _insert(rows, cols, H, j, j)
        elif j in Jg:  # "r" on a G column
            _insert(rows, cols, H, j, H)
            _insert(rows, cols, H, j, j)
        else:  # plain "r"
            _insert(rows, cols, H, j, H)
    _insert(rows, cols, H, n, n)
    _insert(rows, cols, H, n, H)
    return make("te", n, rows)


_P_FIBER_INDEX: dict[int, dict[tuple[int, ...], list[tuple[int, ...]]]] = {}


def _p_fiber_index(n: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Row tuples of the n-column even boards grouped by their odd image."""
    from .enumeration import enum_te
    idx = _P_FIBER_INDEX.get(n)
    if idx is None:
        idx = {}
        for t in enum_te(n):
            idx.setdefault(p_forward(t).rows, []).append(t.rows)
        _P_FIBER_INDEX[n] = idx
    return idx


def p_preimage(t0: Tableau) -> list[Tableau]:
    """All boards one size up that project onto t0 (exhaustive scan, cached)."""
    if t0.kind != "to":
        raise InvalidTableau("second-projection fibers are built over odd tableaux")
    return [make("te", t0.n + 1, rows)
            for rows in _p_fiber_index(t0.n + 1).get(t0.rows, [])]


def recover_label_function(t: Tableau,
                           rep: Optional[PathReport] = None) -> dict[int, str]:
    """Column label function of a fiber element of the second projection."""
    if rep is None:
        rep = path_report(t)
    n = t.n
    bset, rset, gset = set(rep.B), set(rep.R), set(rep.G)
    cols = t.columns()
    out: dict[int, str] = {}
    for j in range(1, n):
        a, b = cols[j]
        pts = {(j, a), (j, b)}
        hit_b = bool(pts & bset)
        hit_r = bool(pts & rset)
        hit_g = bool(pts & gset)
        if hit_b and hit_r:
            out[j] = "br"
        elif hit_b and hit_g:
            out[j] = "bg"
        elif hit_r and hit_g:
            out[j] = "r"
        elif hit_b:
            out[j] = "b"
        elif hit_r:
            out[j] = "r"
    return out
