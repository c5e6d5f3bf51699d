"""Exhaustive enumerators for every configuration family, in lexicographic order.

All enumerators yield lazily in ascending lexicographic order of the row
sequence (bottom row first; the empty row of the odd kind sorts before
column 1).  ``limit`` is a resource cap: producing more than ``limit`` items
raises :class:`EnumerationLimit` instead of silently truncating.
"""
from __future__ import annotations

from itertools import product
from typing import Iterator, Optional

from .grid import Point, Tableau, free_points


class EnumerationLimit(RuntimeError):
    """Raised when an enumeration exceeds its resource cap."""

    def __init__(self, limit: int):
        super().__init__(f"enumeration exceeded the cap of {limit} items")
        self.limit = limit


def _capped(it, limit: Optional[int]):
    if limit is None:
        yield from it
        return
    count = 0
    for item in it:
        count += 1
        if count > limit:
            raise EnumerationLimit(limit)
        yield item


def iter_dc_rows(N: int) -> Iterator[tuple[int, ...]]:
    """Row tuples of all N-column Dellac configurations (j <= i <= N+j)."""
    H = 2 * N
    rows = [0] * H
    cap = [2] * (N + 1)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i > H:
            yield tuple(rows)
            return
        lo = max(1, i - N)
        if lo > 1 and cap[lo - 1]:
            return  # a column below the window can never be completed
        for j in range(lo, min(N, i) + 1):
            if cap[j]:
                cap[j] -= 1
                rows[i - 1] = j
                yield from rec(i + 1)
                cap[j] += 1

    return rec(1)


def iter_sdc_rows(N: int) -> Iterator[tuple[int, ...]]:
    """Row tuples of the symmetric Dellac configurations, by mirrored placement.

    Rows i and 2N+1-i are assigned together (columns c and N+1-c), so only the
    bottom half is searched; ascending choice of c yields full-tuple
    lexicographic order because the top half is a function of the bottom half.
    """
    H = 2 * N
    rows = [0] * H
    cnt = [0] * (N + 1)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i > N:
            yield tuple(rows)
            return
        for c in range(1, i + 1):
            m = N + 1 - c
            if c == m:
                if cnt[c] + 2 > 2:
                    continue
                cnt[c] += 2
            else:
                if cnt[c] + 1 > 2 or cnt[m] + 1 > 2:
                    continue
                cnt[c] += 1
                cnt[m] += 1
            rows[i - 1] = c
            rows[H - i] = m
            yield from rec(i + 1)
            if c == m:
                cnt[c] -= 2
            else:
                cnt[c] -= 1
                cnt[m] -= 1

    return rec(1)


def iter_te_rows(n: int) -> Iterator[tuple[int, ...]]:
    """Row tuples of the even extended family (n x 2n, j <= i)."""
    H = 2 * n
    rows = [0] * H
    cap = [2] * (n + 1)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i > H:
            yield tuple(rows)
            return
        for j in range(1, min(i, n) + 1):
            if cap[j]:
                cap[j] -= 1
                rows[i - 1] = j
                yield from rec(i + 1)
                cap[j] += 1

    return rec(1)


def iter_to_rows(n: int) -> Iterator[tuple[Optional[int], ...]]:
    """Row tuples of the odd extended family (n x 2n+1, one empty upper row)."""
    H = 2 * n + 1
    rows: list[Optional[int]] = [0] * H
    cap = [2] * (n + 1)

    def rec(i: int, empty_used: bool) -> Iterator[tuple[Optional[int], ...]]:
        if i > H:
            if empty_used:
                yield tuple(rows)
            return
        if i >= n + 1 and not empty_used:
            rows[i - 1] = None
            yield from rec(i + 1, True)
        bound = min(n, i - 1 if empty_used else i)
        for j in range(1, bound + 1):
            if cap[j]:
                cap[j] -= 1
                rows[i - 1] = j
                yield from rec(i + 1, empty_used)
                cap[j] += 1

    return rec(1, False)


def enum_dc(N: int, limit: Optional[int] = None) -> Iterator[Tableau]:
    return (Tableau("dc", N, r) for r in _capped(iter_dc_rows(N), limit))


def enum_sdc(N: int, limit: Optional[int] = None) -> Iterator[Tableau]:
    return (Tableau("sdc", N, r) for r in _capped(iter_sdc_rows(N), limit))


def enum_te(n: int, limit: Optional[int] = None) -> Iterator[Tableau]:
    return (Tableau("te", n, r) for r in _capped(iter_te_rows(n), limit))


def enum_to(n: int, limit: Optional[int] = None) -> Iterator[Tableau]:
    return (Tableau("to", n, r) for r in _capped(iter_to_rows(n), limit))


def enum_labeled(t: Tableau, limit: Optional[int] = None) -> Iterator[dict[Point, int]]:
    """All 0/1 labelings of the free points (free points in ascending row order,
    label vectors in lexicographic order starting from all zeros)."""
    pts = free_points(t)
    gen = (dict(zip(pts, bits)) for bits in product((0, 1), repeat=len(pts)))
    return _capped(gen, limit)


def iter_sp(n: int) -> Iterator[tuple[int, ...]]:
    """Surjections f from {1..2n} onto the even values {2,4,...,2n} with f(j) >= j.

    A value 2k can only occur at positions <= 2k, so surjectivity is enforced
    on the fly: after position 2k is assigned, value 2k must already be used.
    """
    M = 2 * n
    f = [0] * M
    used = [False] * (n + 1)

    def rec(j: int) -> Iterator[tuple[int, ...]]:
        if j > M:
            yield tuple(f)
            return
        for k in range((j + 1) // 2, n + 1):
            f[j - 1] = 2 * k
            prev = used[k]
            used[k] = True
            if j % 2 or used[j // 2]:
                yield from rec(j + 1)
            used[k] = prev

    return rec(1)


def enum_sp(n: int, limit: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    return _capped(iter_sp(n), limit)


def count(it) -> int:
    """Length of a finite iterator."""
    return sum(1 for _ in it)
