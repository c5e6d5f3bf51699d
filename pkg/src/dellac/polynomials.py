"""Exact integer polynomials, the recursive families, and the generating series.

Polynomials are dense coefficient lists in ascending degree over Python ints
(exact arithmetic everywhere; rational evaluation uses fractions.Fraction).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from math import comb
from typing import Iterable, Sequence, Union

from .grid import IntegrityError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial with int (or Fraction) coefficients."""

    coeffs: tuple[Scalar, ...]

    @staticmethod
    def of(cs: Iterable[Scalar]) -> "Poly":
        cs = list(cs)
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def const(c: Scalar) -> "Poly":
        return Poly.of([c])

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = _as_poly(other)
        return Poly.of(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "Poly | Scalar") -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in enumerate(other.coeffs):
                out[i + k] += a * b
        return Poly.of(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        out = ONE
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c: Scalar) -> "Poly":
        return Poly.of(c * a for a in self.coeffs)

    def shift_compose(self, a: Scalar) -> "Poly":
        """p(x + a), by Horner expansion."""
        out = Poly(())
        xa = Poly((a, 1))
        for c in reversed(self.coeffs):
            out = out * xa + c
        return out

    def eval_int(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def eval_rational(self, v: Scalar) -> Fraction:
        acc = Fraction(0)
        v = Fraction(v)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def divexact(self, k: int) -> "Poly":
        """Divide every coefficient by k, asserting exact divisibility."""
        for c in self.coeffs:
            if c % k:
                raise IntegrityError(f"coefficient {c} not divisible by {k}")
        return Poly(tuple(c // k for c in self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{d}" if c != 1 else f"x^{d}")
        return " + ".join(reversed(parts))


def _as_poly(v: "Poly | Scalar") -> Poly:
    return v if isinstance(v, Poly) else Poly.of([v])


ZERO = Poly(())
ONE = Poly((1,))
X = Poly((0, 1))


# ---------------------------------------------------------------------------
# The recursive polynomial families.
# ---------------------------------------------------------------------------

def D_poly(n: int) -> Poly:
    """D_0 = 1, D_{m+1}(x) = (x+1)(x+2) D_m(x+2) - x(x+1) D_m(x)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    d = ONE
    for _ in range(n):
        d = Poly((2, 3, 1)) * d.shift_compose(2) - Poly((0, 1, 1)) * d
    return d


def P_poly(n: int) -> Poly:
    """P_1 = 1, P_{m+1}(x) = (x+2)(x+1)/2 P_m(x+2) - x(x-1)/2 P_m(x).

    Integrality of the division by 2 is asserted at every step; these satisfy
    D_n(x) = 2^n (x+1) P_n(x+1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = ONE
    for _ in range(n - 1):
        p = (Poly((2, 3, 1)) * p.shift_compose(2) - Poly((0, -1, 1)) * p).divexact(2)
    return p


def c_triangle(nmax: int) -> list[list[int]]:
    """Rows 1..nmax of the coefficient triangle c_{n,k} (k = 0..n-1).

    c_{1,0} = 1;
    c_{n,0}     = sum_{i=0}^{n-2} 2^i c_{n-1,i};
    c_{n,k}     = (k+1) c_{n-1,k-1}
                  + sum_{i=k}^{n-2} 2^{i-k} (C(i+1,k) + 2 C(i+1,k-1)) c_{n-1,i};
    c_{n,n-1}   = n c_{n-1,n-2}.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    rows = [[1]]
    for n in range(2, nmax + 1):
        prev = rows[-1]
        row = []
        for k in range(n):
            if k == 0:
                v = sum((1 << i) * prev[i] for i in range(n - 1))
            elif k == n - 1:
                v = n * prev[n - 2]
            else:
                v = (k + 1) * prev[k - 1]
                v += sum((1 << (i - k)) * (comb(i + 1, k) + 2 * comb(i + 1, k - 1)) * prev[i]
                         for i in range(k, n - 1))
            row.append(v)
        rows.append(row)
    return rows


def l_seq(n: int) -> int:
    """D_n(0) / 2^n (= P_n(1) for n >= 1)."""
    v = D_poly(n).eval_int(0)
    q, r = divmod(v, 1 << n)
    if r:
        raise IntegrityError(f"D_{n}(0) not divisible by 2^{n}")
    return q


def r_seq(n: int) -> int:
    """D_n(1) / 2^n (= 2 P_n(2) for n >= 1)."""
    v = D_poly(n).eval_int(1)
    q, r = divmod(v, 1 << n)
    if r:
        raise IntegrityError(f"D_{n}(1) not divisible by 2^{n}")
    return q


def L_seq(n: int) -> int:
    """Value of D_n at -1/2 (an integer; the 2^{-n} normalization is built in)."""
    v = D_poly(n).eval_rational(Fraction(-1, 2))
    if v.denominator != 1:
        raise IntegrityError(f"D_{n}(-1/2) is not an integer: {v}")
    return int(v)


def R_seq(n: int) -> int:
    """Value of D_n at 1/2 (an integer)."""
    v = D_poly(n).eval_rational(Fraction(1, 2))
    if v.denominator != 1:
        raise IntegrityError(f"D_{n}(1/2) is not an integer: {v}")
    return int(v)


# ---------------------------------------------------------------------------
# Continued-fraction expansion of the generating series 1 + sum x P_n(x) t^n.
# ---------------------------------------------------------------------------

def cf_coefficient(d: int) -> Poly:
    """d-th coefficient of the S-fraction: m(x+2m-2) at d=2m-1, m(x+2m-1) at d=2m."""
    if d % 2:
        m = (d + 1) // 2
        return Poly((2 * m - 2, 1)).scale(m)
    m = d // 2
    return Poly((2 * m - 1, 1)).scale(m)


def _series_mul(u: Sequence[Poly], w: Sequence[Poly], order: int) -> list[Poly]:
    out = [ZERO] * (order + 1)
    for i, a in enumerate(u):
        if i > order or not a:
            continue
        for k, b in enumerate(w):
            if i + k > order:
                break
            if b:
                out[i + k] = out[i + k] + a * b
    return out


def _cf_expand(depth: int, order: int) -> list[Poly]:
    """Truncated series of the depth-limited S-fraction, innermost level first."""
    g = [ONE] + [ZERO] * order
    for d in range(depth, 0, -1):
        a = cf_coefficient(d)
        # u = a_d * t * g, then g = 1 / (1 - u) via iterated 1 + u*g
        u = [ZERO] + [a * c for c in g[:order]]
        g = [ONE] + [ZERO] * order
        for _ in range(order):
            g = _series_mul(u, g, order)
            g[0] = g[0] + ONE
    return g


def cf_series(order: int) -> list[Poly]:
    """First ``order+1`` coefficients (in t) of the S-fraction expansion.

    Expanded bottom-up at depth 2*order+2; the result is asserted stable
    against one extra level before returning.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    depth = 2 * order + 2
    a = _cf_expand(depth, order)
    b = _cf_expand(depth + 1, order)
    if a != b:
        raise IntegrityError("continued-fraction expansion not stable at the chosen depth")
    return a


def P_via_cf(n: int) -> Poly:
    """Recover P_n from the series: coefficient of t^n equals x * P_n(x)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    term = cf_series(n)[n]
    if term.coeffs and term.coeffs[0] != 0:
        raise IntegrityError("series coefficient has a constant term, cannot divide by x")
    return Poly.of(term.coeffs[1:])


# ---------------------------------------------------------------------------
# Surjective pistols.
# ---------------------------------------------------------------------------

def pistol_stats(f: Sequence[int]) -> tuple[int, int]:
    """(max, fd) of a surjective pistol on {1..2n}.

    max counts positions j <= 2n-2 with f(j) = 2n; fd counts fixed points
    j <= 2n-2 whose value j already occurred strictly earlier.
    """
    M = len(f)
    mx = sum(1 for j in range(1, M - 1) if f[j - 1] == M)
    fd = 0
    for j in range(1, M - 1):
        if f[j - 1] == j and any(f[k] == j for k in range(j - 1)):
            fd += 1
    return mx, fd


def P_via_pistols(n: int) -> Poly:
    """Sum of 2^{n-1-max-fd} x^{max} over all surjective pistols of size n."""
    from .enumeration import iter_sp

    coeffs: list[int] = []
    for f in iter_sp(n):
        mx, fd = pistol_stats(f)
        e = n - 1 - mx - fd
        if e < 0:
            raise IntegrityError(f"negative weight exponent for pistol {f}")
        while len(coeffs) <= mx:
            coeffs.append(0)
        coeffs[mx] += 1 << e
    return Poly.of(coeffs)
