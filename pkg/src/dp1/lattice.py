"""Exact arithmetic in the Picard lattice Z^{1,8} of a degree-1 del Pezzo surface.

Divisor classes are integer 9-tuples in the ordered basis (h, l1, ..., l8)
with the diagonal intersection form h.h = +1, li.li = -1.  Everything here is
integer or Fraction arithmetic; no floats enter any decision.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

RANK = 9

ENUM_DEPTH_ENV = "DP1_MAX_ENUM_DEPTH"


class LatticeError(ValueError):
    """Raised when a lattice-level precondition is violated."""


class EnumerationDepthError(LatticeError):
    """Raised when an enumeration exceeds the DP1_MAX_ENUM_DEPTH cap."""


@dataclass(frozen=True)
class PicClass:
    """A divisor class, stored as plain coordinates (c0; c1..c8)."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != RANK or not all(isinstance(c, int) for c in self.coeffs):
            raise LatticeError(f"expected {RANK} integer coordinates, got {self.coeffs!r}")

    def dot(self, other: "PicClass") -> int:
        return dot_tuples(self.coeffs, other.coeffs)

    @property
    def square(self) -> int:
        return self.dot(self)

    @property
    def degree(self) -> int:
        return -self.dot(K)

    def __add__(self, other: "PicClass") -> "PicClass":
        return PicClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "PicClass") -> "PicClass":
        return PicClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "PicClass":
        return PicClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "PicClass":
        return PicClass(tuple(n * a for a in self.coeffs))

    def __str__(self) -> str:
        return "(" + "; ".join([str(self.coeffs[0]), ",".join(map(str, self.coeffs[1:]))]) + ")"


def pic(*coeffs: int) -> PicClass:
    return PicClass(tuple(coeffs))


def dot_tuples(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    # Raw-tuple inner product for hot loops.
    s = a[0] * b[0]
    for i in range(1, RANK):
        s -= a[i] * b[i]
    return s


H = pic(1, 0, 0, 0, 0, 0, 0, 0, 0)
L = tuple(PicClass(tuple(1 if j == i else 0 for j in range(RANK))) for i in range(1, RANK))
K = pic(-3, 1, 1, 1, 1, 1, 1, 1, 1)
MINUS_K = -K
MINUS_2K = 2 * MINUS_K
ZERO = pic(0, 0, 0, 0, 0, 0, 0, 0, 0)


def intersect(a: PicClass, b: PicClass) -> int:
    """Intersection number a.b for the diagonal form on Z^{1,8}."""
    return a.dot(b)


def form_row(v: PicClass) -> tuple[int, ...]:
    """Plain-dot row representing intersection with v: plain(form_row(v), x) = v.x."""
    return (v.coeffs[0],) + tuple(-c for c in v.coeffs[1:])


def degree(a: PicClass) -> int:
    """Canonical degree -a.K."""
    return -a.dot(K)


def reflect(a: PicClass, e: PicClass) -> PicClass:
    """Reflection a + (a.e)e in a root e; requires e.e = -2."""
    if e.square != -2:
        raise LatticeError(f"reflection class must have square -2, got {e.square}")
    n = a.dot(e)
    return PicClass(tuple(x + n * y for x, y in zip(a.coeffs, e.coeffs)))


@dataclass(frozen=True)
class Sublattice:
    """A negative-definite sublattice of K-perp given by an ordered basis."""

    basis: tuple[PicClass, ...]
    gram: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: tuple[PicClass, ...] | list[PicClass]) -> "Sublattice":
        basis = tuple(vectors)
        for b in basis:
            if b.dot(K) != 0:
                raise LatticeError(f"basis vector {b} is not orthogonal to K")
        gram = tuple(tuple(a.dot(b) for b in basis) for a in basis)
        if basis:
            # Positive-definiteness of -gram doubles as an independence check.
            _ldl([[-x for x in row] for row in gram])
        return cls(basis, gram)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def from_coordinates(self, coords: tuple[int, ...]) -> PicClass:
        total = [0] * RANK
        for n, b in zip(coords, self.basis):
            for i, c in enumerate(b.coeffs):
                total[i] += n * c
        return PicClass(tuple(total))

    def coordinates_of(self, x: PicClass) -> tuple[int, ...]:
        """Integer coordinates of x in this basis; raises if x is outside the span."""
        if not self.basis:
            if x == ZERO:
                return ()
            raise LatticeError(f"{x} is not in the zero lattice")
        rhs = [Fraction(b.dot(x)) for b in self.basis]
        sol = _solve_fraction_system([[Fraction(v) for v in row] for row in self.gram], rhs)
        coords = []
        for v in sol:
            if v.denominator != 1:
                raise LatticeError(f"{x} has non-integral coordinates in the given basis")
            coords.append(int(v))
        if self.from_coordinates(tuple(coords)) != x:
            raise LatticeError(f"{x} is not in the span of the given basis")
        return tuple(coords)


def _ldl(q: list[list[Fraction | int]]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Exact LDL data of a positive-definite matrix: Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.

    Raises LatticeError on any non-positive pivot (matrix not positive definite,
    equivalently the original gram not negative definite or basis dependent).
    """
    k = len(q)
    a = [[Fraction(q[i][j]) for j in range(k)] for i in range(k)]
    d: list[Fraction] = []
    u = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        piv = a[i][i]
        if piv <= 0:
            raise LatticeError("matrix is not positive definite")
        d.append(piv)
        for j in range(i + 1, k):
            u[i][j] = a[i][j] / piv
        for r in range(i + 1, k):
            for c in range(r, k):
                a[r][c] -= a[i][r] * a[i][c] / piv
    return d, u


def _solve_fraction_system(m: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    k = len(m)
    a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col] != 0), None)
        if piv is None:
            raise LatticeError("singular coordinate system")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(k):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][k] for i in range(k)]


def _floor(f: Fraction) -> int:
    return f.numerator // f.denominator


def _ceil(f: Fraction) -> int:
    return -((-f.numerator) // f.denominator)


def enumerate_coordinates(lat: Sublattice, norm: int) -> list[tuple[int, ...]]:
    """All integer coordinate tuples x with (sum x_i b_i)^2 = norm, in lex order.

    Bounded recursive search on the negated (positive-definite) gram matrix with
    completed-square bounds; exact rationals throughout.
    """
    if norm >= 0:
        raise LatticeError(f"enumeration requires a negative norm, got {norm}")
    k = lat.rank
    if k == 0:
        return []
    cap = os.environ.get(ENUM_DEPTH_ENV)
    if cap is not None and k > int(cap):
        raise EnumerationDepthError(f"rank {k} exceeds {ENUM_DEPTH_ENV}={cap}")
    d, u = _ldl([[-x for x in row] for row in lat.gram])
    target = Fraction(-norm)
    found: list[tuple[int, ...]] = []
    x = [0] * k

    def descend(i: int, budget: Fraction) -> None:
        center = sum((u[i][j] * x[j] for j in range(i + 1, k)), Fraction(0))
        # |x_i + center| <= sqrt(budget/d_i) < isqrt(floor(budget/d_i)) + 1.
        radius = isqrt(_floor(budget / d[i])) + 1
        for xi in range(_ceil(-center - radius), _floor(-center + radius) + 1):
            term = d[i] * (xi + center) ** 2
            if term > budget:
                continue
            x[i] = xi
            if i == 0:
                if term == budget:
                    found.append(tuple(x))
            else:
                descend(i - 1, budget - term)
        x[i] = 0

    descend(k - 1, target)
    return sorted(found)


def enumerate_vectors(lat: Sublattice, norm: int) -> list[PicClass]:
    """All v in the integer span of lat.basis with v.v = norm, in ambient coordinates.

    Deterministic: ordered lexicographically by basis coordinates.
    """
    return [lat.from_coordinates(c) for c in enumerate_coordinates(lat, norm)]


def integer_kernel(rows: list[tuple[int, ...]], width: int) -> list[tuple[int, ...]]:
    """Basis of the saturated integer kernel {x in Z^width : row.x' = 0 for all rows}.

    Here row.x' is the plain dot product of coefficient rows with x.  Row
    reduction of [A^T | I] over Z; the rows whose A^T-part vanishes carry a
    basis of the kernel lattice.
    """
    m = len(rows)
    work = [[rows[j][i] for j in range(m)] + [1 if c == i else 0 for c in range(width)]
            for i in range(width)]
    r = 0
    for col in range(m):
        while True:
            nz = [i for i in range(r, width) if work[i][col] != 0]
            if not nz:
                break
            if len(nz) == 1:
                work[r], work[nz[0]] = work[nz[0]], work[r]
                r += 1
                break
            i0 = min(nz, key=lambda i: (abs(work[i][col]), i))
            for i in nz:
                if i != i0:
                    q = work[i][col] // work[i0][col]
                    work[i] = [a - q * b for a, b in zip(work[i], work[i0])]
    return [tuple(row[m:]) for row in work[r:]]
