"""The Z/4-valued quadratic function on real divisor classes.

Two evaluation models:

* a blowup-model code: residues (a0, a1, ..., a_{8-2r}) in {+1, -1} mod 4
  giving the values on h and on the real exceptional classes, with value 0 on
  each imaginary pair-sum;
* a root basis of the class lattice on which the function vanishes, where the
  quadratic law closes to q(x) = x.x + 2*sum(coords) mod 4.

Both satisfy q(x+y) = q(x) + q(y) + 2(x.y) and q(n*b) = n*q(b) + (n^2-n)(b.b).
Cremona moves act on codes exactly as the corresponding reflections act on
classes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .lattice import LatticeError, PicClass, Sublattice

Move = tuple  # ("cremona", i, j, k) or ("swap", i)

# Imaginary pairs fill in from the top coordinate slots downward.
PAIRS = ((7, 8), (5, 6), (3, 4), (1, 2))


@dataclass(frozen=True)
class Code:
    """Residues (a0, a1, ..., a_{8-2r}), each +-1 mod 4 (stored as 1 or 3)."""

    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.residues)
        if n not in (9, 7, 5, 3, 1) or any(a not in (1, 3) for a in self.residues):
            raise LatticeError(f"invalid code {self.residues!r}")
        if sum(self.residues) % 4 != 1:
            raise LatticeError(f"code {self.residues!r} violates sum = 1 mod 4")

    @property
    def r(self) -> int:
        return (9 - len(self.residues)) // 2

    @property
    def n_real(self) -> int:
        return len(self.residues) - 1


# Blowup-model codes of the two connected classes that admit one.
POSITIVE_CODE = Code((1,) * 9)  # M-connected, 8 real points
NEGATIVE_CODE = Code((3,) * 7)  # M-1-connected, 6 real points + 1 imaginary pair


def check_real(code: Code, x: PicClass) -> None:
    for i, j in PAIRS[: code.r]:
        if x.coeffs[i] != x.coeffs[j]:
            raise LatticeError(f"{x} is not real for a code with {code.r} imaginary pairs")


def qhat_code(code: Code, x: PicClass) -> int:
    """Value of the quadratic function on a real class, via the code model.

    Decomposes x over the orthogonal family {h, real l_i, pair sums} and applies
    the scaling rule q(n*b) = n*q(b) + (n^2 - n)(b.b); pair sums carry q = 0.
    """
    check_real(code, x)
    c = x.coeffs
    n0 = c[0]
    val = n0 * code.residues[0] + (n0 * n0 - n0)
    for i in range(1, code.n_real + 1):
        ni = c[i]
        val += ni * code.residues[i] - (ni * ni - ni)
    for i, _ in PAIRS[: code.r]:
        m = c[i]
        val -= 2 * (m * m - m)
    return val % 4


def qhat_vanishing_basis(lat: Sublattice, x: PicClass) -> int:
    """Value on x in the span of a root basis on which the function vanishes.

    With every basis square equal to -2 the quadratic law closes to
    q(x) = x.x + 2*sum(coords) mod 4.
    """
    coords = lat.coordinates_of(x)
    return qhat_from_coordinates(coords, x.square)


def qhat_from_coordinates(coords: tuple[int, ...], square: int) -> int:
    return (square + 2 * sum(coords)) % 4


def _norm(residues: list[int]) -> tuple[int, ...]:
    return tuple(a % 4 for a in residues)


def cremona_code(code: Code, i: int, j: int, k: int) -> Code:
    """Code after an elementary Cremona move based at real indices i < j < k."""
    n = code.n_real
    if not (1 <= i < j < k <= n):
        raise LatticeError(f"invalid Cremona triple ({i},{j},{k}) for {n} real classes")
    a = list(code.residues)
    a0, ai, aj, ak = a[0], a[i], a[j], a[k]
    a[0], a[i], a[j], a[k] = ai + aj + ak, a0 + aj + ak, a0 + ai + ak, a0 + ai + aj
    return Code(_norm(a))


def cremona_imaginary(code: Code, i: int) -> Code:
    """Code after a Cremona move based at one real and one imaginary pair: swaps a0, a_i."""
    if code.r < 1:
        raise LatticeError("imaginary Cremona move needs at least one imaginary pair")
    if not (1 <= i <= code.n_real):
        raise LatticeError(f"invalid real index {i}")
    a = list(code.residues)
    a[0], a[i] = a[i], a[0]
    return Code(tuple(a))


def reachable_codes(code: Code) -> dict[tuple[int, ...], list[Move]]:
    """All codes reachable by Cremona moves, with a witnessing move sequence each."""
    seen: dict[tuple[int, ...], list[Move]] = {code.residues: []}
    queue = deque([code])
    n = code.n_real
    while queue:
        cur = queue.popleft()
        path = seen[cur.residues]
        nxt: list[tuple[Move, Code]] = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    nxt.append((("cremona", i, j, k), cremona_code(cur, i, j, k)))
        if code.r >= 1:
            for i in range(1, n + 1):
                nxt.append((("swap", i), cremona_imaginary(cur, i)))
        for move, new in nxt:
            if new.residues not in seen:
                seen[new.residues] = path + [move]
                queue.append(new)
    return seen


def normalize_code(code: Code) -> tuple[Code, list[Move]]:
    """Lexicographically minimal reachable code and a move sequence reaching it."""
    seen = reachable_codes(code)
    best = min(seen)
    return Code(best), seen[best]
