"""Lattice-level wall-crossing checks: limit splittings, orthogonal-root sums,
reflection pairing, and the per-degeneration balance table.

A nodal degeneration contributes a root E of the class lattice with q(E) = 0.
Curves limit onto D + rE; the admissible (r, D) are cut out by the numeric
filters extracted from the degeneration analysis and reproduce fixed small
tables as a function of (stratum, v.E).  Classes pairing off under the
reflection in E cancel; classes orthogonal to E aggregate to rank-linear sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .lattice import MINUS_K, MINUS_2K, LatticeError, PicClass, dot_tuples, reflect
from .counting import BClass, b_classes, model_qhat, sign_of
from .real_forms import DeformationClass, get_class


@dataclass(frozen=True)
class VanishingRoot:
    """A root of the class lattice on which the quadratic function vanishes."""

    class_id: str
    e: PicClass


@dataclass(frozen=True)
class SplittingCase:
    """One admissible limit splitting alpha = D + r*E."""

    r: int
    d: PicClass
    d_square: int
    d_dot_e: int
    d_stratum: int  # stratum of D: 0, 2 or 4

    @property
    def summary(self) -> tuple[int, int, int, int]:
        return (self.r, self.d_stratum, self.d_square, self.d_dot_e)


# The admissible splittings as a function of (stratum of alpha, v.E):
# tuples (r, stratum of D, D.D, D.E).
SPLITTING_TABLE: dict[tuple[int, int], tuple[tuple[int, int, int, int], ...]] = {
    (0, 0): ((1, 2, 2, 2),),
    (2, 1): ((1, 2, 2, 1),),
    (2, 0): ((1, 4, 0, 2),),
    (2, 2): ((2, 2, 2, 2),),
    (2, -1): (),
    (2, -2): (),
    (4, 1): ((1, 4, 0, 1),),
    (4, 2): ((2, 4, 0, 2),),
    (4, 0): (),
    (4, -1): (),
    (4, -2): (),
}

MAX_MULTIPLICITY = 4  # proofs bound r by 2; searching further verifies the bound


@lru_cache(maxsize=None)
def vanishing_roots_cached(class_id: str) -> tuple[VanishingRoot, ...]:
    c = get_class(class_id)
    out = []
    for b in b_classes(c, 1):
        if b.qhat == 0:
            out.append(VanishingRoot(class_id, b.v))
    return tuple(out)


def vanishing_roots(c: DeformationClass) -> tuple[VanishingRoot, ...]:
    """All roots of the class lattice with vanishing quadratic value."""
    return vanishing_roots_cached(c.id)


def splittings(alpha: BClass, root: VanishingRoot) -> list[SplittingCase]:
    """Admissible splittings alpha = D + r*E for r >= 1.

    Necessary conditions from the degeneration analysis: D.(-K-E) >= 0,
    D.E >= 1, D.D >= -1, and D must again be a degree-2 stratum class
    (D.D in {4, 2, 0}, the last forcing the deepest stratum).
    """
    if alpha.class_id != root.class_id:
        raise LatticeError(f"class mismatch: {alpha.class_id} vs {root.class_id}")
    e = root.e
    cases = []
    for r in range(1, MAX_MULTIPLICITY + 1):
        d = alpha.alpha - r * e
        if d.dot(MINUS_K - e) < 0:
            continue
        de = d.dot(e)
        if de < 1:
            continue
        dsq = d.square
        if dsq < -1:
            continue
        w = MINUS_2K - d
        stratum = {0: 0, -2: 2, -4: 4}.get(w.square)
        if stratum is None:
            continue
        cases.append(SplittingCase(r, d, dsq, de, stratum))
    return cases


def orth_root_sum(c: DeformationClass, root: VanishingRoot) -> int:
    """Sum of i^q over roots of the class lattice orthogonal to E; equals 2(r-1)."""
    _check_root(c, root)
    ec = root.e.coeffs
    return sum(sign_of(b.qhat) for b in b_classes(c, 1) if dot_tuples(b.v.coeffs, ec) == 0)


def pairing_cancellation(c: DeformationClass, root: VanishingRoot, k: int) -> int:
    """Signed sum over the B^{2k} classes with |alpha.E| = 1; always 0.

    The reflection in E is a fixed-point-free involution on that set shifting
    the quadratic value by 2; the elementwise shift (and invariance for
    alpha.E in {0, +-2}) is verified along the way.
    """
    _check_root(c, root)
    e = root.e
    ec = e.coeffs
    by_v = {b.v.coeffs: b.qhat for b in b_classes(c, k)}
    total = 0
    for b in b_classes(c, k):
        t = dot_tuples(b.v.coeffs, ec)
        image = tuple(x + t * y for x, y in zip(b.v.coeffs, ec))  # v + (v.E)E
        q_image = by_v.get(image)
        if q_image is None:
            raise LatticeError(f"reflection left the stratum: {b.v} by {e}")
        if abs(t) == 1:
            if q_image != (b.qhat + 2) % 4:
                raise LatticeError(f"pairing shift failed at {b.v}")
            total += sign_of(b.qhat)
        else:
            if q_image != b.qhat:
                raise LatticeError(f"reflection invariance failed at {b.v}")
    return total


@dataclass(frozen=True)
class DeltaTable:
    """The five signed edge-count differences of one degeneration."""

    d41: int
    d42: int
    d20: int
    d21: int
    d22: int
    cited: tuple[str, ...] = ("d22",)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.d41, self.d42, self.d20, self.d21, self.d22)


def delta_table(c: DeformationClass, root: VanishingRoot) -> DeltaTable:
    """Delta values computed from lattice sums (d22 is the cited Euler input)."""
    _check_root(c, root)
    orth = orth_root_sum(c, root)
    return DeltaTable(
        d41=pairing_cancellation(c, root, 2),
        d42=2 * orth,
        d20=-2 * orth,
        d21=pairing_cancellation(c, root, 1),
        d22=-2 * (c.rank - (8 - c.rank)),
    )


def delta_expected(c: DeformationClass) -> tuple[int, int, int, int, int]:
    """The tabulated formulas at this class's rank: (0, 4(r-1), -4(r-1), 0, -2(r-r'))."""
    r, rd = c.rank, 8 - c.rank
    return (0, 4 * (r - 1), -4 * (r - 1), 0, -2 * (r - rd))


def weighted_balance(c: DeformationClass, root: VanishingRoot) -> int:
    """Doubled deep-stratum delta plus the genus-one deltas; always 12."""
    t = delta_table(c, root)
    return 2 * t.d42 + t.d20 + t.d22


def _check_root(c: DeformationClass, root: VanishingRoot) -> None:
    if root.class_id != c.id:
        raise LatticeError(f"root belongs to {root.class_id}, not {c.id}")
    if root.e.square != -2 or root.e.dot(MINUS_K) != 0:
        raise LatticeError(f"{root.e} is not a root of the degree-0 lattice")
    if model_qhat(c, root.e) != 0:
        raise LatticeError(f"{root.e} has nonzero quadratic value")
