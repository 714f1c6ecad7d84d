"""The 11 real deformation classes of degree-1 del Pezzo surfaces and their
root lattices inside K-perp.

Each class pins a concrete sublattice: the connected forms of Smith type M and
M-1 arise as coordinate kernels (matching their blowup models), the split
forms as explicit orthogonal root sets, and the remaining connected forms as
orthogonal complements of their Bertini partners.  Every stored embedding is
re-verified at construction time: root counts, Cartan shape, complement type,
and saturation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .lattice import (
    K,
    LatticeError,
    PicClass,
    Sublattice,
    enumerate_vectors,
    form_row,
    integer_kernel,
    pic,
)
from .roots import ROOT_COUNTS, cartan_gram, identify, root_system_type


@dataclass(frozen=True)
class DeformationClass:
    """One of the 11 real deformation classes (metadata only; no topology computed)."""

    id: str
    topology: str
    smith_type: str
    lambda_type: str
    rank: int
    bertini_dual_id: str
    qhat_model: str  # "code" or "basis"

    @property
    def euler_char(self) -> int:
        return 9 - 2 * self.rank


_CLASSES = (
    DeformationClass("M-connected", "RP2#4T2", "M", "E8", 8, "M-split", "code"),
    DeformationClass("M-1-connected", "RP2#3T2", "M-1", "E7", 7, "M-1-split", "code"),
    DeformationClass("M-2-connected", "RP2#2T2", "M-2", "D6", 6, "M-2-split", "basis"),
    DeformationClass("M-3-connected", "RP2#T2", "M-3", "D4+A1", 5, "M-3-split", "basis"),
    DeformationClass("M-4", "RP2", "M-4", "4A1", 4, "M-4", "basis"),
    DeformationClass("M-2-I-a", "RP2+K2", "(M-2)_I", "D4", 4, "M-2-I-a", "basis"),
    DeformationClass("M-2-I-b", "(RP2#T2)+S2", "(M-2)_I", "D4", 4, "M-2-I-b", "basis"),
    DeformationClass("M-split", "RP2+4S2", "M", "0", 0, "M-connected", "basis"),
    DeformationClass("M-1-split", "RP2+3S2", "M-1", "A1", 1, "M-1-connected", "basis"),
    DeformationClass("M-2-split", "RP2+2S2", "M-2", "2A1", 2, "M-2-connected", "basis"),
    DeformationClass("M-3-split", "RP2+S2", "M-3", "3A1", 3, "M-3-connected", "basis"),
)

_BY_ID = {c.id: c for c in _CLASSES}

# The conjugation-fixed part of a blowup model with imaginary pairs is cut out
# by equality of the paired coordinates; pairs fill in from (l7,l8) downward.
_PAIR_ROWS = {
    (7, 8): (0, 0, 0, 0, 0, 0, 0, 1, -1),
}

# Mutually orthogonal roots seeding the split forms and the RP2 form.
_A1_SEEDS = [
    pic(0, 0, 0, 0, 0, 0, 0, 1, -1),
    pic(0, 0, 0, 0, 0, 1, -1, 0, 0),
    pic(0, 0, 0, 1, -1, 0, 0, 0, 0),
    pic(0, 1, -1, 0, 0, 0, 0, 0, 0),
]

# A D4 simple system (leaf, center, leaf, leaf) whose orthogonal complement in
# K-perp is again D4; found by exhaustive search over root quadruples.
_D4_SEED = [
    pic(0, 0, 0, 0, 0, 0, 0, 1, -1),
    pic(-3, 1, 1, 1, 1, 1, 1, 1, 2),
    pic(1, -1, 0, 0, 0, 0, 0, -1, -1),
    pic(2, 0, -1, -1, -1, -1, 0, -1, -1),
]


def deformation_classes() -> tuple[DeformationClass, ...]:
    """The 11 classes, connected/self-dual forms first."""
    return _CLASSES


def get_class(class_id: str) -> DeformationClass:
    try:
        return _BY_ID[class_id]
    except KeyError:
        raise LatticeError(f"unknown deformation class {class_id!r}") from None


def bertini_dual(c: DeformationClass) -> DeformationClass:
    return _BY_ID[c.bertini_dual_id]


def bertini_pairs() -> tuple[tuple[DeformationClass, DeformationClass], ...]:
    """The 7 Bertini pairs (self-dual classes paired with themselves)."""
    pairs = []
    seen: set[str] = set()
    for c in _CLASSES:
        if c.id in seen:
            continue
        d = bertini_dual(c)
        seen.update({c.id, d.id})
        pairs.append((c, d))
    return tuple(pairs)


@dataclass(frozen=True)
class LambdaEmbedding:
    """A verified simple-root basis of the class lattice inside K-perp."""

    class_id: str
    sublattice: Sublattice

    @property
    def rank(self) -> int:
        return self.sublattice.rank


def kperp() -> Sublattice:
    return _kernel_sublattice(())


@lru_cache(maxsize=None)
def _kernel_sublattice(extra_rows: tuple[tuple[int, ...], ...]) -> Sublattice:
    rows = [form_row(K)] + [tuple(r) for r in extra_rows]
    return Sublattice.span([PicClass(t) for t in integer_kernel(rows, 9)])


def orthogonal_complement(lat: Sublattice) -> Sublattice:
    """Saturated sublattice of K-perp orthogonal to every basis vector of lat."""
    return _kernel_sublattice(tuple(form_row(b) for b in lat.basis))


def saturate(lat: Sublattice) -> Sublattice:
    """Saturation of lat inside K-perp (primitive closure of its rational span)."""
    return orthogonal_complement(orthogonal_complement(lat))


def _raw_lattice(class_id: str) -> Sublattice:
    if class_id == "M-connected":
        return _kernel_sublattice(())
    if class_id == "M-1-connected":
        return _kernel_sublattice((_PAIR_ROWS[(7, 8)],))
    if class_id == "M-split":
        return Sublattice.span([])
    if class_id in ("M-1-split", "M-2-split", "M-3-split", "M-4"):
        n = {"M-1-split": 1, "M-2-split": 2, "M-3-split": 3, "M-4": 4}[class_id]
        return saturate(Sublattice.span(_A1_SEEDS[:n]))
    if class_id in ("M-2-connected", "M-3-connected"):
        partner = _raw_lattice(get_class(class_id).bertini_dual_id)
        return orthogonal_complement(partner)
    if class_id in ("M-2-I-a", "M-2-I-b"):
        return saturate(Sublattice.span(_D4_SEED))
    raise LatticeError(f"unknown deformation class {class_id!r}")


@lru_cache(maxsize=None)
def lambda_basis(class_id: str) -> LambdaEmbedding:
    """Canonical simple-root basis of the class lattice, with all invariants enforced."""
    c = get_class(class_id)
    lat = _raw_lattice(class_id)
    label, simple = identify(lat)
    if label != c.lambda_type:
        raise LatticeError(f"{class_id}: stored lattice has root type {label}, expected {c.lambda_type}")
    if len(simple) != c.rank or lat.rank != c.rank:
        raise LatticeError(f"{class_id}: rank mismatch")
    n_roots = len(enumerate_vectors(lat, -2)) if c.rank else 0
    if n_roots != ROOT_COUNTS[c.lambda_type]:
        raise LatticeError(f"{class_id}: {n_roots} roots, expected {ROOT_COUNTS[c.lambda_type]}")
    basis = Sublattice.span(simple)
    if c.rank and basis.gram != cartan_gram(c.lambda_type):
        raise LatticeError(f"{class_id}: simple system does not match the {c.lambda_type} Cartan matrix")
    # The saturated kernel must be generated by its roots.
    for b in lat.basis:
        basis.coordinates_of(b)
    comp_label = root_system_type(orthogonal_complement(lat))
    dual_label = get_class(c.bertini_dual_id).lambda_type
    if comp_label != dual_label:
        raise LatticeError(f"{class_id}: complement type {comp_label}, expected {dual_label}")
    return LambdaEmbedding(class_id, basis)
