import random

import pytest

from dp1.lattice import (
    ENUM_DEPTH_ENV,
    EnumerationDepthError,
    H,
    K,
    L,
    MINUS_K,
    MINUS_2K,
    LatticeError,
    PicClass,
    Sublattice,
    degree,
    enumerate_coordinates,
    enumerate_vectors,
    integer_kernel,
    intersect,
    pic,
    reflect,
)

RNG = random.Random(421)


def rand_class(bound=5):
    return PicClass(tuple(RNG.randint(-bound, bound) for _ in range(9)))


def test_form_values():
    assert intersect(H, H) == 1
    assert intersect(K, K) == 1
    for i, li in enumerate(L):
        assert intersect(li, li) == -1
        assert intersect(H, li) == 0
        for lj in L[i + 1:]:
            assert intersect(li, lj) == 0


def test_intersect_expansion_example():
    a = pic(1, -1, -1, -1, 0, 0, 0, 0, 0)  # h - l1 - l2 - l3
    b = pic(0, 1, -1, 0, 0, 0, 0, 0, 0)  # l1 - l2
    assert intersect(a, b) == 0


def test_intersect_symmetric_bilinear():
    for _ in range(200):
        a, b, c = rand_class(), rand_class(), rand_class()
        assert intersect(a, b) == intersect(b, a)
        assert intersect(a + b, c) == intersect(a, c) + intersect(b, c)
        n = RNG.randint(-4, 4)
        assert intersect(n * a, b) == n * intersect(a, b)


def test_degree():
    assert degree(MINUS_K) == 1
    assert degree(MINUS_2K) == 2
    assert degree(L[0]) == 1
    assert MINUS_2K.square == 4


def test_reflect_basics():
    e = pic(0, 1, -1, 0, 0, 0, 0, 0, 0)
    assert reflect(e, e) == -e
    a = pic(2, 1, 1, 0, 0, 0, 0, 0, 0)
    assert intersect(a, e) == 0 and reflect(a, e) == a
    for _ in range(200):
        x = rand_class()
        assert reflect(reflect(x, e), e) == x
        y = rand_class()
        assert intersect(reflect(x, e), reflect(y, e)) == intersect(x, y)


def test_reflect_rejects_non_root():
    with pytest.raises(LatticeError):
        reflect(H, H)
    with pytest.raises(LatticeError):
        reflect(H, MINUS_2K)


def test_pic_class_validation():
    with pytest.raises(LatticeError):
        PicClass((1, 2, 3))
    with pytest.raises(LatticeError):
        PicClass((1.0,) * 9)  # type: ignore[arg-type]


def test_span_rejects_non_kperp_and_dependent():
    with pytest.raises(LatticeError):
        Sublattice.span([H])
    e = pic(0, 1, -1, 0, 0, 0, 0, 0, 0)
    with pytest.raises(LatticeError):
        Sublattice.span([e, 2 * e])


def test_enumerate_rejects_bad_norm(kperp):
    with pytest.raises(LatticeError):
        enumerate_vectors(kperp, 0)
    with pytest.raises(LatticeError):
        enumerate_vectors(kperp, 2)


def test_e8_cardinalities(kperp):
    assert len(enumerate_vectors(kperp, -2)) == 240
    assert len(enumerate_vectors(kperp, -4)) == 2160


def test_enumeration_is_sorted_and_deterministic(kperp):
    a = enumerate_coordinates(kperp, -2)
    b = enumerate_coordinates(kperp, -2)
    assert a == b == sorted(a)
    va = enumerate_vectors(kperp, -2)
    assert all(v.square == -2 and intersect(v, K) == 0 for v in va)


def test_enumerate_rank_zero():
    assert enumerate_vectors(Sublattice.span([]), -2) == []


def test_orthogonal_seeds_count():
    seeds = [pic(0, 1, -1, 0, 0, 0, 0, 0, 0), pic(0, 0, 0, 1, -1, 0, 0, 0, 0),
             pic(0, 0, 0, 0, 0, 1, -1, 0, 0), pic(0, 0, 0, 0, 0, 0, 0, 1, -1)]
    for m in range(1, 5):
        lat = Sublattice.span(seeds[:m])
        n4 = len(enumerate_vectors(lat, -4))
        assert n4 == 2 * m * (m - 1)  # 4 * C(m, 2)


def test_depth_cap(kperp, monkeypatch):
    monkeypatch.setenv(ENUM_DEPTH_ENV, "3")
    with pytest.raises(EnumerationDepthError):
        enumerate_vectors(kperp, -2)
    monkeypatch.setenv(ENUM_DEPTH_ENV, "8")
    assert len(enumerate_vectors(kperp, -2)) == 240


def test_integer_kernel_saturation():
    assert integer_kernel([(1, 1)], 2) == [(1, -1)] or integer_kernel([(1, 1)], 2) == [(-1, 1)]
    # The kernel lattice is primitive: (1,-1), never (2,-2).
    (v,) = integer_kernel([(1, 1)], 2)
    assert sorted(map(abs, v)) == [1, 1]
    assert integer_kernel([(2, 0)], 2) == [(0, 1)]
    assert len(integer_kernel([], 3)) == 3


def test_integer_kernel_matches_constraints():
    rows = [(3, 1, -2, 0), (0, 2, 2, -1)]
    basis = integer_kernel(rows, 4)
    assert len(basis) == 2
    for v in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_coordinates_roundtrip(kperp):
    for _ in range(50):
        coords = tuple(RNG.randint(-3, 3) for _ in range(8))
        v = kperp.from_coordinates(coords)
        assert kperp.coordinates_of(v) == coords
    with pytest.raises(LatticeError):
        kperp.coordinates_of(H)


def test_coordinates_rejects_non_integral():
    e = pic(0, 1, -1, 0, 0, 0, 0, 0, 0)
    doubled = Sublattice.span([2 * e])
    with pytest.raises(LatticeError):
        doubled.coordinates_of(e)
