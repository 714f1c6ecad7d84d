import random

import pytest

from conftest import root_h3
from dp1.lattice import MINUS_K, MINUS_2K, LatticeError, ZERO, pic, reflect
from dp1.pin import (
    NEGATIVE_CODE,
    POSITIVE_CODE,
    Code,
    cremona_code,
    cremona_imaginary,
    normalize_code,
    qhat_code,
    qhat_vanishing_basis,
    reachable_codes,
)
from dp1.real_forms import lambda_basis

RNG = random.Random(99)


def test_code_validation():
    Code((1,) * 9)
    Code((3,) * 7)
    with pytest.raises(LatticeError):
        Code((1,) * 8)  # even length
    with pytest.raises(LatticeError):
        Code((1, 1, 2, 1, 1, 1, 1, 1, 1))  # residue not +-1
    with pytest.raises(LatticeError):
        Code((3, 1, 1, 1, 1, 1, 1, 1, 1))  # sum = 3 mod 4


def test_qhat_code_values():
    assert qhat_code(POSITIVE_CODE, pic(0, 1, -1, 0, 0, 0, 0, 0, 0)) == 2
    assert qhat_code(POSITIVE_CODE, pic(1, -1, -1, -1, 0, 0, 0, 0, 0)) == 0
    assert qhat_code(NEGATIVE_CODE, pic(1, -1, 0, 0, 0, 0, 0, 0, 0)) == 2
    assert qhat_code(POSITIVE_CODE, ZERO) == 0
    assert qhat_code(NEGATIVE_CODE, pic(2, -1, -1, 0, 0, 0, 0, -1, -1)) == 2


def test_qhat_code_minus_k_and_minus_2k():
    for code in (POSITIVE_CODE, NEGATIVE_CODE):
        assert qhat_code(code, MINUS_K) == 1
        assert qhat_code(code, MINUS_2K) == 0


def test_qhat_code_rejects_non_real():
    with pytest.raises(LatticeError):
        qhat_code(NEGATIVE_CODE, pic(0, 0, 0, 0, 0, 0, 0, 1, -1))


def test_cremona_move_rows():
    assert cremona_code(POSITIVE_CODE, 1, 2, 3).residues[:4] == (3, 3, 3, 3)
    mixed = Code((1, 1, 3, 3, 1, 1, 1, 1, 1))
    assert cremona_code(mixed, 1, 2, 3).residues[:4] == (3, 3, 1, 1)
    inert = Code((1, 1, 1, 3, 1, 1, 1, 1, 3))
    assert cremona_code(inert, 1, 2, 3).residues == inert.residues
    back = cremona_code(cremona_code(POSITIVE_CODE, 1, 2, 3), 1, 2, 3)
    assert back.residues == POSITIVE_CODE.residues


def test_cremona_index_validation():
    with pytest.raises(LatticeError):
        cremona_code(POSITIVE_CODE, 2, 2, 3)
    with pytest.raises(LatticeError):
        cremona_code(NEGATIVE_CODE, 5, 6, 7)  # only 6 real classes at r=1
    with pytest.raises(LatticeError):
        cremona_imaginary(POSITIVE_CODE, 1)  # r = 0


def test_cremona_imaginary_swap():
    code = Code((1, 3, 1, 1, 3, 3, 1))
    once = cremona_imaginary(code, 1)
    assert once.residues[0] == 3 and once.residues[1] == 1
    assert cremona_imaginary(once, 1).residues == code.residues


def test_cremona_preserves_code_relation():
    code = Code((1, 1, 1, 1, 1, 3, 3, 3, 3))
    for _ in range(50):
        i, j, k = sorted(RNG.sample(range(1, 9), 3))
        code = cremona_code(code, i, j, k)
        assert sum(code.residues) % 4 == 1


def test_normalize_positive_seed():
    seed = Code((1, 1, 1, 1, 1, 3, 3, 3, 3))
    best, moves = normalize_code(seed)
    assert best.residues == (1,) * 9
    code = seed
    for move in moves:
        code = (cremona_code(code, *move[1:]) if move[0] == "cremona"
                else cremona_imaginary(code, move[1]))
    assert code.residues == best.residues


def test_normalize_negative_seed_reaches_all_minus():
    seed = Code((1, 1, 1, 1, 3, 3, 3))
    seen = reachable_codes(seed)
    assert (3,) * 7 in seen
    code = seed
    for move in seen[(3,) * 7]:
        code = (cremona_code(code, *move[1:]) if move[0] == "cremona"
                else cremona_imaginary(code, move[1]))
    assert code.residues == (3,) * 7


def test_normalize_all_plus_is_fixed():
    best, moves = normalize_code(POSITIVE_CODE)
    assert best.residues == POSITIVE_CODE.residues
    assert moves == []


def test_cremona_matches_reflection_spotcheck():
    e = root_h3(1, 2, 3)
    new = cremona_code(POSITIVE_CODE, 1, 2, 3)
    for x in (pic(0, 1, 0, 0, 0, 0, 0, 0, 0), pic(1, -1, -1, 0, -1, 0, 0, 0, 0), MINUS_K):
        assert qhat_code(new, reflect(x, e)) == qhat_code(POSITIVE_CODE, x)


def test_vanishing_basis_values():
    lat = lambda_basis("M-2-connected").sublattice
    b = lat.basis
    for bi in b:
        assert qhat_vanishing_basis(lat, bi) == 0
        assert qhat_vanishing_basis(lat, -bi) == 0
    orth = next((i, j) for i in range(6) for j in range(i + 1, 6) if b[i].dot(b[j]) == 0)
    adj = next((i, j) for i in range(6) for j in range(i + 1, 6) if b[i].dot(b[j]) == 1)
    assert qhat_vanishing_basis(lat, b[orth[0]] + b[orth[1]]) == 0
    assert qhat_vanishing_basis(lat, b[adj[0]] + b[adj[1]]) == 2


def test_vanishing_basis_rejects_outside_span():
    lat = lambda_basis("M-4").sublattice
    with pytest.raises(LatticeError):
        qhat_vanishing_basis(lat, MINUS_K)
    with pytest.raises(LatticeError):
        qhat_vanishing_basis(lat, pic(0, 1, 0, 0, 0, 0, 0, 0, 0))
