import itertools
import random

import numpy as np
import pytest

from kacjac.errors import RankError
from kacjac.root_datum import build_root_datum
from kacjac.series import LaurentPoly
from kacjac.weyl import (
    SignedPerm,
    act,
    det_cofactor,
    dominant_form,
    enumerate_wf,
    finite_character,
    skew_symmetrize,
    verify_cl_denominator,
    verify_super_denominator,
    weyl_denominator,
    weyl_dimension,
)


def mono(*exps, c=1):
    return LaurentPoly.monomial(exps, c)


@pytest.mark.parametrize("l,size", [(1, 2), (2, 8), (3, 48), (4, 384)])
def test_group_order(l, size):
    group = enumerate_wf(l)
    assert len(group) == size
    assert len(set(group)) == size
    assert group[0] == SignedPerm.identity(l)


def test_rank3_sign_count():
    assert sum(1 for w in enumerate_wf(3) if w.sign == 1) == 24


def test_rank_limits():
    with pytest.raises(RankError):
        enumerate_wf(0)
    with pytest.raises(RankError):
        enumerate_wf(9)


def test_act_examples():
    assert act(SignedPerm.identity(3), (1, 2, 3)) == (1, 2, 3)
    assert act(SignedPerm((0,), (-1,)), (3,)) == (-3,)
    w = SignedPerm((1, 0), (1, -1))
    assert act(w, (5, 7)) == (-7, 5)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_composition_and_sign_homomorphism(l):
    group = enumerate_wf(l)
    v = tuple(range(2, 2 + l))
    for w1, w2 in itertools.product(group, repeat=2):
        assert act(w1 * w2, v) == act(w1, act(w2, v))
        assert (w1 * w2).sign == w1.sign * w2.sign
    for w in group:
        assert w * w.inverse() == SignedPerm.identity(l)


def test_sign_matches_determinant():
    for w in enumerate_wf(3):
        m = np.array([act(w, e) for e in np.eye(3, dtype=int).tolist()]).T
        assert round(np.linalg.det(m)) == w.sign


def test_dominant_form():
    assert dominant_form((1, -3)) == ((3, 1), 1)
    assert dominant_form((0, 2))[1] == 0
    assert dominant_form((2, 2))[1] == 0


def test_skew_examples():
    d1, d2 = build_root_datum(1), build_root_datum(2)
    assert skew_symmetrize(d1, (1,)) == mono(1) - mono(-1)
    assert skew_symmetrize(d1, (0,)) == LaurentPoly.zero(1)
    expected = (
        mono(2, 1) - mono(1, 2) - mono(2, -1) + mono(-1, 2)
        + mono(1, -2) - mono(-2, 1) - mono(-1, -2) + mono(-2, -1)
    )
    assert skew_symmetrize(d2, (2, 1)) == expected


def test_skew_antisymmetry_under_group():
    d = build_root_datum(3)
    for w in enumerate_wf(3):
        assert skew_symmetrize(d, act(w, (4, 2, 1))) == skew_symmetrize(d, (4, 2, 1)) * w.sign


def test_finite_character_examples():
    d1, d2 = build_root_datum(1), build_root_datum(2)
    assert finite_character(d1, (1,)) == mono(1) + mono(-1)
    assert finite_character(d2, (1, 0)) == mono(1, 0) + mono(-1, 0) + mono(0, 1) + mono(0, -1)
    for l in (1, 2, 3):
        assert finite_character(build_root_datum(l), (0,) * l) == LaurentPoly.one(l)


def test_finite_character_rejects_nondominant():
    with pytest.raises(ValueError):
        finite_character(build_root_datum(2), (0, 1))


@pytest.mark.parametrize("l", [1, 2, 3])
def test_weyl_character_formula(l):
    d = build_root_datum(l)
    rho = d.rho_bar
    for lam in itertools.product(range(4), repeat=l):
        if any(lam[i] < lam[i + 1] for i in range(l - 1)):
            continue
        ch = finite_character(d, lam)
        shifted = tuple(a + r for a, r in zip(lam, rho))
        assert ch * weyl_denominator(l) == skew_symmetrize(d, shifted)
        assert ch.coefficient_sum() == weyl_dimension(lam)


def test_known_dimensions():
    # sp(4): 4, 5, 10 ; sp(6): 6, 14, 14'
    assert weyl_dimension((1, 0)) == 4
    assert weyl_dimension((1, 1)) == 5
    assert weyl_dimension((2, 0)) == 10
    assert weyl_dimension((1, 0, 0)) == 6
    assert weyl_dimension((1, 1, 0)) == 14
    assert weyl_dimension((1, 1, 1)) == 14


def test_det_cofactor_matches_numpy():
    rng = random.Random(5)
    for n in range(1, 6):
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert det_cofactor(m) == round(np.linalg.det(np.array(m)))


def test_det_cofactor_row_swap():
    m = [[mono(1, 0), mono(0, 1)], [mono(2, 0), LaurentPoly.one(2)]]
    swapped = [m[1], m[0]]
    assert det_cofactor(swapped) == -det_cofactor(m)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cl_denominator(n):
    assert verify_cl_denominator(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_super_denominator(n):
    assert verify_super_denominator(n)


def test_identity_range_checked():
    with pytest.raises(ValueError):
        verify_cl_denominator(5)
    with pytest.raises(ValueError):
        verify_super_denominator(0)
