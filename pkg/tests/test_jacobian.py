from fractions import Fraction

import pytest

from kacjac.errors import MismatchError
from kacjac.jacobian import (
    F_offset,
    algebraic_independence_witness,
    character_matrix,
    directional_derivative,
    extract_F,
    jacobian_leading_exponent,
    jacobian_series,
    predicted_F,
    t2_congruence,
    verify_main_theorem,
)
from kacjac.modular import virasoro_character, eta_power
from kacjac.root_datum import build_root_datum
from kacjac.series import LaurentPoly, QSeries
from kacjac.weyl import det_cofactor


def mono(*exps, c=1):
    return LaurentPoly.monomial(exps, c)


def test_derivative_of_constant_vanishes():
    s = QSeries.one(2, 4)
    assert directional_derivative(s, 1).is_zero()


def test_derivative_rank1():
    s = QSeries.constant(mono(1) - mono(-1), 4)
    assert directional_derivative(s, 1) == QSeries.constant(mono(1) + mono(-1), 4)


def test_derivative_symmetric_monomial():
    s = QSeries.constant(mono(1, 1), 4)
    assert directional_derivative(s, 1).is_zero()
    assert directional_derivative(s, 2) == s


def test_derivative_index_checked():
    with pytest.raises(ValueError):
        directional_derivative(QSeries.one(2, 2), 3)


def test_character_matrix_shape():
    d = build_root_datum(2)
    cm = character_matrix(d, 1, 4)
    assert [lvl for lvl, _ in cm.rows] == [1, 2, 2]
    assert cm.retained == (0, 2)


@pytest.mark.parametrize("l", [1, 2])
def test_jacobian_leading_exponent(l):
    d = build_root_datum(l)
    for i in range(l + 1):
        J = jacobian_series(d, i, 6)
        assert J.offset == jacobian_leading_exponent(d, i)
        assert J.level == 2 * l + 1
        assert J.coeffs[0]


def test_jacobian_rows_alternate():
    d = build_root_datum(2)
    m = character_matrix(d, 0, 6).matrix()
    swapped = [m[0], m[2], m[1]]
    assert det_cofactor(swapped) == -det_cofactor(m)


@pytest.mark.parametrize("l,i,offset", [(1, 0, Fraction(1, 40)), (1, 1, Fraction(9, 40)), (2, 0, Fraction(5, 84))])
def test_extract_offsets(l, i, offset):
    d = build_root_datum(l)
    F = extract_F(d, i, 8)
    assert F.offset == offset == F_offset(d, i)
    assert F.nvars == 0 and F.level == 0


@pytest.mark.parametrize("l", [1, 2])
def test_main_theorem(l):
    d = build_root_datum(l)
    for i in range(l + 1):
        r = verify_main_theorem(d, i, 12)
        assert r.ok, r
        assert r.constant == (-1) ** i


def test_main_theorem_rank3():
    d = build_root_datum(3)
    for i in range(4):
        r = verify_main_theorem(d, i, 6)
        assert r.ok and r.constant == (-1) ** i


def test_main_theorem_detects_wrong_target(monkeypatch):
    import kacjac.jacobian as jac

    d = build_root_datum(1)
    wrong = lambda d, i, order: predicted_F(d, i, order) + QSeries.one(0, order, offset=Fraction(1, 40) + 3)
    monkeypatch.setattr(jac, "predicted_F", wrong)
    r = jac.verify_main_theorem(d, 0, 12)
    assert not r.ok and r.mismatch_at == Fraction(1, 40) + 3
    with pytest.raises(MismatchError):
        jac.verify_main_theorem(d, 0, 12, strict=True)


def test_rank1_quotient_is_rogers_ramanujan():
    d = build_root_datum(1)
    for i in (0, 1):
        F = extract_F(d, i, 20)
        assert F * eta_power(-1, 20) == virasoro_character(1, i, 20) * (-1) ** i


@pytest.mark.parametrize("l", [1, 2])
def test_t2_congruence(l):
    d = build_root_datum(l)
    for i in range(l + 1):
        assert t2_congruence(d, i, 12) == []


@pytest.mark.parametrize("l,tau", [(1, 1j), (2, 1j), (1, 2j), (2, 2j)])
def test_independence_witness(l, tau):
    assert algebraic_independence_witness(build_root_datum(l), tau)
