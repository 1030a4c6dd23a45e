"""Jacobians of the fundamental characters and the tau-functions F^i.

``J^i`` is the determinant whose first column holds ``chi_{Lambda_0}`` and
``2 chi_{lambda_j}`` (j != i), and whose remaining columns hold the
directional derivatives of those characters.  The overall scalar
``2 pi sqrt(-1)`` is left out, so every series here has integer coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import InsufficientOrderError, MismatchError, NotProportionalError
from .modular import F_rM_series, eta_power
from .root_datum import build_root_datum, conformal_anomaly, fundamental_weight, level2_weight
from .series import HALF, LaurentPoly, qs_div, qs_eval
from .theta import character_series, denominator_series
from .weyl import det_cofactor


def directional_derivative(s, j):
    """``d_j`` on a character: ``q^e x^g -> <h_j, g> q^e x^g``.

    ``<h_j, g>`` is ``g_j - g_{j+1}`` for ``j < l`` and ``g_l`` for ``j = l``.
    """
    l = s.nvars
    if not 1 <= j <= l:
        raise ValueError(f"derivative index {j} outside 1..{l}")
    a = j - 1
    if j < l:
        fn = lambda g: g[a] - g[a + 1]
    else:
        fn = lambda g: g[a]
    return s.map_coeffs(lambda c: c.scale_terms(fn))


@dataclass(frozen=True)
class CharacterMatrix:
    """Rows ``(level, chi)``: ``chi_{Lambda_0}`` then ``chi_{lambda_j}`` for
    the retained indices j in increasing order."""

    rows: tuple
    dropped: int

    @property
    def retained(self):
        return tuple(j for j in range(len(self.rows)) if j != self.dropped)

    def matrix(self):
        l = len(self.rows) - 1
        out = []
        for level, chi in self.rows:
            first = chi if level == 1 else chi * 2
            out.append([first] + [directional_derivative(chi, j) for j in range(1, l + 1)])
        return out


def character_matrix(d, i, order):
    l = d.rank
    if not 0 <= i <= l:
        raise ValueError(f"dropped index {i} outside 0..{l}")
    rows = [(1, character_series(d, fundamental_weight(d, 0), order))]
    for j in range(l + 1):
        if j != i:
            rows.append((2, character_series(d, level2_weight(d, j), order)))
    return CharacterMatrix(tuple(rows), i)


def jacobian_leading_exponent(d, i):
    """Predicted leading q-exponent of ``J^i``."""
    l = d.rank
    return Fraction(l * (l + 1), 12) + F_offset(d, i)


def F_offset(d, i):
    l = d.rank
    return Fraction((2 * i + 1) ** 2, 8 * (2 * l + 3)) + Fraction(l - 1, 24)


@lru_cache(maxsize=None)
def _jacobian(l, i, order):
    d = build_root_datum(l)
    # the determinant's leading degree drops by i/2 against the naive product
    cm = character_matrix(d, i, order + i)
    J = det_cofactor(cm.matrix())
    if J.order < order:
        raise InsufficientOrderError(
            f"Jacobian known to {J.order} steps, {order} requested"
        )
    return J.truncate(order)


def jacobian_series(d, i, order):
    """``J^i / (2 pi sqrt(-1))`` to ``order`` half-steps past its leading term."""
    return _jacobian(d.rank, i, order)


@lru_cache(maxsize=None)
def _extract(l, i, order):
    d = build_root_datum(l)
    J = _jacobian(l, i, order)
    A = denominator_series(d, order)
    F = qs_div(J, A)
    for e, c in F.items():
        if not c.is_constant():
            raise NotProportionalError(f"J^{i} / A_rho depends on x at q^{e}")
    return F.map_coeffs(lambda c: LaurentPoly.constant(c.constant_term(), 0), nvars=0)


def extract_F(d, i, order):
    """``F^i = J^i / A_rho`` as an x-free series."""
    return _extract(d.rank, i, order)


def predicted_F(d, i, order):
    """``eta^{l-1} F^{(2l+3)}_{l+1-i}`` on the half-integer grid."""
    l = d.rank
    g = F_rM_series(l + 1 - i, 2 * l + 3, order)
    if l > 1:
        g = g * eta_power(l - 1, order)
    return g


class MainTheoremResult(NamedTuple):
    constant: Fraction
    ok: bool
    mismatch_at: object
    offset: Fraction


def verify_main_theorem(d, i, order, strict=False):
    """Compare ``F^i`` with ``c * eta^{l-1} F^{(2l+3)}_{l+1-i}`` exactly.

    The constant is read off the leading coefficients; ``mismatch_at`` is the
    first exponent where the two sides disagree (None when ok).  With
    ``strict`` a mismatch raises ``MismatchError``.
    """
    R = extract_F(d, i, order)
    G = predicted_F(d, i, order)
    r = R.integer_coeffs()
    g = G.integer_coeffs()
    mismatch = None
    if R.offset != G.offset:
        mismatch = min(R.offset, G.offset)
        c = Fraction(0)
    else:
        c = Fraction(r[0], g[0])
        n = min(len(r), len(g))
        for k in range(n):
            if Fraction(r[k]) != c * g[k]:
                mismatch = R.offset + k * HALF
                break
    if mismatch is not None and strict:
        raise MismatchError(f"F^{i} and the eta-product differ at q^{mismatch}", exponent=mismatch)
    return MainTheoremResult(c, mismatch is None, mismatch, R.offset)


def t2_congruence(d, i, order):
    """Every exponent ``e`` of ``F^i`` satisfies ``e = -(m_{lambda_i} + l/24) mod 1/2``.

    Returns the list of offending exponents (empty when the law holds).
    """
    F = extract_F(d, i, order)
    target = -(conformal_anomaly(d, level2_weight(d, i)) + Fraction(d.rank, 24))
    bad = []
    for e, _ in F.items():
        if ((e - target) / HALF).denominator != 1:
            bad.append(e)
    return bad


def algebraic_independence_witness(d, tau, order=20):
    """True iff ``F^0(tau)`` is numerically nonzero beyond its tail bound."""
    F = extract_F(d, 0, order)
    value, bound = qs_eval(F, tau, with_bound=True)
    return abs(value) > bound
