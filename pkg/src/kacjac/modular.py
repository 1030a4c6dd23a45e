"""q-expansions of eta, theta_{n,m} and the Kac-Peterson products F_r^(M).

All series are x-free ``QSeries`` (``nvars == 0``) in the nome
``q = exp(2 pi i tau)``, on the same half-integer grid as the characters.
"""

from fractions import Fraction

from .errors import BadParityError
from .series import HALF, LaurentPoly, QSeries, qs_inverse_product, qs_mul_binomial


def eta_series(order, step=HALF):
    """``q^{1/24} prod_{n>=1} (1 - q^n)``."""
    n_max = int(order * step) + 1
    base = qs_inverse_product({n: 1 for n in range(1, n_max + 1)}, order, step=step)
    return QSeries.make(0, Fraction(1, 24), base.coeffs, base.order, 0, step)


def eta_power(power, order, step=HALF):
    """``eta^power`` for any integer power (negative ones expand 1/eta)."""
    n_max = int(order * step) + 1
    base = qs_inverse_product({n: power for n in range(1, n_max + 1)}, order, step=step)
    return QSeries.make(0, Fraction(power, 24), base.coeffs, base.order, 0, step)


def theta_nm_series(n, m, order, step=HALF):
    """``theta_{n,m} = sum_k q^{m (k + n/2m)^2}``."""
    if m < 1:
        raise ValueError("m must be positive")
    n = n % (2 * m)
    # exponents (2mk + n)^2 / 4m, smallest at the balanced residue
    r = n if n <= m else n - 2 * m
    start = Fraction(r * r, 4 * m)
    prec = start + order * step
    terms = []
    k = 0
    while True:
        added = False
        for kk in {k, -k}:
            e = Fraction((2 * m * kk + r) ** 2, 4 * m)
            if e < prec:
                terms.append((e, (), 1))
                added = True
        if not added and k > 0:
            break
        k += 1
    return QSeries.from_terms(terms, 0, 0, start, order, step)


def F_rM_series(r, M, order, step=HALF):
    """``F_r^(M) = q^{(M-2r)^2/8M} prod (1-q^n)`` over ``n = 0, r, -r mod M``.

    For r = 0 this is ``eta(M tau)^3``.
    """
    if M % 2 == 0:
        raise BadParityError(f"bad_parity: M must be odd, got {M}")
    if not 0 <= r < M:
        raise ValueError(f"r must satisfy 0 <= r < M, got {r}")
    offset = Fraction((M - 2 * r) ** 2, 8 * M)
    s = QSeries.one(0, order, offset=offset, step=step)
    n = 1
    while n < order * step:
        mult = (n % M == 0) + (n % M == r % M) + (n % M == (-r) % M)
        if mult:
            s = qs_mul_binomial(s, n, (), coeff=-1, power=mult)
        n += 1
    return s


def F_theta_difference(r, M, order, step=HALF):
    """``theta_{M-2r,2M} - theta_{M+2r,2M}``, the triple-product form of F_r^(M)."""
    return theta_nm_series(M - 2 * r, 2 * M, order, step) - theta_nm_series(M + 2 * r, 2 * M, order, step)


def F_r0_eta_cubed(M, order, step=HALF):
    """``eta(M tau)^3`` built by dilating eta^3."""
    base_order = -(-order // M)
    return eta_power(3, base_order, step).dilate(M).truncate(order)


def virasoro_character(l, i, order):
    """``chi_{1,l+1-i} = F^(2l+3)_{l+1-i} / eta`` for the (2, 2l+3) minimal model."""
    return F_rM_series(l + 1 - i, 2 * l + 3, order) * eta_power(-1, order)


def verify_triple_product(order):
    """Two-variable Jacobi triple product and its theta specialisation.

    ``prod_{k>=1} (1-p^k)(1-p^{k-1} w)(1-p^k/w) = sum_j (-1)^j p^{j(j-1)/2} w^j``
    to ``order`` powers of p, and ``F_r^(M) = theta_{M-2r,2M} - theta_{M+2r,2M}``
    for ``0 < r < M``, M in {3, 5, 7}.
    """
    one = Fraction(1)
    lhs = QSeries.one(1, order, step=one)
    for k in range(1, order + 1):
        lhs = qs_mul_binomial(lhs, k, (0,), coeff=-1)
        lhs = qs_mul_binomial(lhs, k, (-1,), coeff=-1)
    # (1 - w) at p^0 and (1 - p^{k-1} w) for k >= 2
    lhs = lhs * LaurentPoly({(0,): 1, (1,): -1})
    for k in range(2, order + 1):
        lhs = qs_mul_binomial(lhs, k - 1, (1,), coeff=-1)
    terms = []
    j = 1
    while True:
        hit = False
        # j and 1 - j share the exponent j(j-1)/2
        for jj in (j, 1 - j):
            e = jj * (jj - 1) // 2
            if e < order:
                terms.append((e, (jj,), (-1) ** (jj % 2)))
                hit = True
        if not hit:
            break
        j += 1
    rhs = QSeries.from_terms(terms, 0, 1, 0, order, one)
    if lhs != rhs:
        return False
    for M in (3, 5, 7):
        for r in range(1, M):
            if F_rM_series(r, M, order) != F_theta_difference(r, M, order):
                return False
    return True
