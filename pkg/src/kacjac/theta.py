"""Theta functions over the odd lattice M = Z^l and Weyl-Kac characters.

Conventions: ``q = exp(2 pi i tau)``, ``x_j = exp(2 pi i z_j)``.  A level-k
theta function ``Theta_lam`` is the lattice sum
``sum_{gamma in M + lam/k} q^{k |gamma|^2 / 2} x^{k gamma}``.  The Weyl-Kac
numerator of a level-k weight is
``sum_{beta in (Lam+rho) + K M} a_beta q^{|beta|^2 / 2K}`` with ``K = k + h``,
and the normalized character is numerator over denominator.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InconsistentExpansionError, NonintegralClassError, OutOfRangeError
from .root_datum import FiniteWeight, build_root_datum, conformal_anomaly, inner, zero_weight
from .series import HALF, LaurentPoly, QSeries, first_difference, qs_div, qs_mul_binomial
from .weyl import dominant_form, finite_character, skew_symmetrize, weyl_denominator


@dataclass(frozen=True)
class LatticeShell:
    shift: tuple
    bound: Fraction
    points: tuple


def _isqrt_floor(x):
    """Largest integer n with n*n <= x for a nonnegative Fraction x."""
    n = math.isqrt(x.numerator // x.denominator)
    while (n + 1) * (n + 1) <= x:
        n += 1
    return n


def enumerate_shifted_lattice(shift, bound):
    """All ``gamma = shift + alpha`` (alpha integral) with ``|gamma|^2 <= bound``."""
    shift = tuple(Fraction(s) for s in shift)
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    points = []

    def rec(i, prefix, remaining):
        if i == len(shift):
            points.append(tuple(prefix))
            return
        s = shift[i]
        r = _isqrt_floor(remaining) + 1
        lo = math.floor(-r - s)
        hi = math.ceil(r - s)
        for a in range(lo, hi + 1):
            g = s + a
            g2 = g * g
            if g2 <= remaining:
                prefix.append(g)
                rec(i + 1, prefix, remaining - g2)
                prefix.pop()

    rec(0, [], bound)
    points.sort()
    return LatticeShell(shift, bound, tuple(points))


def _min_norm(shift):
    """Minimum of ``|gamma|^2`` over ``shift + Z^l``."""
    total = Fraction(0)
    for s in shift:
        f = s - math.floor(s)
        total += min(f, 1 - f) ** 2
    return total


def _series_from_polys(terms, level, nvars, start, order):
    buckets = {}
    for e, poly in terms:
        n = (e - start) / HALF
        if n.denominator != 1 or n < 0:
            raise ValueError(f"exponent {e} off the grid starting at {start}")
        n = int(n)
        if n < order:
            buckets[n] = buckets[n] + poly if n in buckets else poly
    coeffs = [buckets.get(n, LaurentPoly.zero(nvars)) for n in range(order)]
    return QSeries.make(level, start, coeffs, order, nvars)


def _integral(v):
    v = tuple(Fraction(x) for x in v)
    if any(x.denominator != 1 for x in v):
        raise NonintegralClassError(f"finite part {v} is not in Z^l")
    return tuple(int(x) for x in v)


def theta_series(d, lam, order):
    """Classical theta function of degree ``lam.level`` to ``order`` half-steps."""
    k = lam.level
    if k < 1:
        raise ValueError("theta functions need level >= 1")
    lb = _integral(lam.eps_coords)
    shift = tuple(Fraction(x, k) for x in lb)
    start = Fraction(k, 2) * _min_norm(shift)
    prec = start + order * HALF
    shell = enumerate_shifted_lattice(shift, 2 * prec / k)
    terms = []
    for g in shell.points:
        e = Fraction(k, 2) * inner(g, g)
        if e < prec:
            terms.append((e, tuple(int(k * x) for x in g), 1))
    return QSeries.from_terms(terms, k, d.rank, start, order)


@lru_cache(maxsize=None)
def _numerator(l, h, level, fin, order):
    K = level + h
    v = tuple(a + b for a, b in zip(fin, range(l, 0, -1)))
    shift = tuple(Fraction(x, K) for x in v)
    start = Fraction(K, 2) * _min_norm(shift)
    prec = start + order * HALF
    shell = enumerate_shifted_lattice(shift, 2 * prec / K)
    terms = []
    d = build_root_datum(l)
    for g in shell.points:
        e = Fraction(K, 2) * inner(g, g)
        if e >= prec:
            continue
        beta = tuple(int(K * x) for x in g)
        if dominant_form(beta)[1] == 0:
            continue
        terms.append((e, skew_symmetrize(d, beta)))
    return _series_from_polys(terms, K, l, start, order)


def numerator_series(d, Lam, order):
    """Normalized Weyl-Kac numerator ``A_{Lam+rho}`` (level ``k + h``)."""
    fin = _integral(Lam.eps_coords)
    return _numerator(d.rank, d.dual_coxeter, Lam.level, fin, order)


def denominator_series(d, order):
    """``A_rho``, the Weyl-Kac numerator of the trivial weight."""
    return numerator_series(d, zero_weight(d), order)


@lru_cache(maxsize=None)
def _character(l, h, level, fin, order):
    d = build_root_datum(l)
    Lam = FiniteWeight(level, fin)
    return qs_div(numerator_series(d, Lam, order), denominator_series(d, order))


def character_series(d, Lam, order):
    """Normalized character ``chi_Lam = A_{Lam+rho} / A_rho``."""
    fin = _integral(Lam.eps_coords)
    chi = _character(d.rank, d.dual_coxeter, Lam.level, fin, order)
    if chi.offset != conformal_anomaly(d, Lam):
        raise InconsistentExpansionError(
            f"character offset {chi.offset} disagrees with the conformal anomaly"
        )
    return chi


def _unit(l, i, s):
    v = [0] * l
    v[i] = s
    return tuple(v)


def character_product_level1(d, order):
    """``chi_{Lambda_0}`` from its product form
    ``q^{-l/24} prod_i prod_{r>0} (1 + q^{r-1/2} x_i)(1 + q^{r-1/2} / x_i)``."""
    l = d.rank
    s = QSeries.one(l, order, offset=Fraction(-l, 24), level=1)
    r = 1
    while Fraction(2 * r - 1, 2) < order * HALF:
        for i in range(l):
            for sg in (1, -1):
                s = qs_mul_binomial(s, Fraction(2 * r - 1, 2), _unit(l, i, sg), coeff=1)
        r += 1
    return s


def denominator_product_series(d, order):
    """Product side of the denominator identity in (q, x) coordinates.

    ``q^{l(l+1)/12} a_rho`` times ``(1 - e^{-alpha})^mult`` over the affine
    positive roots with positive delta-part:
    short ``+-e_i + (r-1/2) delta``, middle ``+-e_i +- e_j + r delta``,
    long ``+-2 e_i + 2r delta`` and imaginary ``r delta`` (multiplicity l).
    """
    l = d.rank
    limit = order * HALF
    s = QSeries.make(
        d.dual_coxeter, Fraction(l * (l + 1), 12), [weyl_denominator(l)], order, l
    )

    def factor(s, e, root, mult=1):
        if e >= limit:
            return s
        return qs_mul_binomial(s, e, tuple(-x for x in root), coeff=-1, power=mult)

    r = 1
    while Fraction(2 * r - 1, 2) < limit:
        for i in range(l):
            for sg in (1, -1):
                s = factor(s, Fraction(2 * r - 1, 2), _unit(l, i, sg))
        if r < limit:
            for i in range(l):
                for j in range(i + 1, l):
                    for si in (1, -1):
                        for sj in (1, -1):
                            root = [0] * l
                            root[i], root[j] = si, sj
                            s = factor(s, Fraction(r), tuple(root))
            s = factor(s, Fraction(r), (0,) * l, mult=l)
        for i in range(l):
            for sg in (1, -1):
                s = factor(s, Fraction(2 * r), _unit(l, i, 2 * sg))
        r += 1
    return s


def denominator_identity_check(d, order):
    prec = Fraction(d.rank * (d.rank + 1), 12) + order * HALF
    lhs = denominator_series(d, order)
    rhs = denominator_product_series(d, order)
    if lhs.precision < prec or rhs.precision < prec:
        return False
    return first_difference(lhs, rhs, prec) is None


# --- string functions ------------------------------------------------------


def _balanced(x, k):
    """Representative of ``x mod k`` in ``(-k/2, k/2]``."""
    r = x % k
    return r - k if 2 * r > k else r


def class_min_norm_rep(lam_bar, k):
    """Minimal-norm dominant representative of the W_f-orbit of the class
    ``lam_bar + kM``."""
    mu = [abs(_balanced(x, k)) for x in lam_bar]
    return tuple(sorted(mu, reverse=True))


def class_label(lam_bar, k):
    """Canonical label in ``{0..k-1}^l`` for the W_f-merged class."""
    return tuple(x % k for x in class_min_norm_rep(lam_bar, k))


def theta_classes(l, k):
    """All classes ``lam_bar in {0..k-1}^l`` of ``P^k mod (kM + C delta)``."""
    return list(itertools.product(range(k), repeat=l))


def string_functions(d, Lam, order):
    """String functions ``c^Lam_lam`` as x-free series, keyed by class label.

    Every monomial ``x^mu`` appears in exactly one ``Theta_lam`` (the one with
    ``mu = lam_bar mod k``), with coefficient ``q^{|mu|^2/2k}``; reading off
    the ``x^mu`` coefficient series of the character for the minimal-norm
    ``mu`` of each class solves the expansion.
    """
    k = Lam.level
    if k < 1:
        raise ValueError("string functions need level >= 1")
    chi = character_series(d, Lam, order)
    out = {}
    for cls in sorted({class_label(c, k) for c in theta_classes(d.rank, k)}):
        mu = class_min_norm_rep(cls, k)
        shift = inner(mu, mu) / (2 * k)
        coeffs = [LaurentPoly.constant(c.coefficient(mu), 0) for c in chi.coeffs]
        c_ser = QSeries.make(0, chi.offset - shift, coeffs, chi.order, 0)
        if not c_ser.is_zero():
            out[cls] = c_ser
    return out


def reconstruct_from_strings(d, k, strings, order, start):
    """``sum_lam c_lam Theta_lam`` truncated at ``start + order/2``."""
    total = QSeries.zero(d.rank, start + order * HALF, level=k)
    for cls in theta_classes(d.rank, k):
        label = class_label(cls, k)
        if label not in strings:
            continue
        theta = theta_series(d, FiniteWeight(k, cls), order)
        total = total + strings[label] * theta
    return total


def check_string_expansion(d, Lam, order):
    """True iff the string functions rebuild the character to ``order``."""
    chi = character_series(d, Lam, order)
    strings = string_functions(d, Lam, order)
    rebuilt = reconstruct_from_strings(d, Lam.level, strings, order, chi.offset)
    if rebuilt.precision < chi.precision:
        raise InconsistentExpansionError("reconstruction lost precision")
    return rebuilt.agrees_with(chi, chi.precision)


def weight_multiplicity(d, Lam, mu_bar, depth):
    """``dim L(Lam)_mu`` for the weight with finite part ``mu_bar`` sitting
    ``depth`` below the top (depth a nonnegative half-integer)."""
    depth = Fraction(depth)
    n = depth / HALF
    if depth < 0 or n.denominator != 1:
        raise OutOfRangeError(f"depth {depth} is not a nonnegative half-integer")
    chi = character_series(d, Lam, int(n) + 1)
    return chi.coefficient_at(chi_offset(d, Lam) + depth).coefficient(tuple(mu_bar))


def chi_offset(d, Lam):
    return conformal_anomaly(d, Lam)


def decompose_finite(poly):
    """Write a W_f-invariant polynomial in the basis of finite characters.

    Returns ``{dominant weight: multiplicity}``; raises if the polynomial is
    not invariant (a remainder that cannot be peeled off).
    """
    l = poly.nvars
    d = build_root_datum(l)
    out = {}
    rem = poly
    while rem:
        lam, c = rem.leading()
        if any(lam[i] < lam[i + 1] for i in range(l - 1)) or (l and lam[-1] < 0):
            raise InconsistentExpansionError(f"leading weight {lam} is not dominant")
        out[lam] = c
        rem = rem - finite_character(d, lam) * c
    return out


def laplacian_defect(s):
    """First term ``(exponent, x-exponents)`` not killed by the Laplacian.

    The Laplacian acts on ``e(kt) q^e x^gamma`` by the factor
    ``|gamma|^2 - 2 k e``; returns None when every known term is annihilated.
    """
    k = s.level
    for e, c in s.items():
        for exps, _ in c.sorted_terms():
            if sum(x * x for x in exps) - 2 * k * e != 0:
                return e, exps
    return None


def laplacian_annihilates(d, s):
    return laplacian_defect(s) is None
