"""The finite Weyl group of type C_l as signed permutations.

A ``SignedPerm`` acts on epsilon coordinates by
``(w.v)[perm[i]] = signs[i] * v[i]``, and ``w1 * w2`` is the composite
``v -> w1(w2(v))``.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import RankError
from .series import LaurentPoly

MAX_ENUM_RANK = 8


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class SignedPerm:
    perm: tuple
    signs: tuple

    @property
    def rank(self):
        return len(self.perm)

    @property
    def sign(self):
        s = _perm_sign(self.perm)
        for x in self.signs:
            s *= x
        return s

    def __call__(self, v):
        return act(self, v)

    def __mul__(self, other):
        p1, s1 = self.perm, self.signs
        p2, s2 = other.perm, other.signs
        return SignedPerm(
            tuple(p1[p2[i]] for i in range(len(p2))),
            tuple(s1[p2[i]] * s2[i] for i in range(len(p2))),
        )

    def inverse(self):
        n = len(self.perm)
        perm = [0] * n
        signs = [0] * n
        for i, p in enumerate(self.perm):
            perm[p] = i
            signs[p] = self.signs[i]
        return SignedPerm(tuple(perm), tuple(signs))

    @classmethod
    def identity(cls, l):
        return cls(tuple(range(l)), (1,) * l)


def act(w, v):
    if len(v) != len(w.perm):
        raise ValueError(f"length mismatch: vector of length {len(v)} for rank {len(w.perm)}")
    out = [0] * len(v)
    for i, (p, s) in enumerate(zip(w.perm, w.signs)):
        out[p] = s * v[i]
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_wf(l):
    """All ``2^l l!`` elements, identity first."""
    if l < 1:
        raise RankError(f"rank_zero: rank must be >= 1, got {l}")
    if l > MAX_ENUM_RANK:
        raise RankError(f"rank_too_large: enumeration limited to rank {MAX_ENUM_RANK}")
    out = []
    for perm in itertools.permutations(range(l)):
        for signs in itertools.product((1, -1), repeat=l):
            out.append(SignedPerm(perm, signs))
    return tuple(out)


@lru_cache(maxsize=None)
def _group_table(l):
    return tuple((w.perm, w.signs, w.sign) for w in enumerate_wf(l))


def positive_roots(l):
    """Positive roots of C_l in epsilon coordinates: e_i +- e_j (i<j), 2 e_i."""
    roots = []
    for i in range(l):
        for j in range(i + 1, l):
            for s in (1, -1):
                v = [0] * l
                v[i] = 1
                v[j] = s
                roots.append(tuple(v))
    for i in range(l):
        v = [0] * l
        v[i] = 2
        roots.append(tuple(v))
    return roots


def dominant_form(v):
    """``(w(v), sign(w))`` with ``w(v)`` in the closed dominant chamber.

    The sign is 0 when v lies on a wall, i.e. when the alternating sum over
    its orbit vanishes.
    """
    absv = [abs(x) for x in v]
    sign = 1
    for x in v:
        if x < 0:
            sign = -sign
    order = sorted(range(len(v)), key=lambda i: -absv[i])
    dom = tuple(absv[i] for i in order)
    perm = [0] * len(v)
    for target, src in enumerate(order):
        perm[src] = target
    sign *= _perm_sign(perm)
    if any(x == 0 for x in dom) or len(set(dom)) < len(dom):
        sign = 0
    return dom, sign


@lru_cache(maxsize=4096)
def _skew_dominant(lam):
    l = len(lam)
    t = {}
    for perm, signs, sg in _group_table(l):
        out = [0] * l
        for i in range(l):
            out[perm[i]] = signs[i] * lam[i]
        t[tuple(out)] = sg
    return LaurentPoly(t, l)


def skew_symmetrize(d, lam):
    """``a_lam = sum_w sign(w) x^{w(lam)}``."""
    lam = tuple(int(x) for x in lam)
    if len(lam) != d.rank:
        raise ValueError("weight has the wrong length")
    dom, sign = dominant_form(lam)
    if sign == 0:
        return LaurentPoly.zero(d.rank)
    p = _skew_dominant(dom)
    return p if sign == 1 else -p


@lru_cache(maxsize=None)
def weyl_denominator(l):
    return _skew_dominant(tuple(range(l, 0, -1)))


@lru_cache(maxsize=4096)
def _finite_character(lam):
    l = len(lam)
    rho = range(l, 0, -1)
    num = _skew_dominant(tuple(a + r for a, r in zip(lam, rho)))
    return num.divexact(weyl_denominator(l))


def finite_character(d, lam):
    """Weyl character ``a_{lam+rho} / a_rho`` of a dominant C_l weight."""
    lam = tuple(int(x) for x in lam)
    if len(lam) != d.rank:
        raise ValueError("weight has the wrong length")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or (lam and lam[-1] < 0):
        raise ValueError(f"{lam} is not dominant")
    return _finite_character(lam)


def weyl_dimension(lam):
    """Dimension of the C_l irreducible with highest weight ``lam`` by the
    product over positive roots (independent of the group sum)."""
    l = len(lam)
    rho = list(range(l, 0, -1))
    shifted = [a + r for a, r in zip(lam, rho)]
    num, den = Fraction(1), Fraction(1)
    for alpha in positive_roots(l):
        num *= sum(a * b for a, b in zip(shifted, alpha))
        den *= sum(a * b for a, b in zip(rho, alpha))
    return num / den


def det_cofactor(matrix):
    """Determinant by cofactor expansion along the first column.

    Works for any commutative ring elements supporting ``+``, ``-`` and ``*``.
    """
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    for r in range(n):
        minor = [row[1:] for k, row in enumerate(matrix) if k != r]
        term = matrix[r][0] * det_cofactor(minor)
        if r % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _var_power(n, i, e):
    exps = [0] * n
    exps[i] = e
    return LaurentPoly.monomial(exps)


def _ones(n, e):
    return LaurentPoly.monomial([e] * n)


def verify_cl_denominator(n):
    """``det(X_i^j - X_i^-j) = (prod X)^-n prod_{i<j} (1-X_iX_j)(X_i-X_j) prod (X_i^2-1)``."""
    if not 1 <= n <= 4:
        raise ValueError("n must be in 1..4")
    one = LaurentPoly.one(n)
    mat = [[_var_power(n, i, j) - _var_power(n, i, -j) for j in range(1, n + 1)] for i in range(n)]
    lhs = det_cofactor(mat)
    rhs = _ones(n, -n)
    for i in range(n):
        for j in range(i + 1, n):
            xi, xj = _var_power(n, i, 1), _var_power(n, j, 1)
            rhs = rhs * (one - xi * xj) * (xi - xj)
    for i in range(n):
        rhs = rhs * (_var_power(n, i, 2) - one)
    return lhs == rhs


def verify_super_denominator(n):
    """The B(0,n) identity
    ``det(X_i^{j-1/2} + X_i^{-j+1/2}) = (prod X)^{-n+1/2} prod_{i<j}(1-X_iX_j)(X_i-X_j) prod(1+X_i)``,
    checked in the variables ``Y_i = X_i^{1/2}``."""
    if not 1 <= n <= 4:
        raise ValueError("n must be in 1..4")
    one = LaurentPoly.one(n)
    mat = [
        [_var_power(n, i, 2 * j - 1) + _var_power(n, i, -(2 * j - 1)) for j in range(1, n + 1)]
        for i in range(n)
    ]
    lhs = det_cofactor(mat)
    rhs = _ones(n, -2 * n + 1)
    for i in range(n):
        for j in range(i + 1, n):
            xi, xj = _var_power(n, i, 2), _var_power(n, j, 2)
            rhs = rhs * (one - xi * xj) * (xi - xj)
    for i in range(n):
        rhs = rhs * (one + _var_power(n, i, 2))
    return lhs == rhs
