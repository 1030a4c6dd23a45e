"""Exact sparse Laurent polynomials and truncated q-series.

Two value types live here:

``LaurentPoly``
    finitely supported map from integer exponent vectors to Python ints.
    Exponent vectors are packed into a single int with balanced base-``2**24``
    digits, so monomial multiplication is integer addition and comparing
    packed keys is lexicographic comparison of the vectors.

``QSeries``
    a truncated series ``e(level*t) * sum_n c_n q^(offset + n*step)`` whose
    coefficients ``c_n`` are ``LaurentPoly`` values.  ``q = exp(2 pi i tau)``
    throughout the package.  ``order`` counts grid steps above ``offset``:
    the series is known exactly for every exponent ``< offset + order*step``.
    Everything below ``offset`` is zero, so a zero series is stored with
    ``order == 0`` and ``offset`` equal to its precision.
"""

import cmath
import heapq
import json
import math
from fractions import Fraction

import numpy as np

from .errors import (
    IncompatibleGridError,
    LevelMismatchError,
    NonexactDivisionError,
    NotConvergentError,
)

_BITS = 24
_RADIX = 1 << _BITS
_HALF = _RADIX >> 1

HALF = Fraction(1, 2)


def pack(exps):
    key = 0
    for e in exps:
        if not -_HALF < e < _HALF:
            raise OverflowError(f"exponent {e} out of packable range")
        key = key * _RADIX + e
    return key


def unpack(key, nvars):
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        d = key % _RADIX
        if d >= _HALF:
            d -= _RADIX
        out[i] = d
        key = (key - d) >> _BITS
    return tuple(out)


class LaurentPoly:
    """Element of Z[x_1^{+-1}, ..., x_n^{+-1}] with exact integer coefficients."""

    __slots__ = ("nvars", "_t", "_exps_cache")

    def __init__(self, terms=None, nvars=None):
        if nvars is None:
            if not terms:
                raise ValueError("nvars required for an empty polynomial")
            nvars = len(next(iter(terms)))
        self.nvars = nvars
        t = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError("exponent vector has wrong length")
            if c:
                k = pack(exps)
                t[k] = t.get(k, 0) + int(c)
        self._t = {k: c for k, c in t.items() if c}
        self._exps_cache = None

    @classmethod
    def _raw(cls, packed, nvars):
        p = cls.__new__(cls)
        p.nvars = nvars
        p._t = packed
        p._exps_cache = None
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw({}, nvars)

    @classmethod
    def one(cls, nvars):
        return cls._raw({0: 1}, nvars)

    @classmethod
    def monomial(cls, exps, coeff=1, nvars=None):
        exps = tuple(exps)
        n = len(exps) if nvars is None else nvars
        return cls._raw({pack(exps): coeff} if coeff else {}, n)

    @classmethod
    def constant(cls, c, nvars):
        return cls._raw({0: c} if c else {}, nvars)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        """Dict ``{exponent tuple: coefficient}``."""
        return {unpack(k, self.nvars): c for k, c in self._t.items()}

    def sorted_terms(self):
        """Terms in increasing lexicographic order of exponents."""
        return [(unpack(k, self.nvars), self._t[k]) for k in sorted(self._t)]

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self):
        return self._t.get(0, 0)

    def coefficient(self, exps):
        return self._t.get(pack(exps), 0)

    def coefficient_sum(self):
        return sum(self._t.values())

    def abs_sum(self):
        return sum(abs(c) for c in self._t.values())

    def leading(self):
        """Lexicographically largest ``(exponents, coefficient)``."""
        k = max(self._t)
        return unpack(k, self.nvars), self._t[k]

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.nvars)
        self._check(other)
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return LaurentPoly._raw(t, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._t.items()}, self.nvars)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()}, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in t.items() if c}, self.nvars)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not polynomial")
        out = LaurentPoly.one(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, exps, coeff=1):
        """Multiply by the monomial ``coeff * x^exps``."""
        s = pack(exps)
        return LaurentPoly._raw({k + s: c * coeff for k, c in self._t.items()}, self.nvars)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.constant_term() == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._t == other._t

    def __hash__(self):
        return hash((self.nvars, frozenset(self._t.items())))

    def divexact(self, other):
        """Exact quotient ``self / other``; raises if a remainder is left.

        Leading-term elimination under lex order.  A true quotient has all of
        its exponents between ``min(self) - min(other)`` and
        ``max(self) - max(other)``, which bounds the loop.
        """
        self._check(other)
        if not other._t:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._t:
            return LaurentPoly.zero(self.nvars)
        d = other._t
        dmax, dmin = max(d), min(d)
        dlead = d[dmax]
        floor = min(self._t) - dmin
        if len(d) == 1:
            q = {}
            for k, c in self._t.items():
                qc, r = divmod(c, dlead)
                if r:
                    raise NonexactDivisionError("monomial division leaves a remainder")
                q[k - dmax] = qc
            return LaurentPoly._raw(q, self.nvars)
        rem = dict(self._t)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        q = {}
        while heap:
            k = -heapq.heappop(heap)
            c = rem.get(k, 0)
            if not c:
                continue
            if heap and -heap[0] == k:
                continue
            qk = k - dmax
            qc, r = divmod(c, dlead)
            if r or qk < floor:
                raise NonexactDivisionError("Laurent polynomial division is not exact")
            q[qk] = qc
            for dk, dc in d.items():
                nk = qk + dk
                v = rem.get(nk, 0) - qc * dc
                if v:
                    if nk not in rem or not rem[nk]:
                        heapq.heappush(heap, -nk)
                    rem[nk] = v
                else:
                    rem.pop(nk, None)
        return LaurentPoly._raw(q, self.nvars)

    # -- exponent-wise maps -------------------------------------------------

    def map_exponents(self, fn):
        """Apply ``fn`` (tuple -> tuple) to every exponent vector."""
        n = self.nvars
        t = {}
        for k, c in self._t.items():
            nk = pack(fn(unpack(k, n)))
            v = t.get(nk, 0) + c
            if v:
                t[nk] = v
            else:
                t.pop(nk, None)
        return LaurentPoly._raw(t, n)

    def scale_terms(self, fn):
        """Multiply each coefficient by the integer ``fn(exponents)``."""
        n = self.nvars
        t = {}
        for k, c in self._t.items():
            v = c * fn(unpack(k, n))
            if v:
                t[k] = v
        return LaurentPoly._raw(t, n)

    def lift(self, nvars):
        """Embed a constant polynomial into a ring with ``nvars`` variables."""
        if self.nvars == nvars:
            return self
        if not self.is_constant():
            raise ValueError("only constants can change variable count")
        return LaurentPoly.constant(self.constant_term(), nvars)

    # -- evaluation and display ---------------------------------------------

    def _exps_array(self):
        if self._exps_cache is None:
            keys = list(self._t)
            exps = np.array([unpack(k, self.nvars) for k in keys], dtype=float).reshape(
                len(keys), self.nvars
            )
            coeffs = np.array([float(self._t[k]) for k in keys])
            self._exps_cache = (exps, coeffs)
        return self._exps_cache

    def evaluate_log(self, logx):
        """Evaluate at ``x_j = exp(logx_j)`` (``logx`` may be complex)."""
        if not self._t:
            return 0j
        exps, coeffs = self._exps_array()
        logx = np.asarray(logx, dtype=complex).reshape(self.nvars)
        return complex(np.sum(coeffs * np.exp(exps @ logx)))

    def __call__(self, *x):
        if not self._t:
            return 0
        return self.evaluate_log([cmath.log(v) for v in x]) if self.nvars else self.constant_term()

    def __repr__(self):
        if not self._t:
            return "0"
        names = [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for exps, c in reversed(self.sorted_terms()):
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [{"exp": list(e), "c": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, nvars):
        return cls({tuple(t["exp"]): int(t["c"]) for t in data}, nvars)


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _steps(delta, step):
    n = delta / step
    if n.denominator != 1:
        raise IncompatibleGridError(f"exponent shift {delta} is not a multiple of {step}")
    return int(n)


class QSeries:
    """Truncated q-series with Laurent-polynomial coefficients.

    Construct with :meth:`QSeries.make`, which strips leading zero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("level", "offset", "step", "coeffs", "order", "nvars")

    def __init__(self, level, offset, coeffs, order, nvars, step=HALF):
        self.level = level
        self.offset = _frac(offset)
        self.step = _frac(step)
        self.coeffs = tuple(coeffs)
        self.order = order
        self.nvars = nvars

    @classmethod
    def make(cls, level, offset, coeffs, order, nvars, step=HALF):
        offset, step = _frac(offset), _frac(step)
        coeffs = list(coeffs)[:order]
        coeffs += [LaurentPoly.zero(nvars)] * (order - len(coeffs))
        lead = 0
        while lead < order and not coeffs[lead]:
            lead += 1
        return cls(level, offset + lead * step, coeffs[lead:], order - lead, nvars, step)

    @classmethod
    def from_terms(cls, terms, level, nvars, start, order, step=HALF):
        """Build from ``(q_exponent, x_exponents, coeff)`` triples.

        Only exponents in ``[start, start + order*step)`` are kept; exponents
        below ``start`` are an error since they would be silently lost.
        """
        start = _frac(start)
        buckets = {}
        for e, exps, c in terms:
            n = _steps(_frac(e) - start, step)
            if n < 0:
                raise ValueError(f"term q^{e} lies below the declared start {start}")
            if n < order:
                buckets.setdefault(n, {})
                k = pack(exps)
                buckets[n][k] = buckets[n].get(k, 0) + c
        coeffs = [
            LaurentPoly._raw({k: c for k, c in buckets.get(n, {}).items() if c}, nvars)
            for n in range(order)
        ]
        return cls.make(level, start, coeffs, order, nvars, step)

    @classmethod
    def constant(cls, poly, order, offset=0, level=0, step=HALF):
        if isinstance(poly, int):
            raise TypeError("pass a LaurentPoly; use QSeries.one for integers")
        return cls.make(level, offset, [poly], order, poly.nvars, step)

    @classmethod
    def one(cls, nvars, order, offset=0, level=0, step=HALF):
        return cls.make(level, offset, [LaurentPoly.one(nvars)], order, nvars, step)

    @classmethod
    def zero(cls, nvars, precision, level=0, step=HALF):
        return cls(level, precision, (), 0, nvars, step)

    # -- inspection ---------------------------------------------------------

    @property
    def precision(self):
        """Absolute exponent below which the series is known exactly."""
        return self.offset + self.order * self.step

    def is_zero(self):
        return not any(self.coeffs)

    def exponents(self):
        return [self.offset + n * self.step for n in range(self.order)]

    def coefficient_at(self, e):
        """Coefficient of ``q^e`` (zero polynomial below the offset)."""
        e = _frac(e)
        if e >= self.precision:
            raise ValueError(f"q^{e} is beyond the known precision {self.precision}")
        n = _steps(e - self.offset, self.step) if e >= self.offset else -1
        if n < 0:
            return LaurentPoly.zero(self.nvars)
        return self.coeffs[n]

    def items(self):
        """Nonzero ``(exponent, coefficient)`` pairs."""
        return [(self.offset + n * self.step, c) for n, c in enumerate(self.coeffs) if c]

    def truncate(self, order):
        """Keep at most ``order`` grid steps above the offset."""
        if order >= self.order:
            return self
        return QSeries.make(self.level, self.offset, self.coeffs[:order], order, self.nvars, self.step)

    def truncate_to(self, precision):
        return self.truncate(max(0, _steps(_frac(precision) - self.offset, self.step)))

    def map_coeffs(self, fn, level=None, nvars=None):
        nv = self.nvars if nvars is None else nvars
        return QSeries.make(
            self.level if level is None else level,
            self.offset,
            [fn(c) for c in self.coeffs],
            self.order,
            nv,
            self.step,
        )

    def lift(self, nvars):
        """View an x-free series as a series in ``nvars`` variables."""
        if nvars == self.nvars:
            return self
        return self.map_coeffs(lambda c: c.lift(nvars), nvars=nvars)

    def with_level(self, level):
        return QSeries(level, self.offset, self.coeffs, self.order, self.nvars, self.step)

    def dilate(self, m):
        """Substitute ``q -> q^m`` (for ``f(m*tau)``)."""
        m = int(m)
        coeffs = []
        zero = LaurentPoly.zero(self.nvars)
        for c in self.coeffs:
            coeffs.append(c)
            coeffs.extend([zero] * (m - 1))
        return QSeries.make(self.level, self.offset * m, coeffs, self.order * m, self.nvars, self.step)

    def integer_coeffs(self):
        """Coefficients of an x-free series as plain ints."""
        if any(not c.is_constant() for c in self.coeffs):
            raise ValueError("series has x-dependent coefficients")
        return [c.constant_term() for c in self.coeffs]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        return qs_add(self, other)

    def __sub__(self, other):
        return qs_add(self, -other)

    def __neg__(self):
        return QSeries(self.level, self.offset, [-c for c in self.coeffs], self.order, self.nvars, self.step)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return QSeries.zero(self.nvars, self.precision, self.level, self.step)
            return QSeries(self.level, self.offset, [c * other for c in self.coeffs], self.order, self.nvars, self.step)
        if isinstance(other, LaurentPoly):
            return self.map_coeffs(lambda c: c * other)
        return qs_mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return qs_div(self, other)

    def __pow__(self, n):
        out = QSeries.one(self.nvars, self.order, level=0, step=self.step)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.level == other.level
            and self.nvars == other.nvars
            and self.step == other.step
            and self.offset == other.offset
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def agrees_with(self, other, precision=None):
        """True iff both series coincide below ``precision`` (default: the
        smaller of the two precisions)."""
        if self.level != other.level or self.nvars != other.nvars:
            return False
        p = min(self.precision, other.precision) if precision is None else _frac(precision)
        if p > self.precision or p > other.precision:
            raise ValueError("requested precision exceeds what is known")
        return first_difference(self, other, p) is None

    def __repr__(self):
        head = f"QSeries(level={self.level}, offset={self.offset}, order={self.order}"
        terms = ", ".join(f"q^{e}: {c!r}" for e, c in self.items()[:3])
        return f"{head}, [{terms}{', ...' if len(self.items()) > 3 else ''}])"

    # -- serialization ------------------------------------------------------

    def to_dict(self):
        return {
            "level": self.level,
            "offset": str(self.offset),
            "step": str(self.step),
            "order": self.order,
            "nvars": self.nvars,
            "coeffs": [
                {"n": n, "poly": c.to_json()} for n, c in enumerate(self.coeffs) if c
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        nvars = data["nvars"]
        order = data["order"]
        coeffs = [LaurentPoly.zero(nvars)] * order
        for entry in data["coeffs"]:
            coeffs[entry["n"]] = LaurentPoly.from_json(entry["poly"], nvars)
        return cls.make(
            data["level"], Fraction(data["offset"]), coeffs, order, nvars, Fraction(data["step"])
        )


def first_difference(a, b, precision):
    """First exponent below ``precision`` where ``a`` and ``b`` differ, else None."""
    if a.step != b.step:
        raise IncompatibleGridError("series live on different step sizes")
    _steps(a.offset - b.offset, a.step)
    e = min(a.offset, b.offset)
    while e < precision:
        ca = a.coefficient_at(e) if e < a.precision else None
        cb = b.coefficient_at(e) if e < b.precision else None
        if ca != cb:
            return e
        e += a.step
    return None


def _align(a, b):
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if a.step != b.step:
        raise IncompatibleGridError(f"step mismatch: {a.step} vs {b.step}")


def qs_add(a, b):
    """Exact sum, truncated to the smaller of the two precisions."""
    if a.level != b.level:
        raise LevelMismatchError(f"cannot add series of level {a.level} and {b.level}")
    _align(a, b)
    step = a.step
    start = min(a.offset, b.offset)
    prec = min(a.precision, b.precision)
    order = max(0, _steps(prec - start, step))
    da = _steps(a.offset - start, step)
    db = _steps(b.offset - start, step)
    zero = LaurentPoly.zero(a.nvars)
    coeffs = []
    for n in range(order):
        ca = a.coeffs[n - da] if 0 <= n - da < a.order else zero
        cb = b.coeffs[n - db] if 0 <= n - db < b.order else zero
        coeffs.append(ca + cb if (ca and cb) else (ca or cb))
    if order == 0:
        return QSeries.zero(a.nvars, prec, a.level, step)
    out = QSeries.make(a.level, start, coeffs, order, a.nvars, step)
    if out.order == 0:
        return QSeries.zero(a.nvars, prec, a.level, step)
    return out


def qs_mul(a, b):
    """Truncated Cauchy product; levels and offsets add."""
    if a.nvars == 0 and b.nvars:
        a = a.lift(b.nvars)
    elif b.nvars == 0 and a.nvars:
        b = b.lift(a.nvars)
    _align(a, b)
    order = min(a.order, b.order)
    offset = a.offset + b.offset
    level = a.level + b.level
    if order == 0:
        return QSeries.zero(a.nvars, offset + order * a.step, level, a.step)
    coeffs = []
    ac, bc = a.coeffs, b.coeffs
    for n in range(order):
        acc = None
        for m in range(n + 1):
            x, y = ac[m], bc[n - m]
            if x and y:
                acc = x * y if acc is None else acc + x * y
        coeffs.append(acc if acc is not None else LaurentPoly.zero(a.nvars))
    return QSeries.make(level, offset, coeffs, order, a.nvars, a.step)


def qs_div(num, den):
    """Exact quotient ``num / den``.

    Solves ``c_n * den_0 = num_n - sum_{m<n} c_m den_{n-m}`` one coefficient at
    a time, each step an exact Laurent division.  Raises
    ``NonexactDivisionError`` carrying the offending q-exponent when ``num``
    is not a multiple of ``den``.
    """
    if den.nvars == 0 and num.nvars:
        den = den.lift(num.nvars)
    _align(num, den)
    if den.is_zero():
        raise ZeroDivisionError("division by a zero series")
    offset = num.offset - den.offset
    level = num.level - den.level
    order = min(num.order, den.order)
    if num.is_zero() or order == 0:
        return QSeries.zero(num.nvars, offset + order * num.step, level, num.step)
    d0 = den.coeffs[0]
    dc = den.coeffs
    out = []
    for n in range(order):
        r = num.coeffs[n]
        for m in range(max(0, n - den.order + 1), n):
            if out[m] and dc[n - m]:
                r = r - out[m] * dc[n - m]
        try:
            out.append(r.divexact(d0))
        except NonexactDivisionError as exc:
            e = offset + n * num.step
            raise NonexactDivisionError(f"series division fails at q^{e}: {exc}", exponent=e) from None
    return QSeries.make(level, offset, out, order, num.nvars, num.step)


def qs_mul_binomial(s, e, exps=None, coeff=-1, power=1):
    """Multiply ``s`` by ``(1 + coeff * x^exps * q^e)^power`` (power may be negative).

    Negative powers expand the geometric series, which is only valid because
    ``e > 0``.
    """
    e = _frac(e)
    k = _steps(e, s.step)
    if k <= 0:
        raise ValueError("binomial factor needs a positive q-exponent")
    exps = tuple(exps) if exps is not None else (0,) * s.nvars
    out = list(s.coeffs)
    for _ in range(abs(power)):
        if power > 0:
            # descending n keeps using old values
            for n in range(len(out) - 1, k - 1, -1):
                if out[n - k]:
                    out[n] = out[n] + out[n - k].shift(exps, coeff)
        else:
            # 1/(1 + c m) = sum (-c m)^j ; ascending n feeds updated values
            for n in range(k, len(out)):
                if out[n - k]:
                    out[n] = out[n] + out[n - k].shift(exps, -coeff)
    return QSeries.make(s.level, s.offset, out, s.order, s.nvars, s.step)


def qs_inverse_product(exponent_multiplicities, order, nvars=0, step=HALF):
    """Expand ``prod_e (1 - q^e)^{m_e}`` exactly to ``order`` grid steps.

    Keys are positive exponents on the grid, values are (possibly negative)
    integer multiplicities.
    """
    s = QSeries.one(nvars, order, step=step)
    for e, m in sorted(exponent_multiplicities.items()):
        e = _frac(e)
        if e <= 0:
            raise ValueError("exponents must be positive")
        if e >= order * step or m == 0:
            continue
        s = qs_mul_binomial(s, e, coeff=-1, power=m)
    return s


def tail_bound(s, tau):
    """Crude bound on the truncation error of ``s`` at ``tau``.

    ``|q|^precision`` times the largest coefficient 1-norm seen so far, times
    a geometric factor for the unseen terms.
    """
    r = math.exp(-2 * math.pi * complex(tau).imag)
    if not s.coeffs:
        size = 1.0
    else:
        size = max(float(c.abs_sum()) for c in s.coeffs) or 1.0
    rs = r ** float(s.step)
    return size * r ** float(s.precision) / (1.0 - rs)


def qs_eval(a, tau, z=None, t=0.0, with_bound=False):
    """Evaluate ``a`` at ``(tau, z, t)``.

    ``z`` may be complex (transformation checks evaluate at ``z/tau``).
    Returns the value, or ``(value, tail_bound)`` when ``with_bound``.
    """
    tau = complex(tau)
    if tau.imag <= 0:
        raise NotConvergentError(f"Im(tau) must be positive, got {tau}")
    if z is None:
        z = np.zeros(a.nvars)
    logx = 2j * np.pi * np.asarray(z, dtype=complex).reshape(a.nvars)
    total = 0j
    for e, c in a.items():
        total += c.evaluate_log(logx) * cmath.exp(2j * cmath.pi * tau * float(e))
    value = total * cmath.exp(2j * cmath.pi * a.level * complex(t))
    if with_bound:
        return value, tail_bound(a, tau)
    return value
