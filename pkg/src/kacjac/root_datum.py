"""Root datum of the twisted affine algebra A_{2l}^{(2)}.

Weights are stored as ``(level, finite part)`` with the finite part written in
the orthonormal epsilon basis of the C_l Cartan subalgebra.  Coefficients of
``delta`` are never stored: every series built from a weight is the
normalized one, whose leading q-exponent already absorbs them.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import RankError


@dataclass(frozen=True)
class RootDatum:
    rank: int
    cartan: tuple
    labels: tuple
    colabels: tuple
    coxeter: int
    dual_coxeter: int
    rho_bar: tuple
    fund_bar: tuple

    def to_dict(self):
        return {
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "labels": list(self.labels),
            "colabels": list(self.colabels),
            "coxeter": self.coxeter,
            "dual_coxeter": self.dual_coxeter,
            "rho_bar": list(self.rho_bar),
            "fund_bar": [list(v) for v in self.fund_bar],
        }


@dataclass(frozen=True)
class FiniteWeight:
    """A weight known by its level ``<c, lambda>`` and its projection to the
    finite Cartan dual."""

    level: int
    eps_coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "eps_coords", tuple(Fraction(x) for x in self.eps_coords))

    @property
    def integral_coords(self):
        if any(x.denominator != 1 for x in self.eps_coords):
            raise ValueError(f"{self.eps_coords} is not an integer vector")
        return tuple(int(x) for x in self.eps_coords)

    def is_dominant(self):
        c = self.eps_coords
        return all(x.denominator == 1 for x in c) and all(
            c[i] >= c[i + 1] for i in range(len(c) - 1)
        ) and (not c or c[-1] >= 0)

    def __add__(self, other):
        return FiniteWeight(
            self.level + other.level, tuple(a + b for a, b in zip(self.eps_coords, other.eps_coords))
        )


def build_root_datum(l):
    if l < 1:
        raise RankError(f"rank_zero: rank must be >= 1, got {l}")
    n = l + 1
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2
        if i + 1 < n:
            A[i][i + 1] = -1
            A[i + 1][i] = -1
    if l == 1:
        A[0][1] = -4
    else:
        A[0][1] = -2
        A[l - 1][l] = -2
    labels = (2,) * l + (1,)
    colabels = (1,) + (2,) * l
    rho_bar = tuple(range(l, 0, -1))
    fund_bar = tuple(tuple([1] * i + [0] * (l - i)) for i in range(1, l + 1))
    return RootDatum(
        rank=l,
        cartan=tuple(tuple(r) for r in A),
        labels=labels,
        colabels=colabels,
        coxeter=sum(labels),
        dual_coxeter=sum(colabels),
        rho_bar=rho_bar,
        fund_bar=fund_bar,
    )


def norm_I(d, i, j):
    """``I(alpha_i, alpha_j) = a_i^vee / a_i * a_ij``."""
    return Fraction(d.colabels[i], d.labels[i]) * d.cartan[i][j]


def inner(u, v):
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


# --- named weights ---------------------------------------------------------


def fundamental_weight(d, i):
    """``Lambda_i``: level ``a_i^vee``, finite part ``varpi_i`` (zero for i=0)."""
    if not 0 <= i <= d.rank:
        raise ValueError(f"index {i} outside 0..{d.rank}")
    fin = (0,) * d.rank if i == 0 else d.fund_bar[i - 1]
    return FiniteWeight(d.colabels[i], fin)


def level2_weight(d, i):
    """``lambda_i``: ``2 Lambda_0`` for i = 0, else ``Lambda_i``."""
    if i == 0:
        return FiniteWeight(2, (0,) * d.rank)
    return fundamental_weight(d, i)


def rho(d):
    return FiniteWeight(d.dual_coxeter, d.rho_bar)


def zero_weight(d):
    return FiniteWeight(0, (0,) * d.rank)


def parse_weight(d, spec):
    """Parse ``"L0"``, ``"2L0"`` or ``"Li"`` (1 <= i <= rank)."""
    s = spec.strip()
    if s == "2L0":
        return level2_weight(d, 0)
    if s.startswith("L") and s[1:].isdigit():
        i = int(s[1:])
        if 0 <= i <= d.rank:
            return fundamental_weight(d, i)
    raise ValueError(f"unknown weight {spec!r} for rank {d.rank}")


def conformal_anomaly(d, w):
    """``m_Lambda = |Lambda+rho|^2 / 2(k+h) - |rho|^2 / 2h`` with h the dual
    Coxeter number; the Lambda_0 component is isotropic and orthogonal to the
    finite part, so only finite parts enter the norms."""
    h = d.dual_coxeter
    shifted = [a + b for a, b in zip(w.eps_coords, d.rho_bar)]
    return inner(shifted, shifted) / (2 * (w.level + h)) - inner(d.rho_bar, d.rho_bar) / (2 * h)
