"""Exact q-series for A_{2l}^{(2)} characters, their Jacobians, and checks of
the modular identities they satisfy."""

from .errors import KacJacError
from .jacobian import (
    algebraic_independence_witness,
    directional_derivative,
    extract_F,
    jacobian_series,
    verify_main_theorem,
)
from .modular import F_rM_series, eta_series, theta_nm_series, verify_triple_product
from .root_datum import (
    FiniteWeight,
    RootDatum,
    build_root_datum,
    conformal_anomaly,
    fundamental_weight,
    level2_weight,
    parse_weight,
)
from .series import LaurentPoly, QSeries, qs_div, qs_eval, qs_mul
from .theta import (
    character_series,
    denominator_series,
    numerator_series,
    string_functions,
    theta_series,
)
from .weyl import SignedPerm, enumerate_wf, finite_character, skew_symmetrize

__version__ = "0.1.0"


def clear_caches():
    """Drop every memoized series (useful for timing from a cold start)."""
    from . import jacobian, theta, weyl

    for fn in (
        jacobian._jacobian,
        jacobian._extract,
        theta._numerator,
        theta._character,
        weyl._skew_dominant,
        weyl._finite_character,
    ):
        fn.cache_clear()
