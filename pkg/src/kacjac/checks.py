"""The exact (integer arithmetic) verification battery for one rank."""

from dataclasses import dataclass, field

from .jacobian import t2_congruence, verify_main_theorem
from .modular import verify_triple_product
from .root_datum import FiniteWeight, build_root_datum, fundamental_weight, level2_weight
from .theta import (
    character_product_level1,
    character_series,
    check_string_expansion,
    denominator_identity_check,
    laplacian_annihilates,
    theta_series,
)
from .weyl import verify_cl_denominator, verify_super_denominator


@dataclass
class ExactCheck:
    name: str
    ok: bool
    details: dict = field(default_factory=dict)

    @property
    def summary(self):
        return f"{self.name}: {'ok' if self.ok else 'FAILED'}"

    def to_dict(self):
        return {"name": self.name, "ok": self.ok, "summary": self.summary, "details": self.details}


def qseries_suite(l, order):
    d = build_root_datum(l)
    out = []
    out.append(ExactCheck("denominator_identity", denominator_identity_check(d, order)))
    L0 = fundamental_weight(d, 0)
    out.append(
        ExactCheck(
            "level1_product",
            character_series(d, L0, order).agrees_with(character_product_level1(d, order)),
        )
    )
    for i in range(l + 1):
        w = level2_weight(d, i)
        label = "2L0" if i == 0 else f"L{i}"
        out.append(ExactCheck(f"string_functions {label}", check_string_expansion(d, w, order)))
    out.append(ExactCheck("string_functions L0", check_string_expansion(d, L0, order)))
    lap = all(
        laplacian_annihilates(d, theta_series(d, FiniteWeight(k, (j,) * l), order))
        for k in (1, 2)
        for j in range(k)
    )
    out.append(ExactCheck("laplacian", lap))
    for i in range(l + 1):
        r = verify_main_theorem(d, i, order)
        out.append(
            ExactCheck(
                f"main_theorem i={i}",
                r.ok,
                {"constant": str(r.constant), "offset": str(r.offset),
                 "mismatch_at": None if r.mismatch_at is None else str(r.mismatch_at)},
            )
        )
        bad = t2_congruence(d, i, order)
        out.append(ExactCheck(f"t2_congruence i={i}", not bad, {"violations": [str(e) for e in bad]}))
    n = min(l, 4)
    out.append(ExactCheck(f"cl_denominator n={n}", verify_cl_denominator(n)))
    out.append(ExactCheck(f"super_denominator n={n}", verify_super_denominator(n)))
    out.append(ExactCheck("triple_product", verify_triple_product(order)))
    return out
