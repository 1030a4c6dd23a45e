"""Command-line interface: ``kacjac <subcommand> [flags]``.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad usage.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .checks import qseries_suite
from .errors import (
    InconsistentExpansionError,
    MismatchError,
    NonexactDivisionError,
    NotProportionalError,
)
from .jacobian import extract_F, verify_main_theorem
from .modular import F_rM_series
from .numeric import numeric_suite, smatrix_level1, smatrix_level2
from .root_datum import build_root_datum, parse_weight
from .theta import character_series, string_functions

MATH_ERRORS = (InconsistentExpansionError, MismatchError, NonexactDivisionError, NotProportionalError)


@dataclass
class RunConfig:
    rank: int = 1
    order: int = 12
    tolerance: float = 1e-6
    format: str = "json"
    seed: int = 0
    tau_samples: tuple = (1j, 0.3 + 1.2j)


class UsageError(Exception):
    pass


def _round(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {str(k): _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    if hasattr(obj, "item"):
        return _round(obj.item())
    return obj


def _emit(cfg, record, text=None):
    if cfg.format == "json":
        line = json.dumps(_round(record), sort_keys=True, ensure_ascii=False)
    else:
        line = text if text is not None else _text(record)
    sys.stdout.write(line + "\n")


def _text(record, indent=""):
    width = max((len(str(k)) for k in record), default=0)
    lines = []
    for k in sorted(record):
        v = record[k]
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{str(k).ljust(width)}  {v}")
    return "\n".join(lines)


def _series_text(s):
    head = f"level {s.level}  offset {s.offset}  step {s.step}  order {s.order}"
    body = [f"  q^{e}: {c!r}" for e, c in s.items()]
    return "\n".join([head] + body)


def _parse_tau(text):
    try:
        re_s, im_s = text.split(",")
        tau = complex(float(re_s), float(im_s))
    except ValueError:
        raise argparse.ArgumentTypeError(f"tau must look like 're,im', got {text!r}")
    if tau.imag <= 0:
        raise argparse.ArgumentTypeError("tau must lie in the upper half plane")
    return tau


def _default_order():
    env = os.environ.get("KACJAC_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return 12


# -- subcommands --------------------------------------------------------------


def cmd_root_data(cfg):
    d = build_root_datum(cfg.rank)
    rec = d.to_dict()
    if cfg.format == "text":
        nodes = range(d.rank + 1)
        rows = [
            "node     " + " ".join(f"{i:>3}" for i in nodes),
            "label    " + " ".join(f"{a:>3}" for a in d.labels),
            "colabel  " + " ".join(f"{a:>3}" for a in d.colabels),
            f"coxeter {d.coxeter}  dual coxeter {d.dual_coxeter}",
            "cartan:",
        ] + ["  " + " ".join(f"{a:>3}" for a in r) for r in d.cartan]
        _emit(cfg, rec, "\n".join(rows))
    else:
        _emit(cfg, rec)
    return 0


def cmd_character(cfg, weight_spec):
    d = build_root_datum(cfg.rank)
    w = parse_weight(d, weight_spec)
    s = character_series(d, w, cfg.order)
    rec = dict(s.to_dict(), weight=weight_spec)
    _emit(cfg, rec, _series_text(s))
    return 0


def cmd_jacobian(cfg, i):
    d = build_root_datum(cfg.rank)
    if not 0 <= i <= d.rank:
        raise UsageError(f"--drop must lie in 0..{d.rank}")
    F = extract_F(d, i, cfg.order)
    r = verify_main_theorem(d, i, cfg.order)
    rec = dict(F.to_dict(), drop=i, constant=str(r.constant), main_theorem_ok=r.ok)
    _emit(cfg, rec, _series_text(F) + f"\nconstant {r.constant}  main theorem {'ok' if r.ok else 'FAILED'}")
    return 0 if r.ok else 1


def cmd_modular_forms(cfg, M, r):
    s = F_rM_series(r, M, cfg.order)
    rec = dict(s.to_dict(), M=M, r=r)
    _emit(cfg, rec, _series_text(s))
    return 0


def cmd_smatrix(cfg, level):
    if level == 1:
        v = smatrix_level1(cfg.rank)
        rec = {"level": 1, "rank": cfg.rank, "value": [v.real, v.imag]}
        _emit(cfg, rec, f"a(L0, L0) = {v.real:.12g} {v.imag:+.12g}i")
    elif level == 2:
        m = smatrix_level2(cfg.rank)
        rec = {"level": 2, "rank": cfg.rank, "matrix": m.tolist()}
        text = "\n".join(" ".join(f"{x:>15.12f}" for x in row) for row in m)
        _emit(cfg, rec, text)
    else:
        raise UsageError("--level must be 1 or 2")
    return 0


def cmd_string_functions(cfg, weight_spec):
    d = build_root_datum(cfg.rank)
    w = parse_weight(d, weight_spec)
    strings = string_functions(d, w, cfg.order)
    rec = {
        "weight": weight_spec,
        "strings": {",".join(map(str, k)): v.to_dict() for k, v in strings.items()},
    }
    text = "\n".join(f"class ({','.join(map(str, k))}): {_series_text(v)}" for k, v in strings.items())
    _emit(cfg, rec, text)
    return 0


def cmd_verify(cfg, suite):
    failed = False
    if suite in ("qseries", "all"):
        for check in qseries_suite(cfg.rank, cfg.order):
            failed |= not check.ok
            _emit(cfg, check.to_dict(), check.summary)
    if suite in ("numeric", "all"):
        order = max(cfg.order, 12)
        for rep in numeric_suite(cfg.rank, order, cfg.tolerance, list(cfg.tau_samples)):
            failed |= not rep.passed
            label = rep.name
            if rep.name == "F_transform":
                label = f"F_transform M={rep.params['M']}"
            elif rep.name in ("theta_transform", "character_transform"):
                key = "k" if "k" in rep.params else "level"
                label = f"{rep.name} level={rep.params[key]}"
            summary = f"{label}: {'passed' if rep.passed else 'FAILED'}"
            _emit(cfg, dict(rep.to_dict(), summary=summary), f"{summary}  residual={rep.residual:.3e}")
    return 1 if failed else 0


# -- argument parsing ---------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=1)
    common.add_argument("--order", type=int, default=_default_order())
    common.add_argument("--tolerance", type=float, default=1e-6)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tau", type=_parse_tau, action="append", default=None)

    parser = argparse.ArgumentParser(prog="kacjac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("root-data", parents=[common])
    p = sub.add_parser("character", parents=[common])
    p.add_argument("--weight", default="L0")
    p = sub.add_parser("jacobian", parents=[common])
    p.add_argument("--drop", type=int, default=0)
    p = sub.add_parser("modular-forms", parents=[common])
    p.add_argument("--M", type=int, default=5)
    p.add_argument("--r", type=int, default=1)
    p = sub.add_parser("smatrix", parents=[common])
    p.add_argument("--level", type=int, default=1)
    p = sub.add_parser("string-functions", parents=[common])
    p.add_argument("--weight", default="L0")
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--suite", choices=("qseries", "numeric", "all"), default="all")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.order < 1 or args.tolerance <= 0:
        parser.error("--order must be >= 1 and --tolerance > 0")
    cfg = RunConfig(
        rank=args.rank,
        order=args.order,
        tolerance=args.tolerance,
        format=args.format,
        seed=args.seed,
        tau_samples=tuple(args.tau) if args.tau else RunConfig.tau_samples,
    )
    commands = {
        "root-data": lambda: cmd_root_data(cfg),
        "character": lambda: cmd_character(cfg, args.weight),
        "jacobian": lambda: cmd_jacobian(cfg, args.drop),
        "modular-forms": lambda: cmd_modular_forms(cfg, args.M, args.r),
        "smatrix": lambda: cmd_smatrix(cfg, args.level),
        "string-functions": lambda: cmd_string_functions(cfg, args.weight),
        "verify": lambda: cmd_verify(cfg, args.suite),
    }
    try:
        return commands[args.command]()
    except MATH_ERRORS as exc:
        print(f"kacjac: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError) as exc:
        print(f"kacjac: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
