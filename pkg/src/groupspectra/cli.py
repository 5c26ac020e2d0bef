"""Command line interface.

Commands:

* ``transform``: sampled function JSON -> coefficient JSON (forward transform)
* ``synth``: coefficient JSON -> sampled function JSON on a quadrature grid
* ``norm``: evaluate a spectral norm of a coefficient JSON
* ``op``: apply bessel / pseudodiff / convolve and write the result
* ``suite``: run the verification suite; write report JSON + CSV + figures

Exit codes: 0 on success, 2 for configuration and input problems, 3 for
precision problems and verification failures.  The ``kappa_stated`` variant
of the Sobolev check is reported as a finding and never fails the suite.

The environment variable GROUPSPECTRA_PROFILE supplies the default
precision profile for ``suite`` when neither --profile nor the config file
sets one.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, DimensionError, GroupSpectraError, PrecisionError
from .fourier import (
    BandlimitedFunction,
    GridFunction,
    dense_sup_norm,
    forward,
    synthesize,
)
from .groups import element_to_json, make_group
from .operators import bessel_potential, convolve_spectral, make_symbol, pseudo_diff
from .report import write_report
from .spectra import Weight, barron_norm, make_weight, sobolev_norm, sp_norm
from .values import make_value_space
from .verify import PROFILES, SuiteConfig, default_config, run_suite

PROFILE_ENV = "GROUPSPECTRA_PROFILE"


# -- small input helpers ------------------------------------------------------------


def _read_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigurationError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _inline_or_file(text: str):
    """Accept a JSON literal or a path to a JSON file."""
    if text.lstrip().startswith(("{", "[")):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"inline JSON at {exc.lineno}:{exc.colno}: {exc.msg}") from None
    return _read_json(text)


def _group_descriptor(text: str) -> dict:
    """JSON, a file, or shorthand: cyclic:8, dihedral:4, torus, su2."""
    if text.lstrip().startswith("{") or Path(text).is_file():
        return _inline_or_file(text)
    head, _, tail = text.partition(":")
    if head == "cyclic":
        return {"kind": "cyclic", "N": _int_flag(tail, "cyclic order")}
    if head == "dihedral":
        return {"kind": "dihedral", "n": _int_flag(tail, "dihedral order")}
    if head in ("torus", "su2") and not tail:
        return {"kind": head}
    raise ConfigurationError(f"cannot parse group {text!r}")


def _space_descriptor(text: str) -> dict:
    """JSON, a file, or shorthand: norm:dim with optional :algebra."""
    if text.lstrip().startswith("{") or Path(text).is_file():
        return _inline_or_file(text)
    parts = text.split(":")
    if len(parts) in (2, 3) and parts[0]:
        desc = {"dim": _int_flag(parts[1], "space dim"), "norm": parts[0]}
        if len(parts) == 3:
            if parts[2] != "algebra":
                raise ConfigurationError(f"cannot parse space {text!r}")
            desc["algebra"] = True
        return desc
    raise ConfigurationError(f"cannot parse space {text!r}")


def _int_flag(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigurationError(f"{what} must be an integer, got {text!r}") from None


def _resolve_weight(text: str | None, group):
    """Weight from shorthand, JSON, or file; returns (weight, bundled s or None)."""
    if text is None or text == "canonical":
        return Weight.canonical(group), None
    if text.lstrip().startswith("{") or Path(text).is_file():
        weight = make_weight(_inline_or_file(text))
        return weight, weight.default_s
    head, _, tail = text.partition(":")
    if head in ("abs_n", "sqrt_l_lplus1") and not tail:
        return Weight(head), None
    if head == "constant":
        value = float(tail) if tail else 1.0
        return Weight("constant", value=value), None
    raise ConfigurationError(f"cannot parse weight {text!r}")


def _load_function(args) -> BandlimitedFunction:
    obj = _read_json(args.infile)
    band = getattr(args, "band", None)
    if isinstance(obj, dict):
        obj = dict(obj)
        if getattr(args, "group", None):
            flag = _group_descriptor(args.group)
            if "group" in obj and obj["group"] != flag:
                raise ConfigurationError("--group disagrees with the input file's group")
            obj.setdefault("group", flag)
        if getattr(args, "space", None):
            flag = _space_descriptor(args.space)
            if "space" in obj and obj["space"] != flag:
                raise ConfigurationError("--space disagrees with the input file's space")
            obj.setdefault("space", flag)
        inline = obj.get("band")
        if isinstance(inline, int) and not isinstance(inline, bool) and inline >= 0:
            band = inline if band is None else max(band, inline)
    return BandlimitedFunction.from_json(obj, band=band)


def _emit(obj, outfile: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if outfile:
        Path(outfile).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ---------------------------------------------------------------------------


def cmd_transform(args) -> int:
    obj = _read_json(args.infile)
    if not isinstance(obj, dict):
        raise ConfigurationError("sampled-function JSON must be an object")
    gdesc = obj.get("group") or (args.group and _group_descriptor(args.group))
    sdesc = obj.get("space") or (args.space and _space_descriptor(args.space))
    if not gdesc or not sdesc:
        raise ConfigurationError("input needs 'group' and 'space' (inline or via flags)")
    band = obj.get("band")
    if band is None:
        band = args.band
    if band is None:
        raise ConfigurationError("input needs 'band' (inline or via --band)")
    if not isinstance(band, int) or band < 0:
        raise ConfigurationError(f"band must be an integer >= 0, got {band!r}")
    group = make_group(gdesc)
    space = make_value_space(sdesc)
    rule = group.quadrature(band)
    samples = obj.get("samples")
    if not isinstance(samples, list):
        raise ConfigurationError("input needs a 'samples' list")
    if len(samples) != len(rule):
        raise ConfigurationError(
            f"got {len(samples)} samples but the band-{band} grid has {len(rule)} nodes"
        )
    values = np.stack([_sample_value(space, blob, k) for k, blob in enumerate(samples)])
    grid = GridFunction(rule, space, values)
    analysis_band = args.band if args.band is not None else band
    hat = forward(grid, group.truncated_dual(analysis_band))
    _emit(hat.to_json(), args.outfile)
    return 0


def _sample_value(space, blob, index):
    try:
        return space.value_from_json(blob)
    except DimensionError as exc:
        raise ConfigurationError(f"samples[{index}]: {exc}") from None


def cmd_synth(args) -> int:
    blf = _load_function(args)
    rule = blf.group.quadrature(blf.band)
    grid = synthesize(blf, rule)
    out = {
        "group": blf.group.descriptor(),
        "space": blf.space.descriptor(),
        "band": blf.band,
        "nodes": [element_to_json(blf.group, x) for x in rule.nodes],
        "samples": [blf.space.value_to_json(v) for v in grid.samples],
    }
    _emit(out, args.outfile)
    return 0


def cmd_norm(args) -> int:
    blf = _load_function(args)
    weight, bundled_s = _resolve_weight(args.weight, blf.group)
    s = args.s if args.s is not None else (bundled_s if bundled_s is not None else 0.0)
    if args.kind == "barron":
        report = barron_norm(blf, weight, s)
        out = {
            "norm": "barron",
            "s": s,
            "value": report.value,
            "per_irrep": {str(lab): v for lab, v in report.per_irrep.items()},
        }
    elif args.kind == "sobolev":
        report = sobolev_norm(blf, weight, s)
        out = {
            "norm": "sobolev",
            "s": s,
            "value": report.value,
            "per_irrep": {str(lab): v for lab, v in report.per_irrep.items()},
        }
    elif args.kind == "sp":
        p = math.inf if args.p in ("inf", "infinity") else float(args.p)
        out = {"norm": "sp", "p": "inf" if p == math.inf else p, "value": sp_norm(blf, p)}
    else:
        out = {"norm": "linf", "value": dense_sup_norm(blf)}
    _emit(out, args.outfile)
    return 0


def cmd_op(args) -> int:
    blf = _load_function(args)
    if args.operator == "bessel":
        if args.s is None:
            raise ConfigurationError("op bessel needs --s")
        weight, _ = _resolve_weight(args.weight, blf.group)
        result = bessel_potential(blf, weight, args.s)
    elif args.operator == "pseudodiff":
        if not args.symbol:
            raise ConfigurationError("op pseudodiff needs --symbol")
        symbol = make_symbol(_inline_or_file(args.symbol))
        weight = None
        if symbol.name == "bessel" or args.weight:
            weight, _ = _resolve_weight(args.weight, blf.group)
        result = pseudo_diff(blf, symbol, weight)
    else:
        if not args.with_file:
            raise ConfigurationError("op convolve needs --with")
        other = BandlimitedFunction.from_json(_read_json(args.with_file))
        band = max(blf.band, other.band)
        result = convolve_spectral(blf.promoted(band), other.promoted(band))
    _emit(result.to_json(), args.outfile)
    return 0


def cmd_suite(args) -> int:
    if args.infile:
        config = SuiteConfig.from_json(_read_json(args.infile))
    else:
        config = default_config()
    if args.seed is not None:
        config.seed = args.seed
    if args.profile:
        config.profile = args.profile
    elif not args.infile:
        env = os.environ.get(PROFILE_ENV)
        if env:
            config.profile = env
    config.validate()
    report = run_suite(config)
    paths = write_report(report, args.outdir, figures=not args.no_figures)
    summary = report.summary()
    line = (
        f"suite: total={summary['total']} passed={summary['passed']} "
        f"failed={summary['failed']} kappa_stated_failed={summary['kappa_stated_failed']} "
        f"ok={'true' if summary['ok'] else 'false'}"
    )
    print(line)
    for kind in ("json", "csv", "fig_slack", "fig_passrate", "fig_sobolev"):
        if kind in paths:
            print(f"wrote {paths[kind]}")
    return 0 if report.ok else 3


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupspectra",
        description="Vector-valued Fourier analysis and spectral norms on compact groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common_io(p, out_help="output path (default: stdout)"):
        p.add_argument("--in", dest="infile", required=True, help="input JSON path")
        p.add_argument("--out", dest="outfile", default=None, help=out_help)

    p = sub.add_parser("transform", help="forward transform of a sampled function")
    common_io(p)
    p.add_argument("--group", help="group descriptor (JSON, file, or e.g. cyclic:8)")
    p.add_argument("--space", help="value space (JSON, file, or e.g. l2:3, operator:2:algebra)")
    p.add_argument("--band", type=int, default=None, help="analysis band (default: grid band)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("synth", help="sample a coefficient pack on its quadrature grid")
    common_io(p)
    p.add_argument("--group", help="group descriptor if the input omits it")
    p.add_argument("--space", help="value space if the input omits it")
    p.add_argument("--band", type=int, default=None, help="widen the grid to this band")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("norm", help="evaluate a spectral norm")
    common_io(p)
    p.add_argument("--group", help="group descriptor if the input omits it")
    p.add_argument("--space", help="value space if the input omits it")
    p.add_argument("--band", type=int, default=None)
    p.add_argument(
        "--kind", choices=("barron", "sobolev", "sp", "linf"), default="barron"
    )
    p.add_argument("--weight", default=None, help="canonical, abs_n, sqrt_l_lplus1, constant:V, JSON, or file")
    p.add_argument("--s", type=float, default=None, help="smoothness order (default from weight, else 0)")
    p.add_argument("--p", default="1", help="exponent for --kind sp (number or inf)")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("op", help="apply a spectral operator")
    p.add_argument("operator", choices=("bessel", "pseudodiff", "convolve"))
    common_io(p)
    p.add_argument("--group", help="group descriptor if the input omits it")
    p.add_argument("--space", help="value space if the input omits it")
    p.add_argument("--band", type=int, default=None)
    p.add_argument("--s", type=float, default=None, help="order for bessel")
    p.add_argument("--weight", default=None)
    p.add_argument("--symbol", default=None, help="symbol JSON or file for pseudodiff")
    p.add_argument("--with", dest="with_file", default=None, help="second operand for convolve")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("suite", help="run the verification suite and write a report")
    p.add_argument("--in", dest="infile", default=None, help="suite config JSON (default: built-in)")
    p.add_argument("--out", dest="outdir", default="groupspectra_report", help="report directory")
    p.add_argument("--seed", type=int, default=None, help="override the config seed")
    p.add_argument(
        "--profile",
        choices=sorted(PROFILES),
        default=None,
        help=f"precision profile (default from ${PROFILE_ENV}, else 'default')",
    )
    p.add_argument("--no-figures", action="store_true", help="skip figure rendering")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GroupSpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
