"""Command-line front end.

Every command reads one JSON config (strictly validated), runs the
corresponding solver or sampler, and prints a human-readable line plus
optional machine-readable CSV/JSON. Exit codes: 0 success (analysis
findings such as "inconsistent" are successes), 2 config/usage errors,
3 domain or solver errors, 4 I/O errors. Files are only written when
an output path is requested.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .config import ConfigDocument, load_config
from .eos import amplification_factor, check_linear_consistency, derive_unitary_eos
from .equilibrium import clearing_price_analytic, clearing_price_numeric
from .errors import BracketingError, ConfigError, DomainError, InvariantError
from .surface import (
    GridSpec,
    export,
    family_collapse,
    isocurves,
    isoprice_collapse_check,
    render_csv,
    render_json,
    sample_surface,
)
from .zeroth_law import rank_markets, verify_equivalence_laws

OUT_DIR_ENV = "MARKET_EOS_OUT_DIR"


def _fmt(value: float) -> str:
    return format(float(value), ".12g")


def _parse_float_list(text: str, what: str) -> list[float]:
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not items:
        raise ConfigError(f"{what} must contain at least one value")
    try:
        return [float(piece) for piece in items]
    except ValueError as exc:
        raise ConfigError(f"{what}: {exc}") from exc


def _resolve_out(args, cfg: ConfigDocument) -> Path | None:
    if args.out is None:
        return None
    out = Path(args.out)
    if out.is_absolute():
        return out
    base = args.out_dir or cfg.output_dir or os.environ.get(OUT_DIR_ENV)
    return Path(base) / out if base else out


def _emit(text: str, out_path: Path | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        out_path.write_text(text, encoding="utf-8")
        print(f"wrote {out_path}")


def _resolve_surface_eos(cfg: ConfigDocument, name: str):
    if name in cfg.eos_entities:
        return cfg.eos_entities[name]
    if name in cfg.markets:
        return derive_unitary_eos(cfg.markets[name])
    raise ConfigError(
        f"unknown eos or market {name!r}; configured: "
        f"{sorted(set(cfg.eos_entities) | set(cfg.markets)) or 'none'}"
    )


def _resolve_grid(args, cfg: ConfigDocument) -> GridSpec:
    base = cfg.grid
    fields = {}
    for key in ("x_min", "x_max", "nx", "t_min", "t_max", "nt"):
        override = getattr(args, key)
        if override is not None:
            fields[key] = override
        elif base is not None:
            fields[key] = getattr(base, key)
        else:
            raise ConfigError(f"grid.{key} is set neither in the config nor on the command line")
    try:
        return GridSpec(**fields)
    except InvariantError as exc:
        raise ConfigError(f"grid: {exc}") from exc


def cmd_solve(args) -> int:
    cfg = load_config(args.config)
    market = cfg.market(args.market)
    analytic = clearing_price_analytic(market)
    numeric = clearing_price_numeric(market)
    delta = abs(analytic.clearing_price - numeric.clearing_price)
    if args.json:
        print(
            json.dumps(
                {
                    "market": args.market,
                    "clearing_price": analytic.clearing_price,
                    "clearing_quantity": analytic.clearing_quantity,
                    "residual": analytic.residual,
                    "cross_check_delta": delta,
                },
                indent=2,
            )
        )
    else:
        print(
            f"Pr*={_fmt(analytic.clearing_price)} Q*={_fmt(analytic.clearing_quantity)} "
            f"residual={_fmt(analytic.residual)} method=analytic cross_check_delta={_fmt(delta)}"
        )
    return 0


def cmd_consistency(args) -> int:
    cfg = load_config(args.config)
    report = check_linear_consistency(cfg.market(args.market))
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", _resolve_out(args, cfg))
    return 0


def cmd_eos(args) -> int:
    cfg = load_config(args.config)
    eos = derive_unitary_eos(cfg.market(args.market))
    amplification = amplification_factor(eos)
    _emit(json.dumps(eos.to_dict(), indent=2) + "\n", _resolve_out(args, cfg))
    print(f"K={_fmt(eos.K)} amplification={_fmt(amplification)} ({amplification.curie_analogue} analogue)")
    return 0


def cmd_surface(args) -> int:
    cfg = load_config(args.config)
    eos = _resolve_surface_eos(cfg, args.name)
    grid = _resolve_grid(args, cfg)
    sampled = sample_surface(eos, grid)
    text = render_csv(sampled) if args.format == "csv" else render_json(sampled)
    _emit(text, _resolve_out(args, cfg))
    return 0


def cmd_isocurves(args) -> int:
    cfg = load_config(args.config)
    eos = _resolve_surface_eos(cfg, args.name)
    t_values = _parse_float_list(args.t_values, "t-values")
    x_lo = args.x_min if args.x_min is not None else (cfg.grid.x_min if cfg.grid else None)
    x_hi = args.x_max if args.x_max is not None else (cfg.grid.x_max if cfg.grid else None)
    n_points = args.points if args.points is not None else (cfg.grid.nx if cfg.grid else None)
    if x_lo is None or x_hi is None or n_points is None:
        raise ConfigError("x range is set neither in the config grid nor on the command line")
    family = isocurves(eos, t_values, (x_lo, x_hi), n_points)
    text = render_csv(family) if args.format == "csv" else render_json(family)
    _emit(text, _resolve_out(args, cfg))
    verdict = family_collapse(family)
    print(f"curves={verdict.n_curves} collapse={str(verdict.collapse).lower()}")
    return 0


def cmd_collapse(args) -> int:
    cfg = load_config(args.config)
    market = cfg.market(args.market)
    prices = _parse_float_list(args.prices, "prices")
    report = isoprice_collapse_check(market, prices)
    out_path = _resolve_out(args, cfg)
    if out_path is not None:
        _emit(json.dumps(report.to_dict(), indent=2) + "\n", out_path)
    print(
        f"collapse={str(report.collapse).lower()} slope=1/{market.households} "
        f"max_rel_deviation={_fmt(report.max_rel_deviation)}"
    )
    return 0


def cmd_zeroth(args) -> int:
    cfg = load_config(args.config)
    registry = cfg.registry()
    print("market quantized_price")
    for name, price in rank_markets(registry):
        print(f"{name} {_fmt(price)}")
    report = verify_equivalence_laws(registry)

    def verdict(ok: bool) -> str:
        return "pass" if ok else "FAIL"

    print(
        f"laws: reflexive={verdict(report.reflexive)} symmetric={verdict(report.symmetric)} "
        f"transitive={verdict(report.transitive)}"
    )
    if report.counterexample is not None:
        print(f"counterexample: {report.counterexample}")
    for price, members in report.classes:
        labels = {cfg.goods[m] for m in members if m in cfg.goods}
        note = " [mixed goods]" if len(labels) > 1 else ""
        print(f"class price={_fmt(price)}: {', '.join(members)}{note}")
    return 0


def _add_common(sub: argparse.ArgumentParser, with_out: bool = True) -> None:
    sub.add_argument("--config", required=True, help="path to the JSON config file")
    if with_out:
        sub.add_argument("--out", help="output file path; nothing is written without it")
        sub.add_argument("--out-dir", help=f"base directory for relative --out paths (overrides ${OUT_DIR_ENV})")


def _add_grid_overrides(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--x-min", type=float, help="grid x lower bound")
    sub.add_argument("--x-max", type=float, help="grid x upper bound")
    sub.add_argument("--nx", type=int, help="grid points along x")
    sub.add_argument("--t-min", type=float, help="grid t lower bound")
    sub.add_argument("--t-max", type=float, help="grid t upper bound")
    sub.add_argument("--nt", type=int, help="grid points along t")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="market-eos",
        description="Market-clearing equilibria and equation-of-state surfaces for simple markets.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("solve", help="clearing price and quantity for one market")
    _add_common(sub, with_out=False)
    sub.add_argument("market", help="market name from the config")
    sub.add_argument("--json", action="store_true", help="print a JSON object instead of text")
    sub.set_defaults(func=cmd_solve)

    sub = commands.add_parser("consistency", help="elasticity consistency report for a linear market")
    _add_common(sub)
    sub.add_argument("market", help="linear market name from the config")
    sub.set_defaults(func=cmd_consistency)

    sub = commands.add_parser("eos", help="constraint-surface constant K for a unitary market")
    _add_common(sub)
    sub.add_argument("market", help="unitary market name from the config")
    sub.set_defaults(func=cmd_eos)

    sub = commands.add_parser("surface", help="sample a constraint surface on a grid")
    _add_common(sub)
    sub.add_argument("name", help="eos block or unitary market name from the config")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_grid_overrides(sub)
    sub.set_defaults(func=cmd_surface)

    sub = commands.add_parser("isocurves", help="fixed-t curve family of a constraint surface")
    _add_common(sub)
    sub.add_argument("name", help="eos block or unitary market name from the config")
    sub.add_argument("--t-values", required=True, help="comma-separated t values, e.g. 300,600")
    sub.add_argument("--x-min", type=float, help="curve x lower bound")
    sub.add_argument("--x-max", type=float, help="curve x upper bound")
    sub.add_argument("--points", type=int, help="points per curve")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.set_defaults(func=cmd_isocurves)

    sub = commands.add_parser("collapse", help="isoprice degeneracy check for a unitary market")
    _add_common(sub)
    sub.add_argument("market", help="unitary market name from the config")
    sub.add_argument("--prices", required=True, help="comma-separated exogenous prices")
    sub.set_defaults(func=cmd_collapse)

    sub = commands.add_parser("zeroth", help="price ranking and equivalence-law report")
    _add_common(sub, with_out=False)
    sub.set_defaults(func=cmd_zeroth)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, InvariantError, BracketingError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # downstream reader (e.g. head) closed stdout; not an error
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
