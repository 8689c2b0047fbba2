"""Command line interface: parameter sweeps and engine cross-checks.

Two subcommands:

* ``sweep`` evaluates correlation quantities over a grid of pore size,
  inverse temperature and interaction time, writing CSV or JSON,
* ``verify`` runs the closed forms against the dense reference engine
  and reports the worst discrepancy per quantity, failing on violation.

Output is deterministic: identical configuration produces byte-identical
files.  CSV floats carry 17 significant digits so values round-trip
exactly.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .discord import discord_bell_diagonal, discord_numeric
from .entanglement import concurrence_numeric
from .exact_oracle import (
    N_MAX_DEFAULT,
    ResourceLimitError,
    evolve,
    measure_correlations,
    partial_trace_pair,
    thermal_initial,
)
from .geometric_discord import geometric_discord_cs, geometric_discord_generic
from .nanopore import (
    OMEGA0_DEFAULT,
    NanoporeParams,
    beta_from_temperature,
    concurrence_nanopore,
    correlations,
    reduced_density,
    tau_special,
    temperature_from_beta,
)
from .verification import format_report, run_verification

__all__ = ["VERSION", "main", "run_sweep"]

VERSION = "0.1.0"
_HEADER = f"# nanospin-qcorr v{VERSION}"

_CORR_FIELDS = ("p", "q", "r", "u", "v")
_SCALARS = ("concurrence", "discord", "geometric_discord")


def _base_columns(quantity: str):
    if quantity == "correlations":
        return list(_CORR_FIELDS)
    if quantity == "all":
        return list(_SCALARS) + list(_CORR_FIELDS)
    return [quantity]


def _parse_range(text: str, flag: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"{flag} expects lo:hi:step, got {text!r}")
    lo, hi, step = (float(p) for p in parts)
    if step <= 0.0:
        raise ValueError(f"{flag} step must be > 0, got {step}")
    if hi < lo:
        raise ValueError(f"{flag} needs hi >= lo, got {text!r}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + k * step for k in range(count)]


def _parse_n(tokens):
    values = []
    for tok in tokens:
        t = tok.strip().lower()
        if t == "inf":
            values.append(math.inf)
        else:
            values.append(int(t))
    return values


def _analytic_row(params: NanoporeParams, needed):
    corr = correlations(params)
    out = {}
    for f in _CORR_FIELDS:
        out[f] = getattr(corr, f)
    if "concurrence" in needed:
        out["concurrence"] = concurrence_nanopore(params)
    if "geometric_discord" in needed:
        out["geometric_discord"] = geometric_discord_cs(reduced_density(params))
    if "discord" in needed:
        if math.isinf(params.n):
            out["discord"] = discord_bell_diagonal(corr.q)
        else:
            rho = reduced_density(params).to_matrix()
            out["discord"] = discord_numeric(rho, validate=False).discord
    return out


def _oracle_row(state, needed):
    corr = measure_correlations(state)
    out = {}
    for f in _CORR_FIELDS:
        out[f] = getattr(corr, f)
    rho = partial_trace_pair(state)
    if "concurrence" in needed:
        out["concurrence"] = concurrence_numeric(rho).concurrence
    if "geometric_discord" in needed:
        out["geometric_discord"] = geometric_discord_generic(rho)
    if "discord" in needed:
        out["discord"] = discord_numeric(rho, validate=False).discord
    return out


def run_sweep(
    quantity: str,
    n_values,
    betas,
    taus,
    engine: str = "analytic",
    omega0: float = OMEGA0_DEFAULT,
    n_max: int = N_MAX_DEFAULT,
):
    """Evaluate the requested quantity over the grid.

    Returns (columns, rows); rows iterate n (outer), beta, tau (inner).
    """
    base = _base_columns(quantity)
    needed = [c for c in base if c in _SCALARS]
    columns = ["N", "beta", "T_K", "tau"]
    for col in base:
        columns.append(col)
        if engine == "both":
            columns.append(f"{col}_oracle")
            columns.append(f"{col}_diff")

    if engine in ("oracle", "both"):
        for n in n_values:
            if math.isinf(n):
                raise ValueError("the oracle engine requires finite N")

    rows = []
    for n in n_values:
        for beta in betas:
            rho0 = None
            if engine in ("oracle", "both"):
                rho0 = thermal_initial(n, beta, n_max=n_max)
            for tau in taus:
                row = [
                    n,
                    beta,
                    temperature_from_beta(beta, omega0),
                    tau,
                ]
                analytic = None
                oracle = None
                if engine in ("analytic", "both"):
                    params = NanoporeParams(n=n, beta=beta, tau=tau, omega0=omega0)
                    analytic = _analytic_row(params, needed)
                if engine in ("oracle", "both"):
                    oracle = _oracle_row(evolve(rho0, tau), needed)
                for col in base:
                    if engine == "analytic":
                        row.append(analytic[col])
                    elif engine == "oracle":
                        row.append(oracle[col])
                    else:
                        row.append(analytic[col])
                        row.append(oracle[col])
                        row.append(analytic[col] - oracle[col])
                rows.append(row)
    return columns, rows


def _format_cell(value) -> str:
    if isinstance(value, int):
        return str(value)
    v = float(value)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return format(v, ".17g")


def _write_csv(columns, rows, stream) -> None:
    stream.write(_HEADER + "\n")
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(_format_cell(v) for v in row) + "\n")


def _json_safe(value):
    if isinstance(value, int):
        return value
    v = float(value)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if math.isnan(v):
        return "nan"
    return v


def _write_json(columns, rows, engine, stream) -> None:
    doc = {
        "tool": "nanospin-qcorr",
        "version": VERSION,
        "engine": engine,
        "columns": columns,
        "rows": [[_json_safe(v) for v in row] for row in rows],
    }
    json.dump(doc, stream, indent=2)
    stream.write("\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nanospin-qcorr",
        description="Quantum correlations of a spin pair in a nanopore spin gas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate quantities over a parameter grid")
    sweep.add_argument(
        "--quantity",
        choices=("concurrence", "discord", "geometric_discord", "correlations", "all"),
        default="all",
    )
    sweep.add_argument(
        "--N",
        nargs="+",
        required=True,
        metavar="N",
        help="pore occupancies (integers >= 2, or 'inf')",
    )
    temp_group = sweep.add_mutually_exclusive_group(required=True)
    temp_group.add_argument(
        "--beta-range", metavar="LO:HI:STEP", help="inverse-temperature grid"
    )
    temp_group.add_argument(
        "--temp-range", metavar="LO:HI:STEP", help="temperature grid in kelvin"
    )
    sweep.add_argument(
        "--omega0",
        type=float,
        default=OMEGA0_DEFAULT,
        help="resonance frequency in rad/s for temperature conversion",
    )
    tau_group = sweep.add_mutually_exclusive_group(required=True)
    tau_group.add_argument(
        "--tau-range", metavar="LO:HI:STEP", help="dimensionless-time grid"
    )
    tau_group.add_argument(
        "--tau",
        metavar="VALUE",
        help="single time: a float, or special:<l> for the l-th flickering time",
    )
    tau_group.add_argument(
        "--time-range",
        metavar="LO:HI:STEP",
        help="physical-time grid in seconds; requires --coupling",
    )
    sweep.add_argument(
        "--coupling",
        type=float,
        metavar="D",
        help="dipolar coupling constant in rad/s, converts t to tau = (3 D / 2) t",
    )
    sweep.add_argument(
        "--engine", choices=("analytic", "oracle", "both"), default="analytic"
    )
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    sweep.add_argument(
        "--n-max",
        type=int,
        default=N_MAX_DEFAULT,
        help="dense-engine size budget for the oracle engine",
    )

    verify = sub.add_parser(
        "verify", help="cross-check closed forms against the dense engine"
    )
    verify.add_argument(
        "--N", nargs="+", default=None, metavar="N", help="pore occupancies (default 3..9)"
    )
    verify.add_argument(
        "--beta",
        nargs="+",
        type=float,
        default=(0.5, 1.0, 3.0, 10.0),
        metavar="BETA",
    )
    verify.add_argument("--tau-points", type=int, default=32)
    verify.add_argument("--n-max", type=int, default=N_MAX_DEFAULT)
    verify.add_argument(
        "--skip-discord",
        action="store_true",
        help="skip the (slowest) discord comparison",
    )
    verify.add_argument(
        "--inject-corruption",
        type=float,
        default=0.0,
        metavar="EPS",
        help="test hook: offset the analytic correlator q by EPS",
    )
    return parser


def _cmd_sweep(args) -> int:
    n_values = _parse_n(args.N)
    for n in n_values:
        if not math.isinf(n) and n < 2:
            raise ValueError(f"N must be >= 2, got {n}")
    if args.beta_range:
        betas = _parse_range(args.beta_range, "--beta-range")
        for b in betas:
            if b < 0:
                raise ValueError(f"beta must be >= 0, got {b}")
    else:
        temps = _parse_range(args.temp_range, "--temp-range")
        betas = [beta_from_temperature(t, args.omega0) for t in temps]
    if args.tau_range:
        taus = _parse_range(args.tau_range, "--tau-range")
    elif args.time_range:
        if args.coupling is None:
            raise ValueError("--time-range requires --coupling")
        times = _parse_range(args.time_range, "--time-range")
        taus = [1.5 * args.coupling * t for t in times]
    else:
        tok = args.tau.strip().lower()
        if tok.startswith("special:"):
            taus = [tau_special(int(tok.split(":", 1)[1]))]
        else:
            taus = [float(tok)]
    columns, rows = run_sweep(
        args.quantity,
        n_values,
        betas,
        taus,
        engine=args.engine,
        omega0=args.omega0,
        n_max=args.n_max,
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            if args.format == "csv":
                _write_csv(columns, rows, fh)
            else:
                _write_json(columns, rows, args.engine, fh)
    else:
        if args.format == "csv":
            _write_csv(columns, rows, sys.stdout)
        else:
            _write_json(columns, rows, args.engine, sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    n_values = _parse_n(args.N) if args.N else (3, 4, 5, 6, 7, 8, 9)
    for n in n_values:
        if math.isinf(n):
            raise ValueError("verify requires finite N")
    report = run_verification(
        n_values=n_values,
        betas=tuple(args.beta),
        n_tau=args.tau_points,
        include_discord=not args.skip_discord,
        corruption=args.inject_corruption,
        n_max=args.n_max,
    )
    print(format_report(report))
    if not report.ok:
        print(
            "verification FAILED for: " + ", ".join(report.failures), file=sys.stderr
        )
        return 1
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_verify(args)
    except (ValueError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
