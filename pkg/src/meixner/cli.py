"""Command-line interface: ``meixner {eval,table,scan,verify}``.

Exit codes: 0 success, 2 invalid arguments, 3 region or branch error,
4 I/O error, 5 a check failed.
"""
from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .asymptotics import default_eps_delta, evaluate
from .equilibrium import turning_points
from .errors import BranchCutError, DomainError, PoleError, RegionError
from .exact import MeixnerParams, eval_scaled_exact
from .numerics import GaussianRational, ScaledReal, rel_diff
from .reference import ASYM_TOL, ERROR_BOUND, EXACT_TOL, REFERENCE_PARAMS, REFERENCE_ROWS
from .report import make_row, plot_rows, write_rows
from .verify import FAULTS, run_verify

__all__ = ["RunConfig", "main", "build_parser", "parse_z", "load_config"]

EXIT_OK, EXIT_USAGE, EXIT_REGION, EXIT_IO, EXIT_CHECK = 0, 2, 3, 4, 5

_DEFAULTS = {"c": "0.5", "beta": "1.5", "n": "100", "epsilon": None, "delta": None,
             "quad_tol": "1e-12", "format": None}
_CONFIG_KEYS = set(_DEFAULTS) | {"out"}


class UsageError(Exception):
    """Invalid argument value; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    c: Fraction
    beta: Fraction
    n: tuple[int, ...]
    eps: float
    delta: float
    quad_tol: float
    fmt: str
    out: str | None

    def params(self, n: int | None = None) -> MeixnerParams:
        return MeixnerParams(self.c, self.beta, self.n[-1] if n is None else n)

    def meta(self, n: int | None = None) -> dict:
        return {"c": str(self.c), "beta": str(self.beta), "n": self.n[-1] if n is None else n,
                "epsilon": f"{self.eps:.15g}", "delta": f"{self.delta:.15g}"}


def parse_z(text: str) -> GaussianRational:
    """Parse ``"RE"`` or ``"RE,IM"`` decimal strings exactly."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (1, 2) or not all(parts):
        raise UsageError(f"z must be 'RE' or 'RE,IM', got {text!r}")
    try:
        vals = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse z={text!r}: {exc}") from None
    return GaussianRational(vals[0], vals[1] if len(vals) == 2 else Fraction(0))


def load_config(path: str) -> dict:
    """Read a ``key=value`` file; ``#`` starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in _CONFIG_KEYS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = value
    return out


def _resolve(args) -> RunConfig:
    """Merge flags over the config file over defaults."""
    cfg = dict(_DEFAULTS)
    if args.config:
        try:
            cfg.update(load_config(args.config))
        except OSError as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
    for key in ("c", "beta", "epsilon", "delta", "quad_tol", "format", "out"):
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    n_values = args.n if args.n else [cfg["n"]]
    try:
        c, beta = Fraction(str(cfg["c"])), Fraction(str(cfg["beta"]))
        ns = tuple(int(v) for v in n_values)
        quad_tol = float(cfg["quad_tol"])
        for n in ns:
            MeixnerParams(c, beta, n)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    d_eps, d_delta = default_eps_delta(turning_points(c))
    try:
        eps = d_eps if cfg["epsilon"] is None else float(cfg["epsilon"])
        delta = d_delta if cfg["delta"] is None else float(cfg["delta"])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not 0 < eps < delta:
        raise UsageError(f"need 0 < epsilon < delta, got {eps} and {delta}")
    if cfg["format"] is None:
        # scans are plot data; single points and the table are read by people
        cfg["format"] = "csv" if getattr(args, "command", None) == "scan" else "text"
    if cfg["format"] not in ("csv", "json", "text"):
        raise UsageError(f"unknown format {cfg['format']!r}")
    return RunConfig(c, beta, ns, eps, delta, quad_tol, cfg["format"], cfg.get("out"))


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _emit(config: RunConfig, rows, meta, extra_columns=(), plot=False, title="",
          categorical=False) -> None:
    if config.out:
        try:
            with open(config.out, "w", encoding="utf-8", newline="") as fh:
                write_rows(rows, config.fmt, fh, meta, extra_columns)
            if plot:
                plot_rows(rows, Path(config.out).with_suffix(".png"), title, categorical)
        except OSError as exc:
            raise _IOFailure(str(exc)) from None
    else:
        write_rows(rows, config.fmt, sys.stdout, meta, extra_columns)


class _IOFailure(Exception):
    pass


def _row_for(config: RunConfig, params, z: GaussianRational, method: str, extra=(),
             skip_poles: bool = False):
    exact = eval_scaled_exact(params, z) if method in ("exact", "both") else None
    result = None
    if method in ("asym", "both"):
        try:
            result = evaluate(z, params, config.eps, config.delta, config.quad_tol)
        except (DomainError, PoleError):
            # z = 0 has no asymptotic value; a scan keeps the row with exact only
            if not skip_poles:
                raise
    return make_row(z.re, z.im, exact, result, extra)


def cmd_eval(config: RunConfig, z: GaussianRational, method: str) -> int:
    row = _row_for(config, config.params(), z, method)
    _emit(config, [row], config.meta())
    return EXIT_OK


def _reference_config(config: RunConfig) -> bool:
    return (config.c, config.beta, config.n[-1]) == REFERENCE_PARAMS


def cmd_table(config: RunConfig, plot: bool = False) -> int:
    """The ten reference points; flags each row against the stored values."""
    params = config.params()
    check = _reference_config(config)
    rows, ok = [], True
    for ref in REFERENCE_ROWS:
        z = parse_z(ref.z)
        exact = eval_scaled_exact(params, z)
        result = evaluate(z, params, config.eps, config.delta, config.quad_tol)
        if check:
            exact_ok = rel_diff(exact, _ref_value(ref.true_value)) <= EXACT_TOL
            asym_ok = rel_diff(result.value, _ref_value(ref.approx_value)) <= ASYM_TOL
            bound_ok = rel_diff(result.value, exact) <= ERROR_BOUND
            flags = (ref.true_value, ref.approx_value, _yn(exact_ok), _yn(asym_ok), _yn(bound_ok))
            ok = ok and exact_ok and asym_ok and bound_ok
        else:
            flags = ()
        rows.append(make_row(z.re, z.im, exact, result, flags))
    extra = ("ref_exact", "ref_asym", "exact_ok", "asym_ok", "bound_ok") if check else ()
    _emit(config, rows, config.meta(), extra, plot, "reference points", categorical=True)
    return EXIT_OK if ok else EXIT_CHECK


def _ref_value(text: str) -> ScaledReal:
    from decimal import Decimal
    return ScaledReal.from_decimal(Decimal(text))


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_scan(config: RunConfig, z_from: Fraction, z_to: Fraction, points: int,
             method: str = "both", imag: Fraction = Fraction(0), plot: bool = False) -> int:
    """Equally spaced real grid (optionally shifted by ``i*imag``)."""
    if not z_from < z_to:
        raise UsageError("scan needs --from < --to")
    if points < 2:
        raise UsageError("scan needs --points >= 2")
    params = config.params()
    step = (z_to - z_from) / (points - 1)
    rows = []
    with warnings.catch_warnings():
        # near polynomial zeros the estimate column already shows the problem
        warnings.simplefilter("ignore")
        for k in range(points):
            z = GaussianRational(z_from + k * step, imag)
            rows.append(_row_for(config, params, z, method, skip_poles=True))
    meta = config.meta() | {"from": str(z_from), "to": str(z_to), "points": points}
    _emit(config, rows, meta, plot=plot, title=f"scan, n = {params.n}")
    return EXIT_OK


def cmd_verify(config: RunConfig, fault: str | None = None) -> int:
    params = config.params(max(config.n))
    report = run_verify(params, fault=fault, n_values=config.n)
    lines = [f"# c={config.c} beta={config.beta} n={','.join(map(str, config.n))}"]
    if fault:
        lines.append(f"# injected fault: {fault}")
    lines += report.lines()
    lines.append(f"{'PASS' if report.passed else 'FAIL'}  overall "
                 f"({sum(r.passed for r in report.results)}/{len(report.results)} suites)")
    text = "\n".join(lines) + "\n"
    if config.out:
        try:
            Path(config.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise _IOFailure(str(exc)) from None
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_CHECK


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--c", help="weight parameter in (0, 1), decimal (default 0.5)")
    common.add_argument("--beta", help="parameter in [1, 2), decimal (default 1.5)")
    common.add_argument("--n", action="append",
                        help="degree (default 100); verify accepts it repeatedly")
    common.add_argument("--epsilon", help="disk radius (default from the turning points)")
    common.add_argument("--delta", help="strip half-width (default 2*epsilon)")
    common.add_argument("--quad-tol", dest="quad_tol", help="quadrature tolerance (1e-12)")
    common.add_argument("--format", choices=("csv", "json", "text"), help="output format")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--config", help="key=value file; flags take precedence")

    parser = argparse.ArgumentParser(
        prog="meixner",
        description="Exact and asymptotic evaluation of monic Meixner polynomials "
                    "pi_n(n z - beta/2).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate at one point")
    p_eval.add_argument("--z", required=True, help="'RE' or 'RE,IM' (exact decimals)")
    p_eval.add_argument("--method", choices=("exact", "asym", "both"), default="exact")

    p_table = sub.add_parser("table", parents=[common], help="the ten reference points")
    p_table.add_argument("--plot", action="store_true", help="also write <out>.png")

    p_scan = sub.add_parser("scan", parents=[common], help="grid scan along a line")
    p_scan.add_argument("--from", dest="z_from", required=True)
    p_scan.add_argument("--to", dest="z_to", required=True)
    p_scan.add_argument("--points", type=int, required=True)
    p_scan.add_argument("--imag", default="0", help="constant imaginary part of the line")
    p_scan.add_argument("--method", choices=("asym", "both"), default="both")
    p_scan.add_argument("--plot", action="store_true", help="also write <out>.png")

    p_verify = sub.add_parser("verify", parents=[common], help="identity suites")
    p_verify.add_argument("--inject-fault", choices=FAULTS, default=None)
    return parser


def _frac(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {name}={text!r}") from None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve(args)
        if getattr(args, "plot", False) and not config.out:
            raise UsageError("--plot needs --out")
        if args.command == "eval":
            return cmd_eval(config, parse_z(args.z), args.method)
        if args.command == "table":
            return cmd_table(config, args.plot)
        if args.command == "scan":
            return cmd_scan(config, _frac(args.z_from, "--from"), _frac(args.z_to, "--to"),
                            args.points, args.method, _frac(args.imag, "--imag"), args.plot)
        return cmd_verify(config, args.inject_fault)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"meixner: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RegionError, BranchCutError, PoleError, DomainError) as exc:
        print(f"meixner: region/branch error: {exc}", file=sys.stderr)
        return EXIT_REGION
    except _IOFailure as exc:
        print(f"meixner: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
