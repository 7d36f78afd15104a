"""Command-line interface: overlaps, concurrences, sweeps, thresholds, fits.

Subcommands
    overlap      closed-form <alpha| a^m a^dag^n |beta> (log-magnitude + phase)
    concurrence  pure or depolarized concurrence of a superposition spec
    sweep        concurrence table over up to two swept parameters
    pcrit        critical depolarization probability, single value or table
    fit          tanh / gaussian model fit of an (x, y) table

Sweep and pcrit accept a ``key = value`` config file (see recipes/) instead
of flags.  Exit codes: 0 success, 2 argument error, 3 numeric range or
numerical failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

from . import fock
from .analysis import (
    Axis,
    SweepGrid,
    SweepResult,
    fit_gaussian,
    fit_tanh,
    grid_points,
    p_critical,
    spec_concurrence,
    sweep,
)
from .embedding import SuperpositionSpec
from .errors import (
    BracketError,
    ConvergenceError,
    GridError,
    NumericalFailureError,
    PacsentError,
    RangeError,
    RankViolationError,
    TruncationError,
)
from .specfun import pacs_overlap

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

_NUMERIC_ERRORS = (
    RangeError,
    ConvergenceError,
    TruncationError,
    NumericalFailureError,
    RankViolationError,
    BracketError,
    OverflowError,
)

_ORACLE_AUDIT_ROWS = 64
_ORACLE_AUDIT_TOL = 1e-6


def _fmt(x: float) -> str:
    """Fixed 12-significant-digit float formatting for deterministic output."""
    return f"{x:.12g}"


def parse_complex(text: str) -> complex:
    """Parse 're' or 're+imi' (or numpy/python 'j' suffix) complex literals."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    if "i" in s and "j" not in s:
        s = s.replace("i", "j")
    return complex(s)


def format_complex(z: complex) -> str:
    """Exact round-trip serialization of a complex value ('a' or 'a+bi')."""
    if z.imag == 0:
        return repr(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def _parse_axis(text: str) -> Axis:
    parts = text.split(":")
    if len(parts) != 4:
        raise ValueError(f"axis must be name:start:stop:count (got {text!r})")
    name, start, stop, count = parts
    return Axis(name=name.strip(), start=float(start), stop=float(stop), count=int(count))


_parse_axis.__name__ = "axis"  # argparse uses the type name in error messages


def _format_axis(axis: Axis) -> str:
    return f"{axis.name}:{axis.start!r}:{axis.stop!r}:{axis.count}"


@dataclass(frozen=True)
class RunConfig:
    """Structured parameters of a sweep or pcrit run (config-file mirror)."""

    command: str
    alpha: complex = 0j
    beta: complex = 0j
    gamma: complex = 0j
    u: complex = 1.0 + 0j
    v: complex = 0j
    m: int = 0
    n: int = 0
    axes: tuple[Axis, ...] = field(default_factory=tuple)
    p: float | None = None
    tol: float = 1e-8
    fmt: str = "csv"
    oracle: bool = False
    output: str | None = None

    def spec(self) -> SuperpositionSpec:
        return SuperpositionSpec.with_normalized_weights(
            self.alpha, self.beta, self.u, self.v, self.m, self.n, self.gamma
        )

    def grid(self) -> SweepGrid:
        return SweepGrid(base=self.spec(), axes=self.axes, p=self.p)

    def to_text(self) -> str:
        lines = [f"command = {self.command}"]
        for name in ("alpha", "beta", "gamma", "u", "v"):
            lines.append(f"{name} = {format_complex(getattr(self, name))}")
        lines.append(f"m = {self.m}")
        lines.append(f"n = {self.n}")
        for i, axis in enumerate(self.axes, start=1):
            lines.append(f"axis{i} = {_format_axis(axis)}")
        if self.p is not None:
            lines.append(f"p = {self.p!r}")
        lines.append(f"tol = {self.tol!r}")
        lines.append(f"format = {self.fmt}")
        lines.append(f"oracle = {'true' if self.oracle else 'false'}")
        if self.output is not None:
            lines.append(f"output = {self.output}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        values: dict = {}
        axes: dict[int, Axis] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"config line {lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key, value = key.strip().lower(), value.strip()
            if key == "command":
                values["command"] = value
            elif key in ("alpha", "beta", "gamma", "u", "v"):
                values[key] = parse_complex(value)
            elif key in ("m", "n"):
                values[key] = int(value)
            elif key in ("axis1", "axis2"):
                axes[int(key[-1])] = _parse_axis(value)
            elif key == "p":
                values["p"] = float(value)
            elif key == "tol":
                values["tol"] = float(value)
            elif key == "format":
                values["fmt"] = value
            elif key == "oracle":
                if value.lower() not in ("true", "false"):
                    raise ValueError(f"config line {lineno}: oracle must be true/false")
                values["oracle"] = value.lower() == "true"
            elif key == "output":
                values["output"] = value
            else:
                raise ValueError(f"config line {lineno}: unknown key {key!r}")
        if "command" not in values:
            raise ValueError("config must set 'command'")
        if values["command"] not in ("sweep", "pcrit"):
            raise ValueError("config command must be sweep or pcrit")
        values["axes"] = tuple(axes[i] for i in sorted(axes))
        if values.get("fmt", "csv") not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        return cls(**values)

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read())


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _table_text(result: SweepResult, fmt: str) -> str:
    if fmt == "json":
        rows = [
            {
                col: (float(_fmt(val)) if isinstance(val, float) else val)
                for col, val in zip(result.columns, row)
            }
            for row in result.rows
        ]
        return json.dumps({"columns": list(result.columns), "rows": rows}, indent=2) + "\n"
    lines = [",".join(result.columns)]
    for row in result.rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _scalar_text(items: list[tuple[str, object]], fmt: str) -> str:
    if fmt == "json":
        payload = {}
        for key, val in items:
            if isinstance(val, float):
                payload[key] = float(_fmt(val))
            else:
                payload[key] = val
        return json.dumps(payload, indent=2) + "\n"
    lines = []
    for key, val in items:
        if isinstance(val, float):
            lines.append(f"{key} = {_fmt(val)}")
        elif isinstance(val, bool):
            lines.append(f"{key} = {'true' if val else 'false'}")
        else:
            lines.append(f"{key} = {val}")
    return "\n".join(lines) + "\n"


def _spec_from_args(args) -> SuperpositionSpec:
    return SuperpositionSpec.with_normalized_weights(
        args.alpha, args.beta, args.u, args.v, args.m, args.n, args.gamma
    )


def _cmd_overlap(args) -> int:
    value = pacs_overlap(args.alpha, args.beta, args.m, args.n)
    items: list[tuple[str, object]] = [
        ("log_magnitude", float(value.log_magnitude)),
        ("phase", float(value.phase)),
    ]
    if args.format == "json":
        if value.representable:
            plain = value.to_complex()
            items += [("value_real", plain.real), ("value_imag", plain.imag)]
        else:
            items += [("value_real", None), ("value_imag", None)]
    elif value.representable:
        items.append(("value", format_complex(value.to_complex())))
    _write_output(_scalar_text(items, args.format), args.output)
    return EXIT_OK


def _cmd_concurrence(args) -> int:
    spec = _spec_from_args(args)
    concurrence, degenerate = spec_concurrence(spec, args.p)
    items: list[tuple[str, object]] = [("concurrence", concurrence), ("degenerate", degenerate)]
    if args.p is not None:
        items.append(("p", float(args.p)))
    if args.oracle:
        pure, _ = spec_concurrence(spec, None)
        oracle_value = 0.0 if degenerate else fock.concurrence_oracle(spec)
        items += [
            ("oracle", oracle_value),
            ("oracle_abs_diff", abs(pure - oracle_value)),
        ]
    _write_output(_scalar_text(items, args.format), args.output)
    return EXIT_OK


def _config_from_args(args, command: str) -> RunConfig:
    if args.config is not None:
        config = RunConfig.from_file(args.config)
        if config.command != command:
            raise ValueError(
                f"config command {config.command!r} does not match subcommand {command!r}"
            )
        overrides = {}
        if args.format is not None:
            overrides["fmt"] = args.format
        if args.output is not None:
            overrides["output"] = args.output
        if getattr(args, "oracle", False):
            overrides["oracle"] = True
        if getattr(args, "tol", None) is not None:
            overrides["tol"] = args.tol
        if overrides:
            config = RunConfig(**{**config.__dict__, **overrides})
        return config
    axes = tuple(args.axis or ())
    return RunConfig(
        command=command,
        alpha=args.alpha,
        beta=args.beta,
        gamma=args.gamma,
        u=args.u,
        v=args.v,
        m=args.m,
        n=args.n,
        axes=axes,
        p=getattr(args, "p", None),
        tol=getattr(args, "tol", None) or 1e-8,
        fmt=args.format or "csv",
        oracle=getattr(args, "oracle", False),
        output=args.output,
    )


def _audit_sweep(config: RunConfig, result: SweepResult) -> None:
    """Cross-check a sample of pure-sweep rows against the Fock oracle."""
    if config.p is not None or any(ax.name == "p" for ax in config.axes):
        print("oracle audit skipped: mixed-state sweep", file=sys.stderr)
        return
    points = list(grid_points(config.grid()))
    stride = max(1, len(points) // _ORACLE_AUDIT_ROWS)
    worst = 0.0
    audited = 0
    for index in range(0, len(points), stride):
        _, spec, _ = points[index]
        concurrence = result.rows[index][-2]
        if spec.is_degenerate:
            continue
        oracle_value = fock.concurrence_oracle(spec)
        worst = max(worst, abs(concurrence - oracle_value))
        audited += 1
    if worst > _ORACLE_AUDIT_TOL:
        raise NumericalFailureError(
            f"oracle audit failed: max |closed-form - oracle| = {worst:.3e}"
        )
    print(
        f"oracle audit passed: {audited} rows, max |diff| = {worst:.3e}",
        file=sys.stderr,
    )


def _cmd_sweep(args) -> int:
    config = _config_from_args(args, "sweep")
    result = sweep(config.grid())
    if config.oracle:
        _audit_sweep(config, result)
    _write_output(_table_text(result, config.fmt), config.output)
    return EXIT_OK


def _cmd_pcrit(args) -> int:
    config = _config_from_args(args, "pcrit")
    if len(config.axes) > 1:
        raise GridError("pcrit sweeps at most one axis")
    if config.axes:
        axis = config.axes[0]
        if axis.name == "p":
            raise GridError("p is the threshold variable and cannot be a pcrit axis")
        grid = SweepGrid(base=config.spec(), axes=config.axes)
        rows = []
        for values, spec, _ in grid_points(grid):
            rows.append((float(values[0]), p_critical(spec, config.tol)))
        table = SweepResult(columns=(axis.name, "p_crit"), rows=rows)
        _write_output(_table_text(table, config.fmt), config.output)
        return EXIT_OK
    value = p_critical(config.spec(), config.tol)
    fmt = "json" if config.fmt == "json" else "text"
    _write_output(_scalar_text([("p_crit", value)], fmt), config.output)
    return EXIT_OK


def _read_xy_table(path: str) -> list[tuple[float, float]]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [line.strip() for line in fh if line.strip()]
    except OSError:
        raise
    if not lines:
        raise OSError(f"no data rows in {path}")
    rows: list[tuple[float, float]] = []
    for lineno, line in enumerate(lines, start=1):
        parts = line.split(",")
        if len(parts) < 2:
            raise OSError(f"{path}:{lineno}: expected at least two comma-separated columns")
        try:
            rows.append((float(parts[0]), float(parts[1])))
        except ValueError:
            if lineno == 1:
                continue  # header row
            raise OSError(f"{path}:{lineno}: non-numeric row") from None
    if not rows:
        raise OSError(f"no numeric rows in {path}")
    return rows


def _cmd_fit(args) -> int:
    data = _read_xy_table(args.input)
    fitter = fit_tanh if args.model == "tanh" else fit_gaussian
    result = fitter(data)
    payload = result.as_dict()
    payload["params"] = {k: float(_fmt(v)) for k, v in payload["params"].items()}
    payload["residual_rms"] = (
        float(_fmt(payload["residual_rms"]))
        if math.isfinite(payload["residual_rms"])
        else None
    )
    text = json.dumps(payload, indent=2) + "\n"
    _write_output(text, args.output)
    return EXIT_OK


def _add_spec_arguments(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--alpha", type=parse_complex, default=0j, required=required,
                        help="coherent amplitude of the first branch ('re' or 're+imi')")
    parser.add_argument("--beta", type=parse_complex, default=0j, required=required,
                        help="coherent amplitude of the second branch")
    parser.add_argument("--gamma", type=parse_complex, default=0j,
                        help="common displacement folded into the amplitudes (default 0)")
    parser.add_argument("--u", type=parse_complex, default=complex(1 / math.sqrt(2)),
                        help="weight of the first branch (weights are normalized)")
    parser.add_argument("--v", type=parse_complex, default=complex(1 / math.sqrt(2)),
                        help="weight of the second branch")
    parser.add_argument("--m", type=int, default=0, help="photons added to the first branch")
    parser.add_argument("--n", type=int, default=0, help="photons added to the second branch")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pacsent",
        description="Entanglement of photon-added coherent state superpositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_overlap = sub.add_parser("overlap", help="closed-form branch overlap")
    p_overlap.add_argument("--alpha", type=parse_complex, required=True)
    p_overlap.add_argument("--beta", type=parse_complex, required=True)
    p_overlap.add_argument("--m", type=int, required=True)
    p_overlap.add_argument("--n", type=int, required=True)
    p_overlap.add_argument("--format", choices=("text", "json"), default="text")
    p_overlap.add_argument("--output", default=None)
    p_overlap.set_defaults(handler=_cmd_overlap)

    p_conc = sub.add_parser("concurrence", help="concurrence of a superposition spec")
    _add_spec_arguments(p_conc, required=False)
    p_conc.add_argument("--p", type=float, default=None,
                        help="depolarizing mixing parameter in [0, 0.75]")
    p_conc.add_argument("--oracle", action="store_true",
                        help="also report the truncated-Fock-space oracle value")
    p_conc.add_argument("--format", choices=("text", "json"), default="text")
    p_conc.add_argument("--output", default=None)
    p_conc.set_defaults(handler=_cmd_concurrence)

    p_sweep = sub.add_parser("sweep", help="concurrence table over swept parameters")
    _add_spec_arguments(p_sweep, required=False)
    p_sweep.add_argument("--axis", type=_parse_axis, action="append",
                         help="swept axis as name:start:stop:count (max twice)")
    p_sweep.add_argument("--p", type=float, default=None, help="fixed mixing parameter")
    p_sweep.add_argument("--config", default=None, help="key = value config file")
    p_sweep.add_argument("--oracle", action="store_true",
                         help="audit a sample of rows against the Fock oracle")
    p_sweep.add_argument("--format", choices=("csv", "json"), default=None)
    p_sweep.add_argument("--output", default=None)
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_pcrit = sub.add_parser("pcrit", help="critical depolarization probability")
    _add_spec_arguments(p_pcrit, required=False)
    p_pcrit.add_argument("--axis", type=_parse_axis, action="append",
                         help="optional swept axis producing an (x, p_crit) table")
    p_pcrit.add_argument("--tol", type=float, default=None, help="bisection tolerance")
    p_pcrit.add_argument("--config", default=None, help="key = value config file")
    p_pcrit.add_argument("--format", choices=("csv", "json"), default=None)
    p_pcrit.add_argument("--output", default=None)
    p_pcrit.set_defaults(handler=_cmd_pcrit)

    p_fit = sub.add_parser("fit", help="fit a tanh or gaussian model to an (x, y) table")
    p_fit.add_argument("--input", required=True, help="CSV path (x in column 1, y in column 2)")
    p_fit.add_argument("--model", choices=("tanh", "gaussian"), required=True)
    p_fit.add_argument("--output", default=None)
    p_fit.set_defaults(handler=_cmd_fit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.handler(args)
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, PacsentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
