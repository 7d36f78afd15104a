"""Parameter sweeps, the critical depolarization probability, and curve fits.

Sweeps evaluate the concurrence over up to two swept parameters (pure, or
mixed when a channel parameter is present).  ``p_critical`` locates the
smallest mixing parameter with vanishing concurrence by a coarse scan plus
bisection, which the monotonicity of concurrence in p makes reliable.  The
critical-probability trends are summarized by four-parameter fits

    a + b*tanh(d*(x - c))        and        a + b*exp(-((x - c)/v)^2).
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from .embedding import SuperpositionSpec, qubit_coefficients
from .entanglement import FULL_MIXING, concurrence_mixed, concurrence_pure, depolarize
from .errors import BracketError, DegenerateSpecError, GridError

_SWEEPABLE = ("alpha", "beta", "alpha_beta", "gamma", "u", "m", "n", "p")
_INTEGER_FIELDS = ("m", "n")

_SCAN_POINTS = 64
_MIN_TOL = 1e-10
_MIN_FIT_POINTS = 8


def spec_concurrence(
    spec: SuperpositionSpec, p: float | None = None
) -> tuple[float, bool]:
    """Concurrence of the (optionally depolarized) state, with a degeneracy flag.

    Degenerate specs (coinciding branches) carry no entanglement and yield
    (0.0, True) instead of raising.
    """
    try:
        coeffs = qubit_coefficients(spec)
    except DegenerateSpecError:
        return 0.0, True
    if p is None:
        return concurrence_pure(coeffs), False
    return concurrence_mixed(depolarize(coeffs, p)), False


@dataclass(frozen=True)
class Axis:
    """One swept parameter: ``count`` evenly spaced values on [start, stop]."""

    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        if self.name not in _SWEEPABLE:
            raise GridError(
                f"cannot sweep {self.name!r}; valid axes: {', '.join(_SWEEPABLE)}"
            )
        if int(self.count) != self.count or self.count < 2:
            raise GridError("axis sample count must be an integer >= 2")
        object.__setattr__(self, "count", int(self.count))
        object.__setattr__(self, "start", float(self.start))
        object.__setattr__(self, "stop", float(self.stop))
        if not (self.start < self.stop):
            raise GridError("axis requires start < stop")
        if self.name == "u" and (self.start < -1.0 or self.stop > 1.0):
            raise GridError("u axis must stay within [-1, 1]")
        if self.name == "p" and (self.start < 0.0 or self.stop > FULL_MIXING):
            raise GridError(f"p axis must stay within [0, {FULL_MIXING}]")

    def values(self) -> np.ndarray:
        grid = np.linspace(self.start, self.stop, self.count)
        if self.name in _INTEGER_FIELDS:
            rounded = np.rint(grid)
            if np.max(np.abs(grid - rounded)) > 1e-9:
                raise GridError(
                    f"axis {self.name!r} must sample integers; adjust start/stop/count"
                )
            return rounded
        return grid


@dataclass(frozen=True)
class SweepGrid:
    """Up to two swept axes over a base spec, optionally through the channel.

    A fixed channel parameter applies to every grid point; sweeping "p"
    instead makes the mixing parameter one of the axes.
    """

    base: SuperpositionSpec
    axes: tuple[Axis, ...] = ()
    p: float | None = None

    def __post_init__(self) -> None:
        axes = tuple(self.axes)
        object.__setattr__(self, "axes", axes)
        if len(axes) > 2:
            raise GridError("at most two axes may be swept")
        names = [ax.name for ax in axes]
        if len(set(names)) != len(names):
            raise GridError("swept parameter names must be distinct")
        if self.p is not None:
            if "p" in names:
                raise GridError("p cannot be both fixed and swept")
            if not 0.0 <= self.p <= FULL_MIXING:
                raise GridError(f"fixed p must lie in [0, {FULL_MIXING}]")


@dataclass(frozen=True)
class SweepResult:
    """Row-major table: one row per grid point."""

    columns: tuple[str, ...]
    rows: list[tuple]


def _apply_axis(spec: SuperpositionSpec, name: str, value: float) -> SuperpositionSpec:
    if name == "u":
        # Real weight sweep: v is fixed to the positive root of 1 - u^2.
        return dataclasses.replace(
            spec, u=complex(value), v=complex(math.sqrt(max(0.0, 1.0 - value * value)))
        )
    if name in _INTEGER_FIELDS:
        return dataclasses.replace(spec, **{name: int(value)})
    if name == "alpha_beta":
        return dataclasses.replace(spec, alpha=complex(value), beta=complex(value))
    return dataclasses.replace(spec, **{name: complex(value)})


def grid_points(grid: SweepGrid):
    """Yield (axis values, spec, p) for every grid point in row-major order."""
    axis_values = [ax.values() for ax in grid.axes]
    for point in itertools.product(*axis_values):
        spec = grid.base
        p = grid.p
        for ax, value in zip(grid.axes, point):
            if ax.name == "p":
                p = float(value)
            else:
                spec = _apply_axis(spec, ax.name, float(value))
        yield tuple(float(x) for x in point), spec, p


def sweep(grid: SweepGrid) -> SweepResult:
    """Evaluate the concurrence on every grid point, flagging degenerate ones."""
    columns = tuple(ax.name for ax in grid.axes) + ("concurrence", "degenerate")
    rows: list[tuple] = []
    for point, spec, p in grid_points(grid):
        concurrence, degenerate = spec_concurrence(spec, p)
        rows.append(point + (concurrence, int(degenerate)))
    return SweepResult(columns=columns, rows=rows)


def p_critical(spec: SuperpositionSpec, tol: float = 1e-8) -> float:
    """Smallest mixing parameter at which the depolarized concurrence vanishes.

    Returns 0 when the pure state is already unentangled (including
    degenerate specs).  Otherwise brackets the zero crossing on a 64-point
    scan of [0, 3/4] and bisects to within ``tol``; concurrence is
    non-increasing in p, so the first scan zero brackets the crossing.
    """
    tol = float(tol)
    if tol < _MIN_TOL:
        raise ValueError(f"tol must be >= {_MIN_TOL:g}")
    try:
        coeffs = qubit_coefficients(spec)
    except DegenerateSpecError:
        return 0.0
    if concurrence_pure(coeffs) <= 0.0:
        return 0.0

    def entangled(p: float) -> bool:
        return concurrence_mixed(depolarize(coeffs, p)) > 0.0

    scan = np.linspace(0.0, FULL_MIXING, _SCAN_POINTS)
    hi = None
    for prev, cur in itertools.pairwise(scan):
        if not entangled(float(cur)):
            lo, hi = float(prev), float(cur)
            break
    if hi is None:
        raise BracketError(
            "concurrence stayed positive up to full mixing; monotonicity is broken"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if entangled(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class FitResult:
    """Fitted model parameters with the RMS residual of the best start."""

    model: str
    param_names: tuple[str, ...]
    params: tuple[float, ...]
    residual_rms: float
    converged: bool

    def as_dict(self) -> dict:
        return {
            "model": self.model,
            "params": dict(zip(self.param_names, self.params)),
            "residual_rms": self.residual_rms,
            "converged": self.converged,
        }


def _model_tanh(params: np.ndarray, x: np.ndarray) -> np.ndarray:
    a, b, c, d = params
    return a + b * np.tanh(d * (x - c))


def _model_gaussian(params: np.ndarray, x: np.ndarray) -> np.ndarray:
    a, b, c, v = params
    return a + b * np.exp(-(((x - c) / v) ** 2))


def _fit_multistart(model: str, model_fn, param_names, data) -> FitResult:
    arr = np.asarray(data, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("data must be a sequence of (x, y) pairs")
    if arr.shape[0] < _MIN_FIT_POINTS:
        raise ValueError(f"need at least {_MIN_FIT_POINTS} data points")
    x, y = arr[:, 0], arr[:, 1]

    a0 = float(np.mean(y))
    half_range = 0.5 * float(np.max(y) - np.min(y))
    if half_range == 0.0:
        half_range = 1e-6
    c0 = 0.5 * float(np.min(x) + np.max(x))

    def residuals(params: np.ndarray) -> np.ndarray:
        return model_fn(params, x) - y

    best = None
    best_cost = math.inf
    # 8 data-driven starts: +/- half-range amplitude x four width scales.
    for width in (0.1, 0.5, 1.0, 3.0):
        for sign in (1.0, -1.0):
            start = np.array([a0, sign * half_range, c0, width])
            try:
                result = least_squares(
                    residuals,
                    start,
                    method="lm",
                    ftol=1e-12,
                    xtol=1e-12,
                    gtol=1e-12,
                    max_nfev=2500,
                )
            except Exception:
                continue
            if np.isfinite(result.cost) and result.cost < best_cost:
                best, best_cost = result, result.cost
    if best is None:
        return FitResult(model, param_names, (a0, half_range, c0, 1.0), math.inf, False)

    params = [float(p) for p in best.x]
    if model == "tanh" and params[3] < 0:
        params[1], params[3] = -params[1], -params[3]  # tanh is odd: same curve
    if model == "gaussian":
        params[3] = abs(params[3])  # width enters squared
    rms = float(np.sqrt(np.mean(residuals(np.asarray(params)) ** 2)))
    return FitResult(model, param_names, tuple(params), rms, bool(best.status > 0))


def fit_tanh(data) -> FitResult:
    """Least-squares fit of a + b*tanh(d*(x - c)) with 8 multi-starts."""
    return _fit_multistart("tanh", _model_tanh, ("a", "b", "c", "d"), data)


def fit_gaussian(data) -> FitResult:
    """Least-squares fit of a + b*exp(-((x - c)/v)^2) with 8 multi-starts."""
    return _fit_multistart("gaussian", _model_gaussian, ("a", "b", "c", "v"), data)
