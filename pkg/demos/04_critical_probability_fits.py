#!/usr/bin/env python3
"""Critical-probability trends and their compact model fits.

p_crit traced against the displacement gamma is summarized by
a + b tanh(d (gamma - c)) for the bare superposition and by a gaussian dip
a + b exp(-((gamma - c)/v)^2) once photons are added.  The same machinery
drives the bundled recipes/fig5*.cfg files used by the acceptance suite.
"""

import csv
import math
from pathlib import Path

import numpy as np

from pacsent import SuperpositionSpec, fit_gaussian, fit_tanh, p_critical

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)
INV_SQRT2 = 1 / math.sqrt(2)


def threshold_curve(m, n, gammas, tol=1e-8):
    rows = []
    for g in gammas:
        spec = SuperpositionSpec(0, 0, INV_SQRT2, INV_SQRT2, m, n, gamma=float(g))
        rows.append((float(g), p_critical(spec, tol=tol)))
    return rows


def describe(fit):
    pairs = ", ".join(f"{k} = {v:+.5f}" for k, v in zip(fit.param_names, fit.params))
    return f"{pairs}   (rms {fit.residual_rms:.2e}, converged={fit.converged})"


gammas = np.linspace(0.0, 3.0, 61)

print("=== bare superposition (m = n = 0): tanh saturation toward 1/2 ===")
data = threshold_curve(0, 0, gammas)
with open(OUT / "threshold_tanh.csv", "w", newline="") as fh:
    csv.writer(fh).writerows([("gamma", "p_crit"), *data])
fit = fit_tanh(data)
print("  " + describe(fit))
print(f"  saturation a + b = {fit.params[0] + fit.params[1]:.5f} (ceiling 0.5)")

print("\n=== one added photon (m = 0, n = 1): shallow gaussian dip ===")
data = threshold_curve(0, 1, gammas)
with open(OUT / "threshold_gauss_n1.csv", "w", newline="") as fh:
    csv.writer(fh).writerows([("gamma", "p_crit"), *data])
fit = fit_gaussian(data)
print("  " + describe(fit))
lowest = min(data, key=lambda row: row[1])
print(f"  deepest point: p_crit = {lowest[1]:.6f} at gamma = {lowest[0]:.2f}")

print("\n=== two added photons (m = 0, n = 2): dip shrinks to ~3e-3 ===")
data = threshold_curve(0, 2, gammas)
fit = fit_gaussian(data)
print("  " + describe(fit))
print("  (a coarse threshold scan reads this curve as exactly flat)")

print("\n=== synthetic sanity: exact model recovery ===")
x = np.linspace(0.0, 3.0, 40)
exact = 0.2 + 0.3 * np.tanh(3.2 * (x - 0.3))
fit = fit_tanh(np.column_stack([x, exact]))
print("  truth (0.2, 0.3, 0.3, 3.2) ->", tuple(round(p, 8) for p in fit.params))
