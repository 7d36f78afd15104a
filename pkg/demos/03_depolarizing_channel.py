#!/usr/bin/env python3
"""Entanglement of the superposition under a depolarizing channel.

The channel mixes the pure projector with I/4: rho = (p/3) I + (1 - 4p/3)
|psi><psi|, fully mixed at p = 3/4.  For the maximally entangled family the
mixture is a Werner state and the concurrence is exactly max(0, 1 - 2p);
general states lose their entanglement at some smaller critical p.
"""

import math

import numpy as np

from pacsent import (
    SuperpositionSpec,
    concurrence_mixed,
    concurrence_x_state,
    depolarize,
    p_critical,
    qubit_coefficients,
)

INV_SQRT2 = 1 / math.sqrt(2)

print("=== Werner curve for an opposite-weight (maximally entangled) state ===")
bell_like = SuperpositionSpec(3, 3, INV_SQRT2, -INV_SQRT2, 1, 2)
coeffs = qubit_coefficients(bell_like)
print("  p       concurrence   max(0, 1-2p)")
for p in (0.0, 0.1, 0.25, 0.4, 0.5, 0.6, 0.75):
    value = concurrence_mixed(depolarize(coeffs, p))
    print(f"  {p:<7} {value:<13.9f} {max(0.0, 1 - 2 * p):.9f}")

print("\n=== two routes through the same X-shaped mixture ===")
rho = depolarize(coeffs, 0.2)
print(f"  eigenvalue route:  {concurrence_mixed(rho):.12f}")
print(f"  closed X form:     {concurrence_x_state(rho):.12f}")
print(f"  corner entries p/3 = {rho[0, 0].real:.6f}, inner overlap {rho[1, 2].real:+.6f}")

print("\n=== critical probability grows with photon addition ===")
print("  (alpha = beta = 3, symmetric weights, m = 0)")
print("  n    pure concurrence   p_crit")
for n in range(0, 9):
    spec = SuperpositionSpec(3, 3, INV_SQRT2, INV_SQRT2, 0, n)
    try:
        pure = (
            0.0
            if spec.is_degenerate
            else concurrence_mixed(depolarize(qubit_coefficients(spec), 0.0))
        )
    except Exception:
        pure = 0.0
    crit = p_critical(spec, tol=1e-8)
    bar = "#" * int(round(crit * 60))
    print(f"  {n:<4} {pure:<18.9f} {crit:.6f}  {bar}")

print("\n=== the Werner threshold 1/2 is a global ceiling ===")
rng = np.random.default_rng(5)
worst = 0.0
for _ in range(40):
    spec = SuperpositionSpec.with_normalized_weights(
        alpha=complex(rng.uniform(-3, 3), rng.uniform(-3, 3)),
        beta=complex(rng.uniform(-3, 3), rng.uniform(-3, 3)),
        u=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        v=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        m=int(rng.integers(0, 7)),
        n=int(rng.integers(0, 7)),
    )
    worst = max(worst, p_critical(spec, tol=1e-8))
print(f"  max p_crit over 40 random specs: {worst:.9f}  (bound: 0.5)")
