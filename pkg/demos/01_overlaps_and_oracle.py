#!/usr/bin/env python3
"""Branch overlaps of photon-added coherent states, cross-checked two ways.

The closed form evaluates <alpha| a^m a^dag^n |beta> through a regularized
confluent hypergeometric series carried in the log domain, so it survives
regimes where m! L_m(-|alpha|^2) dwarfs double precision.  The truncated
Fock-space oracle builds the same quantity amplitude by amplitude.
"""

import math

import numpy as np

from pacsent import fock, laguerre, pacs_overlap

print("=== closed-form overlaps ===")
cases = [
    (1, 1, 2, 2, "self-overlap: 2! L_2(-1) = 7"),
    (1, 2, 0, 0, "coherent overlap: e^{-5/2+2}"),
    (1, 2, 1, 2, "mixed photon addition"),
    (2 + 1j, -1 + 0.5j, 3, 1, "complex amplitudes"),
]
for alpha, beta, m, n, label in cases:
    value = pacs_overlap(alpha, beta, m, n)
    print(f"  <a={alpha}, b={beta}, m={m}, n={n}>  ->  {value.to_complex():.12g}")
    print(f"      ({label}; log-magnitude {value.log_magnitude:.6f})")

print("\n=== the same numbers from the truncated Fock space ===")
for alpha, beta, m, n, _ in cases:
    dim = 128 + m + n
    bra = fock.create(fock.coherent_fock(alpha, dim), m)
    ket = fock.create(fock.coherent_fock(beta, dim), n)
    oracle = fock.inner(bra, ket)
    closed = pacs_overlap(alpha, beta, m, n).to_complex()
    print(f"  m={m}, n={n}:  oracle {oracle:.12g},  |diff| = {abs(oracle - closed):.3e}")

print("\n=== log-domain headroom ===")
for m, amp in [(10, 5.0), (20, 10.0), (40, 25.0)]:
    value = pacs_overlap(amp, amp, m, m)
    print(
        f"  m={m}, |alpha|={amp}: log <A|A> = {value.log_magnitude:.3f}"
        f"  (value ~ 10^{value.log_magnitude / math.log(10):.0f})"
    )

print("\n=== norm identity: <A|A> = m! L_m(-|alpha|^2) ===")
worst = 0.0
for m in range(0, 21, 5):
    for amp in (0.5, 2.0, 8.0):
        got = pacs_overlap(amp, amp, m, m).log_magnitude
        ref = math.lgamma(m + 1) + math.log(laguerre(m, -amp * amp))
        worst = max(worst, abs(got - ref))
print(f"  worst log deviation over the grid: {worst:.3e}")

print("\n=== certified truncation ===")
vec = fock.coherent_fock(3.0, 128)
tail = float(np.sum(np.abs(vec[-10:]) ** 2))
print(f"  coherent |alpha|=3 at dim 128: tail mass {tail:.3e} (certified < 1e-20)")
