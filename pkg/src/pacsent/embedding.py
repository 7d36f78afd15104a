"""Two-qubit embedding of a bipartite photon-added coherent state superposition.

The two non-orthogonal branch states per mode,

    |A> = a^dag^m |alpha'>    and    |B> = a^dag^n |beta'>,

are orthonormalized by Gram-Schmidt (|0> along |A|, |1> along the residual of
|B>), and the full state

    u |A>_A |B>_B + v |B>_A |A>_B

is expressed as four computational-basis coefficients.  All intermediate
norms are carried in the log domain; only order-one ratios are converted
back to ordinary complex numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpecError, RangeError
from .specfun import ScaledComplex, pacs_overlap

# Squared-ratio threshold declaring the Gram-Schmidt residual numerically
# zero: residual norm below 1e-14 of the original branch norm.
_DEGENERATE_RATIO_LOG = 2.0 * math.log(1e-14)

_WEIGHT_NORM_TOL = 1e-12


def _as_finite_complex(value, name: str) -> complex:
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"{name} must be finite")
    return value


@dataclass(frozen=True)
class SuperpositionSpec:
    """Full parameter set of the superposition u|alpha',m>|beta',n> + v|beta',n>|alpha',m>.

    ``gamma`` is a common displacement folded into the amplitudes before any
    computation: effective alpha is ``alpha + gamma`` and effective beta is
    ``beta - gamma``.  The weights must satisfy |u|^2 + |v|^2 = 1 within
    1e-12 (use :meth:`with_normalized_weights` to rescale arbitrary ones).
    """

    alpha: complex
    beta: complex
    u: complex
    v: complex
    m: int
    n: int
    gamma: complex = 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _as_finite_complex(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _as_finite_complex(self.beta, "beta"))
        object.__setattr__(self, "gamma", _as_finite_complex(self.gamma, "gamma"))
        object.__setattr__(self, "u", _as_finite_complex(self.u, "u"))
        object.__setattr__(self, "v", _as_finite_complex(self.v, "v"))
        for name in ("m", "n"):
            k = getattr(self, name)
            if int(k) != k or k < 0:
                raise ValueError(f"{name} must be a nonnegative integer")
            object.__setattr__(self, name, int(k))
        norm2 = abs(self.u) ** 2 + abs(self.v) ** 2
        if abs(norm2 - 1.0) > _WEIGHT_NORM_TOL:
            raise ValueError(
                f"weights must satisfy |u|^2 + |v|^2 = 1 within {_WEIGHT_NORM_TOL:g} "
                f"(got {norm2!r}); use with_normalized_weights()"
            )

    @classmethod
    def with_normalized_weights(
        cls, alpha, beta, u, v, m, n, gamma=0j
    ) -> "SuperpositionSpec":
        """Build a spec, rescaling (u, v) onto the unit sphere."""
        u = _as_finite_complex(u, "u")
        v = _as_finite_complex(v, "v")
        scale = math.sqrt(abs(u) ** 2 + abs(v) ** 2)
        if scale == 0:
            raise ValueError("weights u and v must not both be zero")
        return cls(alpha, beta, u / scale, v / scale, m, n, gamma)

    @property
    def effective_alpha(self) -> complex:
        return self.alpha + self.gamma

    @property
    def effective_beta(self) -> complex:
        return self.beta - self.gamma

    @property
    def is_degenerate(self) -> bool:
        """True when the two branch states coincide exactly (same amplitude, m = n)."""
        return self.m == self.n and self.effective_alpha == self.effective_beta


@dataclass(frozen=True)
class BasisConstants:
    """Gram-Schmidt constants of the orthonormal qubit basis.

    ``n1`` and ``n2`` normalize |A> and the residual of |B|; ``z`` is the
    overlap coefficient n1 * <alpha'|a^m a^dag^n|beta'> subtracted in the
    orthogonalization; ``big_n`` normalizes the full two-mode superposition.
    """

    n1: ScaledComplex
    n2: ScaledComplex
    z: complex
    big_n: ScaledComplex


@dataclass(frozen=True)
class QubitCoefficients:
    """Amplitudes of the embedded state on {|00>, |01>, |10>, |11>}.

    The embedding never populates |11>: c11 is identically zero.
    """

    c00: complex
    c01: complex
    c10: complex
    c11: complex

    def as_vector(self) -> np.ndarray:
        return np.array([self.c00, self.c01, self.c10, self.c11], dtype=np.complex128)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.as_vector()))


def branch_overlaps(
    spec: SuperpositionSpec,
) -> tuple[ScaledComplex, ScaledComplex, ScaledComplex]:
    """Single-mode overlaps (<A|A>, <B|B>, <A|B>) of the two branch states."""
    a, b = spec.effective_alpha, spec.effective_beta
    s_aa = pacs_overlap(a, a, spec.m, spec.m)
    s_bb = pacs_overlap(b, b, spec.n, spec.n)
    s_ab = pacs_overlap(a, b, spec.m, spec.n)
    return s_aa, s_bb, s_ab


def _constants(
    spec: SuperpositionSpec,
) -> tuple[ScaledComplex, ScaledComplex, ScaledComplex, ScaledComplex]:
    """(n1, n2, z, big_n) with z still in scaled form."""
    if spec.is_degenerate:
        raise DegenerateSpecError(
            "branch states coincide (effective alpha = effective beta and m = n)"
        )
    s_aa, s_bb, s_ab = branch_overlaps(spec)
    n1 = ScaledComplex(-0.5 * s_aa.log_magnitude, 0.0)
    z = n1 * s_ab
    # Gram-Schmidt residual: ||B - z|0>||^2 = <B|B> - |z|^2.
    residual2 = s_bb - z.abs_squared()
    if (
        residual2.is_zero
        or math.cos(residual2.phase) <= 0.0
        or residual2.log_magnitude - s_bb.log_magnitude < _DEGENERATE_RATIO_LOG
    ):
        raise DegenerateSpecError(
            "Gram-Schmidt residual vanishes: branch states are numerically the same ray"
        )
    n2 = ScaledComplex(-0.5 * residual2.log_magnitude, 0.0)
    # ||u|A>|B> + v|B>|A>||^2 = <A|A><B|B> + 2 Re(u* v) |<A|B>|^2.
    cross_weight = 2.0 * (spec.u.conjugate() * spec.v).real
    total2 = s_aa * s_bb + cross_weight * s_ab.abs_squared()
    if total2.is_zero or math.cos(total2.phase) <= 0.0:
        raise DegenerateSpecError("superposition has zero norm")
    big_n = ScaledComplex(-0.5 * total2.log_magnitude, 0.0)
    return n1, n2, z, big_n


def basis_constants(spec: SuperpositionSpec) -> BasisConstants:
    """Normalization constants and overlap coefficient of the qubit basis."""
    n1, n2, z, big_n = _constants(spec)
    try:
        z_plain = z.to_complex()
    except OverflowError as exc:
        raise RangeError(f"overlap coefficient exceeds double range: {exc}") from exc
    return BasisConstants(n1=n1, n2=n2, z=z_plain, big_n=big_n)


def qubit_coefficients(spec: SuperpositionSpec) -> QubitCoefficients:
    """Computational-basis amplitudes K(u|01> + v|10> + z n2 (u+v)|00>), K = big_n/(n1 n2).

    The output is renormalized to unit norm to absorb accumulated rounding.
    """
    n1, n2, z, big_n = _constants(spec)
    k_ratio = (big_n / (n1 * n2)).to_complex()  # |K| <= 1 by construction
    c01 = k_ratio * spec.u
    c10 = k_ratio * spec.v
    c00 = ((big_n / (n1 * n2)) * z * n2 * (spec.u + spec.v)).to_complex()
    norm = math.sqrt(abs(c00) ** 2 + abs(c01) ** 2 + abs(c10) ** 2)
    return QubitCoefficients(c00 / norm, c01 / norm, c10 / norm, 0j)
