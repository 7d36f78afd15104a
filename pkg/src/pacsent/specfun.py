"""Overflow-safe special functions and the photon-added coherent state overlap.

Everything that can grow like Gamma(1+m) * L_m(|alpha|^2) is carried as a
:class:`ScaledComplex` (log-magnitude plus phase) so that downstream ratios
can be formed by subtracting logs instead of dividing huge doubles.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass

from .errors import ConvergenceError, RangeError

_TWO_PI = 2.0 * math.pi
_LOG_MAX = math.log(sys.float_info.max)  # ~709.78; exp() overflows beyond this

# Direct-series controls: stop once the running term has been below
# 1e-18 * |accumulated sum| for three consecutive terms.
_SERIES_RTOL = 1e-18
_SERIES_STREAK = 3
_SERIES_MAX_TERMS = 10_000

_OVERLAP_MAX_AMPLITUDE = 50.0  # supported |alpha|, |beta| for pacs_overlap


def _wrap_phase(phi: float) -> float:
    """Reduce an angle to the canonical interval (-pi, pi]."""
    r = math.remainder(phi, _TWO_PI)
    if r <= -math.pi:
        r += _TWO_PI
    return r


@dataclass(frozen=True)
class ScaledComplex:
    """A complex value stored as natural-log magnitude and phase.

    ``log_magnitude = -inf`` encodes an exact zero; the phase of a zero is
    canonically 0.  Phases are kept in (-pi, pi].
    """

    log_magnitude: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        if math.isnan(self.log_magnitude) or math.isnan(self.phase):
            raise ValueError("ScaledComplex fields must not be NaN")
        if self.log_magnitude == -math.inf:
            object.__setattr__(self, "phase", 0.0)
        else:
            object.__setattr__(self, "phase", _wrap_phase(self.phase))

    @classmethod
    def zero(cls) -> "ScaledComplex":
        return cls(-math.inf, 0.0)

    @classmethod
    def from_complex(cls, value: complex) -> "ScaledComplex":
        w = complex(value)
        if w == 0:
            return cls.zero()
        return cls(math.log(abs(w)), cmath.phase(w))

    @property
    def is_zero(self) -> bool:
        return self.log_magnitude == -math.inf

    @property
    def representable(self) -> bool:
        """True when ``to_complex`` fits in an ordinary double."""
        return self.is_zero or abs(self.log_magnitude) <= _LOG_MAX

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0j
        if self.log_magnitude > _LOG_MAX:
            raise OverflowError(
                f"magnitude exp({self.log_magnitude:.6g}) exceeds double range"
            )
        return cmath.rect(math.exp(self.log_magnitude), self.phase)

    def conjugate(self) -> "ScaledComplex":
        return ScaledComplex(self.log_magnitude, -self.phase)

    def abs_value(self) -> "ScaledComplex":
        return ScaledComplex(self.log_magnitude, 0.0)

    def abs_squared(self) -> "ScaledComplex":
        return ScaledComplex(2.0 * self.log_magnitude, 0.0)

    def __neg__(self) -> "ScaledComplex":
        if self.is_zero:
            return self
        return ScaledComplex(self.log_magnitude, self.phase + math.pi)

    def __mul__(self, other) -> "ScaledComplex":
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex.from_complex(other)
        if self.is_zero or other.is_zero:
            return ScaledComplex.zero()
        return ScaledComplex(
            self.log_magnitude + other.log_magnitude, self.phase + other.phase
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScaledComplex":
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex.from_complex(other)
        if other.is_zero:
            raise ZeroDivisionError("division by ScaledComplex zero")
        if self.is_zero:
            return self
        return ScaledComplex(
            self.log_magnitude - other.log_magnitude, self.phase - other.phase
        )

    def __add__(self, other: "ScaledComplex") -> "ScaledComplex":
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex.from_complex(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        ref = max(self.log_magnitude, other.log_magnitude)
        mantissa = cmath.rect(
            math.exp(self.log_magnitude - ref), self.phase
        ) + cmath.rect(math.exp(other.log_magnitude - ref), other.phase)
        if mantissa == 0:
            return ScaledComplex.zero()
        return ScaledComplex(ref + math.log(abs(mantissa)), cmath.phase(mantissa))

    def __sub__(self, other: "ScaledComplex") -> "ScaledComplex":
        return self + (-other)

    def __pow__(self, exponent: float) -> "ScaledComplex":
        """Principal-branch real power (phase is scaled as stored)."""
        if self.is_zero:
            if exponent <= 0:
                raise ZeroDivisionError("nonpositive power of ScaledComplex zero")
            return self
        return ScaledComplex(self.log_magnitude * exponent, self.phase * exponent)


def laguerre(m: int, x: float) -> float:
    """Laguerre polynomial L_m(x) by the stable three-term recurrence.

    L_0 = 1, L_1 = 1 - x, (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
    """
    if m < 0 or int(m) != m:
        raise ValueError("order m must be a nonnegative integer")
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("argument x must be finite")
    m = int(m)
    if m == 0:
        return 1.0
    prev, cur = 1.0, 1.0 - x
    for k in range(1, m):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
    return cur


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    x = float(x)
    if not x > 0:
        raise ValueError("log_gamma requires x > 0")
    return math.lgamma(x)


def _scaled_sum(log_t0: float, phase_t0: float, ratio, n_terms=None) -> ScaledComplex:
    """Sum a series given its first term (in log form) and a term-ratio callable.

    ``ratio(k)`` maps term k to term k+1.  The running term and accumulator
    share one log-domain scale so individual terms may exceed double range.
    ``n_terms`` limits the sum to that many terms (finite series); otherwise
    the 1e-18 / 3-consecutive-terms rule decides, with a hard iteration cap.
    """
    scale = log_t0
    term = cmath.rect(1.0, phase_t0)
    acc = term
    streak = 0
    k = 0
    limit = n_terms if n_terms is not None else _SERIES_MAX_TERMS
    while True:
        k += 1
        if n_terms is not None and k >= n_terms:
            break
        if n_terms is None and k >= limit:
            raise ConvergenceError(
                f"series did not converge within {limit} terms "
                "(argument outside supported range)"
            )
        term *= ratio(k - 1)
        acc += term
        if n_terms is None:
            if abs(term) <= _SERIES_RTOL * abs(acc):
                streak += 1
                if streak >= _SERIES_STREAK:
                    break
            else:
                streak = 0
        mag = abs(acc)
        if mag > 1e120 or (mag > 0 and mag < 1e-120 and abs(term) < 1e-120):
            shift = math.log(mag)
            scale += shift
            rescale = math.exp(-shift)
            acc *= rescale
            term *= rescale
    if acc == 0:
        return ScaledComplex.zero()
    return ScaledComplex(scale + math.log(abs(acc)), cmath.phase(acc))


def _series_1f1_regularized(a: int, b: int, z: complex) -> ScaledComplex:
    """Direct defining series of 1F1~(a;b;z) for b >= 1."""
    # t_0 = 1/Gamma(b); t_{k+1}/t_k = (a+k) z / ((b+k)(k+1))
    return _scaled_sum(
        -math.lgamma(b), 0.0, lambda k: (a + k) * z / ((b + k) * (k + 1))
    )


def _finite_1f1_regularized(a: int, b: int, z: complex) -> ScaledComplex:
    """1F1~(a;b;z) = e^z 1F1~(b-a;b;-z) when b - a <= 0 (finite sum).

    With K = a - b >= 0 the reflected series collapses to
    sum_{k=0}^{K} K! z^k / ((K-k)! k! Gamma(b+k)), all coefficients
    nonnegative, so there is no alternating-series cancellation.
    """
    big_k = a - b
    k_start = max(0, 1 - b)  # terms with b + k <= 0 vanish (1/Gamma = 0)
    if k_start > big_k:
        return ScaledComplex.zero()
    if z == 0:
        if k_start > 0:
            return ScaledComplex.zero()
        return ScaledComplex(-math.lgamma(b), 0.0)
    log_z = math.log(abs(z))
    arg_z = cmath.phase(z)
    log_t0 = (
        math.lgamma(big_k + 1)
        - math.lgamma(big_k - k_start + 1)
        - math.lgamma(k_start + 1)
        - math.lgamma(b + k_start)
        + k_start * log_z
    )
    phase_t0 = k_start * arg_z

    def ratio(j: int) -> complex:
        k = k_start + j
        return z * (big_k - k) / ((k + 1) * (b + k))

    total = _scaled_sum(log_t0, phase_t0, ratio, n_terms=big_k - k_start + 1)
    if total.is_zero:
        return total
    return ScaledComplex(total.log_magnitude + z.real, total.phase + z.imag)


def regularized_1f1(a: int, b: int, z: complex) -> ScaledComplex:
    """Regularized confluent hypergeometric function 1F1~(a;b;z) = 1F1/Gamma(b).

    Entire in b: for nonpositive integer b the leading terms (those with
    b + k <= 0) vanish identically.  ``a`` must be a positive integer; ``b``
    may be any integer.  Arguments with Re(z) < 0 are evaluated through the
    reflection 1F1~(a;b;z) = e^z 1F1~(b-a;b;-z), which avoids the
    e^{2|Re z|} cancellation of the raw alternating series; for b <= a the
    reflected series is a finite sum and is used for every z.
    """
    if int(a) != a or a < 1:
        raise ValueError("parameter a must be a positive integer")
    if int(b) != b:
        raise ValueError("parameter b must be an integer")
    a, b = int(a), int(b)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("argument z must be finite")
    if b <= a:
        return _finite_1f1_regularized(a, b, z)
    if z.real < 0:
        # b - a >= 1 here, and Re(-z) > 0 keeps the series same-signed.
        inner = _series_1f1_regularized(b - a, b, -z)
        if inner.is_zero:
            return inner
        return ScaledComplex(inner.log_magnitude + z.real, inner.phase + z.imag)
    return _series_1f1_regularized(a, b, z)


def _check_amplitude(value: complex, name: str) -> complex:
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise RangeError(f"{name} must be finite")
    if abs(value) > _OVERLAP_MAX_AMPLITUDE:
        raise RangeError(
            f"|{name}| = {abs(value):.3g} exceeds the supported range "
            f"(<= {_OVERLAP_MAX_AMPLITUDE:g})"
        )
    return value


def pacs_overlap(alpha: complex, beta: complex, m: int, n: int) -> ScaledComplex:
    """Non-normalized overlap <alpha| a^m a^dag^n |beta> of photon-added coherent states.

    Closed form, assembled in the log domain:

        exp(-(|alpha|^2+|beta|^2)/2) * beta^(m-n) * Gamma(1+m)
            * 1F1~(1+m; 1+m-n; conj(alpha)*beta)

    For beta = 0 with n > m the beta^(m-n) pole cancels against the
    regularized function; the defining photon-number sum then has the single
    surviving term n!/(n-m)! * conj(alpha)^(n-m) * exp(-|alpha|^2/2), which
    is used directly.
    """
    if int(m) != m or m < 0 or int(n) != n or n < 0:
        raise ValueError("photon-added counts m, n must be nonnegative integers")
    m, n = int(m), int(n)
    alpha = _check_amplitude(alpha, "alpha")
    beta = _check_amplitude(beta, "beta")

    prefactor = -0.5 * (abs(alpha) ** 2 + abs(beta) ** 2)
    if beta == 0 and n > m:
        if alpha == 0:
            return ScaledComplex.zero()
        log_mag = (
            prefactor
            + math.lgamma(n + 1)
            - math.lgamma(n - m + 1)
            + (n - m) * math.log(abs(alpha))
        )
        return ScaledComplex(log_mag, -(n - m) * cmath.phase(alpha))

    f = regularized_1f1(1 + m, 1 + m - n, alpha.conjugate() * beta)
    if f.is_zero:
        return f
    log_mag = f.log_magnitude + math.lgamma(1 + m) + prefactor
    phase = f.phase
    if m != n:
        if beta == 0:  # only reachable with m > n: beta^(m-n) = 0
            return ScaledComplex.zero()
        log_mag += (m - n) * math.log(abs(beta))
        phase += (m - n) * cmath.phase(beta)
    return ScaledComplex(log_mag, phase)
