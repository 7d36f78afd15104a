"""Concurrence of pure and depolarized two-qubit states.

The mixed-state value is Wootters' formula: lambda_i are the square roots of
the eigenvalues of rho * rho_tilde with rho_tilde = (sy x sy) rho* (sy x sy),
conjugation taken entrywise in the computational basis, and

    C = max(0, lambda_1 - lambda_2 - lambda_3 - lambda_4).

For the symmetric X-shaped matrices produced by depolarizing a Bell-like
state there is also the closed form C = 2 max(0, |z| - sqrt(u+ u-)).
"""

from __future__ import annotations

import math

import numpy as np

from .embedding import QubitCoefficients
from .errors import NumericalFailureError, RangeError, XShapeError

# sigma_y (x) sigma_y in the ordered basis {|00>, |01>, |10>, |11>} (real).
_SY_SY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)

_HERMITICITY_TOL = 1e-12
_TRACE_TOL = 1e-12
_EIGENVALUE_FLOOR = -1e-10
_IMAG_EIGENVALUE_TOL = 1e-9
_X_SHAPE_TOL = 1e-12

FULL_MIXING = 0.75  # channel parameter at which the state becomes I/4


def concurrence_pure(coeffs: QubitCoefficients) -> float:
    """|<psi| sy x sy |psi*>| = 2 |c01 c10 - c00 c11|, clamped to [0, 1]."""
    vec = coeffs.as_vector()
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > 1e-8:
        raise ValueError(f"coefficients must be normalized (norm {norm!r})")
    value = 2.0 * abs(coeffs.c01 * coeffs.c10 - coeffs.c00 * coeffs.c11)
    return min(1.0, max(0.0, value))


def depolarize(coeffs: QubitCoefficients, p: float) -> np.ndarray:
    """Mixture (p/3) I + (1 - 4p/3) |psi><psi| for mixing parameter p in [0, 3/4].

    p = 0 returns the pure projector, p = 3/4 the maximally mixed I/4.
    """
    p = float(p)
    if not 0.0 <= p <= FULL_MIXING:
        raise RangeError(f"mixing parameter p must lie in [0, {FULL_MIXING}] (got {p!r})")
    vec = coeffs.as_vector()
    projector = np.outer(vec, vec.conjugate())
    return (p / 3.0) * np.eye(4) + (1.0 - 4.0 * p / 3.0) * projector


def check_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Validate the 4x4 density-matrix invariants and return the array.

    Hermitian within 1e-12 entrywise, unit trace within 1e-12, eigenvalues
    above -1e-10.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise ValueError(f"density matrix must be 4x4 (got shape {rho.shape})")
    herm = float(np.max(np.abs(rho - rho.conjugate().T)))
    if herm > _HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian (max deviation {herm:.3e})")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > _TRACE_TOL:
        raise ValueError(f"trace must be 1 (got {trace!r})")
    smallest = float(np.linalg.eigvalsh(rho).min())
    if smallest < _EIGENVALUE_FLOOR:
        raise ValueError(f"matrix is not positive semidefinite (min eig {smallest:.3e})")
    return rho


def concurrence_mixed(rho: np.ndarray) -> float:
    """Wootters concurrence of a 4x4 density matrix."""
    rho = check_density_matrix(rho)
    rho_tilde = _SY_SY @ rho.conjugate() @ _SY_SY
    eigenvalues = np.linalg.eigvals(rho @ rho_tilde)
    worst_imag = float(np.max(np.abs(eigenvalues.imag)))
    if worst_imag > _IMAG_EIGENVALUE_TOL:
        raise NumericalFailureError(
            f"eigenvalues of rho*rho_tilde are materially complex ({worst_imag:.3e})"
        )
    real_parts = eigenvalues.real
    if float(real_parts.min()) < _EIGENVALUE_FLOOR:
        raise NumericalFailureError(
            f"eigenvalue of rho*rho_tilde below floor ({real_parts.min():.3e})"
        )
    lams = np.sort(np.sqrt(np.clip(real_parts, 0.0, None)))[::-1]
    return min(1.0, max(0.0, float(lams[0] - lams[1] - lams[2] - lams[3])))


def concurrence_x_state(rho: np.ndarray) -> float:
    """Closed-form concurrence 2 max(0, |z| - sqrt(u+ u-)) for symmetric X states.

    Requires every entry off the diagonal and anti-diagonal to vanish, the two
    inner diagonal entries to be equal, the inner off-diagonal entry to be
    real, and the anti-diagonal corners to vanish; reads u+ = rho[0,0],
    u- = rho[3,3], z = rho[1,2].
    """
    rho = check_density_matrix(rho)
    off_mask = np.ones((4, 4), dtype=bool)
    off_mask[np.arange(4), np.arange(4)] = False
    off_mask[np.arange(4), 3 - np.arange(4)] = False
    stray = float(np.max(np.abs(rho[off_mask])))
    if stray > _X_SHAPE_TOL:
        raise XShapeError(f"matrix is not X-shaped (stray entry {stray:.3e})")
    if abs(rho[0, 3]) > _X_SHAPE_TOL:
        raise XShapeError("anti-diagonal corners must vanish in the symmetric form")
    if abs(rho[1, 1] - rho[2, 2]) > _X_SHAPE_TOL:
        raise XShapeError("inner diagonal entries must be equal in the symmetric form")
    if abs(rho[1, 2].imag) > _X_SHAPE_TOL:
        raise XShapeError("inner off-diagonal entry must be real in the symmetric form")
    u_plus = max(0.0, float(rho[0, 0].real))
    u_minus = max(0.0, float(rho[3, 3].real))
    z = float(rho[1, 2].real)
    return min(1.0, 2.0 * max(0.0, abs(z) - math.sqrt(u_plus * u_minus)))
