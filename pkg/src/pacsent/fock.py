"""Brute-force verification in a truncated Fock space.

Independent of every closed form in :mod:`pacsent.specfun` and
:mod:`pacsent.embedding`: states are built as explicit photon-number
amplitude arrays, overlaps as literal inner products, and the concurrence
of the bipartite superposition from the singular values of its two-mode
amplitude matrix.  Truncation is certified, not assumed.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln

from .embedding import SuperpositionSpec
from .errors import DegenerateSpecError, RankViolationError, TruncationError

_MIN_DIM = 16
_TAIL_WIDTH = 10
_TAIL_BOUND = 1e-20
# Mass allowed to shift past the truncation edge per creation-operator
# application, relative to the vector norm.
_CREATE_LOSS_BOUND = 1e-16
_MAX_DIM = 2048  # keeps the oracle SVD desk-scale


def coherent_fock(alpha: complex, dim: int) -> np.ndarray:
    """Coherent-state amplitudes e^{-|alpha|^2/2} alpha^k / sqrt(k!) for k < dim.

    The last ``10`` amplitudes must carry squared mass below ``1e-20`` or a
    :class:`TruncationError` is raised (the truncation is certified).
    """
    if int(dim) != dim or dim < _MIN_DIM:
        raise TruncationError(f"dim must be an integer >= {_MIN_DIM}")
    dim = int(dim)
    alpha = complex(alpha)
    amps = np.zeros(dim, dtype=np.complex128)
    if alpha == 0:
        amps[0] = 1.0
    else:
        k = np.arange(dim)
        log_mag = -0.5 * abs(alpha) ** 2 + k * math.log(abs(alpha)) - 0.5 * gammaln(k + 1)
        amps[:] = np.exp(log_mag + 1j * k * np.angle(alpha))
    tail = float(np.sum(np.abs(amps[dim - _TAIL_WIDTH :]) ** 2))
    if tail >= _TAIL_BOUND:
        raise TruncationError(
            f"coherent tail mass {tail:.3e} not certified below {_TAIL_BOUND:g} "
            f"at dim={dim}; increase the truncation"
        )
    return amps


def create(vec: np.ndarray, times: int) -> np.ndarray:
    """Apply the creation operator ``times`` times: amp_k <- sqrt(k) amp_{k-1}.

    The result is deliberately not normalized.  Raises
    :class:`TruncationError` if non-negligible amplitude would be pushed past
    the truncation edge.
    """
    if int(times) != times or times < 0:
        raise ValueError("times must be a nonnegative integer")
    v = np.asarray(vec, dtype=np.complex128).copy()
    dim = v.shape[0]
    roots = np.sqrt(np.arange(dim))
    for _ in range(int(times)):
        norm2 = float(np.vdot(v, v).real)
        lost = abs(v[-1]) ** 2 * dim
        if lost > _CREATE_LOSS_BOUND * norm2:
            raise TruncationError(
                "creation operator would push certified support past the "
                f"truncation edge (relative loss {lost / norm2:.3e})"
            )
        v[1:] = roots[1:] * v[:-1]
        v[0] = 0.0
    return v


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """Fock-space inner product <u|v> = sum_k conj(u_k) v_k."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return complex(np.vdot(u, v))


def recommended_dim(spec: SuperpositionSpec) -> int:
    """Truncation size for ``superposition_state`` from the tail-bound heuristic.

    Per branch amplitude x the heuristic is |x|^2 + 10|x| + 50, plus headroom
    for the added photons; the certification in :func:`coherent_fock` and
    :func:`create` then turns the heuristic into a checked property.
    """
    a = abs(spec.effective_alpha)
    b = abs(spec.effective_beta)
    base = max(a * a + 10.0 * a, b * b + 10.0 * b) + 50.0
    dim = int(math.ceil(base)) + spec.m + spec.n
    dim = max(dim, _MIN_DIM)
    if dim > _MAX_DIM:
        raise TruncationError(
            f"oracle truncation dim {dim} exceeds the practical limit {_MAX_DIM}"
        )
    return dim


def superposition_state(spec: SuperpositionSpec, dim: int | None = None) -> np.ndarray:
    """Normalized two-mode amplitude matrix of the bipartite superposition.

    Entry (j, k) is the amplitude of |j>_A |k>_B in
    u (a^dag^m |alpha'>)(b^dag^n |beta'>) + v (a^dag^n |beta'>)(b^dag^m |alpha'>)
    with the displacement folded into alpha' = alpha + gamma,
    beta' = beta - gamma.
    """
    if dim is None:
        dim = recommended_dim(spec)
    branch_a = create(coherent_fock(spec.effective_alpha, dim), spec.m)
    branch_b = create(coherent_fock(spec.effective_beta, dim), spec.n)
    state = spec.u * np.outer(branch_a, branch_b) + spec.v * np.outer(branch_b, branch_a)
    norm = float(np.linalg.norm(state))
    if norm < 1e-200:
        raise DegenerateSpecError(
            "superposition has zero norm (opposite weights on identical branches)"
        )
    return state / norm


def schmidt_concurrence(state: np.ndarray) -> float:
    """Concurrence 2 sigma_1 sigma_2 from the two leading singular values.

    Valid because the superposition lives in a 2x2 Schmidt subspace; a third
    singular value above 1e-8 signals a construction bug and raises
    :class:`RankViolationError`.
    """
    state = np.asarray(state, dtype=np.complex128)
    norm2 = float(np.sum(np.abs(state) ** 2))
    if abs(norm2 - 1.0) > 1e-10:
        raise ValueError(f"state must be normalized (got squared norm {norm2!r})")
    sv = np.linalg.svd(state, compute_uv=False)
    if sv.size > 2 and sv[2] > 1e-8:
        raise RankViolationError(
            f"third singular value {sv[2]:.3e} violates the rank-2 expectation"
        )
    return float(2.0 * sv[0] * sv[1])


def concurrence_oracle(spec: SuperpositionSpec, dim: int | None = None) -> float:
    """Schmidt-based concurrence of the pure superposition, fully in Fock space."""
    return schmidt_concurrence(superposition_state(spec, dim))
