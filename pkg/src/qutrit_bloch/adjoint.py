"""Adjoint action of SU(2) and SU(3) on coherence vectors, and Haar sampling.

Conjugation rho -> U rho U^dag acts on Bloch vectors as the real matrix

    Ad(U)_ij = (1/2) Tr(sigma_i U sigma_j U^dag)        (SU(2) -> SO(3))
    Ad(U)_ij = (1/2) Tr(lambda_i U lambda_j U^dag)      (SU(3) -> SO(8))

computed densely from the trace formula.  Ad(SU(3)) is only an 8-parameter
subgroup of SO(8); this module certifies the necessary conditions
(orthogonality, unit determinant) but does not decide membership.

Haar-random special unitaries come from QR orthonormalization of a complex
Gaussian matrix with the R-diagonal phase fix, then a global det-normalizing
phase.  The generator is numpy's default PCG64; a given seed reproduces the
same matrices on every platform, which is part of the public contract.
"""

from __future__ import annotations

import numpy as np

from .bloch import DEFAULT_TOL, ValidationError, as_bloch_vector, is_mixed_state
from .gellmann import _LAMBDA

UNITARY_TOL = 1e-12

_PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
_PAULI.flags.writeable = False


def _validate_special_unitary(u, dim: int, tol: float = UNITARY_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape != (dim, dim):
        raise ValidationError(f"expected a {dim}x{dim} matrix, got shape {u.shape}")
    dev = float(np.max(np.abs(u.conj().T @ u - np.eye(dim))))
    if dev > tol:
        raise ValidationError(f"not unitary: max |U^dag U - I| = {dev:.3e}")
    det = complex(np.linalg.det(u))
    if abs(det - 1.0) > tol:
        raise ValidationError(f"not special unitary: det = {det:.17g}")
    return u


def adjoint_su3(u) -> np.ndarray:
    """The 8x8 rotation Ad(U)_ij = (1/2) Tr(lambda_i U lambda_j U^dag)."""
    u = _validate_special_unitary(u, 3)
    return 0.5 * np.real(np.einsum("iab,bc,jcd,ad->ij", _LAMBDA, u, _LAMBDA, u.conj()))


def adjoint_su2(u) -> np.ndarray:
    """The 3x3 rotation Ad(U)_ij = (1/2) Tr(sigma_i U sigma_j U^dag)."""
    u = _validate_special_unitary(u, 2)
    return 0.5 * np.real(np.einsum("iab,bc,jcd,ad->ij", _PAULI, u, _PAULI, u.conj()))


def _haar_special_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    q = q * (diag / np.abs(diag))
    det = complex(np.linalg.det(q))
    return q * np.exp(-1j * np.angle(det) / dim)


def haar_random_su3(seed: int) -> np.ndarray:
    """Haar-distributed SU(3) element, deterministic for a fixed seed."""
    return _haar_special_unitary(3, np.random.default_rng(seed))


def haar_random_su2(seed: int) -> np.ndarray:
    """Haar-distributed SU(2) element, deterministic for a fixed seed."""
    return _haar_special_unitary(2, np.random.default_rng(seed))


def orbit_sample(n, count: int, seed: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Sample the unitary orbit of a state: rows Ad(U_i) n for Haar U_i.

    Every output parametrizes a state with the same spectrum as n.  The
    sampler owns a private generator, so concurrent calls with distinct seeds
    are independent and a fixed (n, count, seed) is fully reproducible.
    """
    n = as_bloch_vector(n)
    if count < 1:
        raise ValueError("count must be at least 1")
    if not is_mixed_state(n, tol):
        raise ValidationError("orbit_sample: input is not a valid state")
    rng = np.random.default_rng(seed)
    out = np.empty((count, 8))
    for i in range(count):
        out[i] = adjoint_su3(_haar_special_unitary(3, rng)) @ n
    return out
