"""Gell-Mann basis of su(3) and its structure-constant tensors.

The eight Hermitian traceless generators lambda_1..lambda_8 are normalized so
that Tr(lambda_i lambda_j) = 2 delta_ij.  Their products close through two
real rank-3 tensors, the totally antisymmetric f and the totally symmetric d:

    lambda_j lambda_k = (2/3) delta_jk I + sum_l d_jkl lambda_l
                        + i sum_l f_jkl lambda_l

Ground truth for f and d is the irreducible table of nonzero entries (one
representative per index set); lookups and the dense tensors are derived from
it by (anti)symmetry.  All public indices are 1-based; the tables stay
auditable entry by entry.
"""

from __future__ import annotations

import math

import numpy as np

SQRT3 = math.sqrt(3.0)

_LAMBDA = np.array(
    [
        [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
        [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]],
        [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]],
        [[1, 0, 0], [0, 1, 0], [0, 0, -2]],
    ],
    dtype=complex,
)
_LAMBDA[7] /= SQRT3
_LAMBDA.flags.writeable = False

# Independent nonzero entries.  f extends antisymmetrically, d symmetrically;
# every untabulated index set is zero.
_F_TABLE = {
    (1, 2, 3): 1.0,
    (4, 5, 8): SQRT3 / 2,
    (6, 7, 8): SQRT3 / 2,
    (1, 4, 7): 0.5,
    (2, 4, 6): 0.5,
    (2, 5, 7): 0.5,
    (3, 4, 5): 0.5,
    (5, 1, 6): 0.5,
    (6, 3, 7): 0.5,
}
_D_TABLE = {
    (1, 1, 8): 1 / SQRT3,
    (2, 2, 8): 1 / SQRT3,
    (3, 3, 8): 1 / SQRT3,
    (8, 8, 8): -1 / SQRT3,
    (4, 4, 8): -1 / (2 * SQRT3),
    (5, 5, 8): -1 / (2 * SQRT3),
    (6, 6, 8): -1 / (2 * SQRT3),
    (7, 7, 8): -1 / (2 * SQRT3),
    (1, 4, 6): 0.5,
    (1, 5, 7): 0.5,
    (2, 4, 7): -0.5,
    (2, 5, 6): 0.5,
    (3, 4, 4): 0.5,
    (3, 5, 5): 0.5,
    (3, 6, 6): -0.5,
    (3, 7, 7): -0.5,
}


def _sort_with_parity(j: int, k: int, l: int) -> tuple[tuple[int, int, int], int]:
    """Ascending rearrangement of (j, k, l) and the sign of the permutation."""
    idx = [j, k, l]
    sign = 1
    for a in range(2):
        for b in range(2 - a):
            if idx[b] > idx[b + 1]:
                idx[b], idx[b + 1] = idx[b + 1], idx[b]
                sign = -sign
    return (idx[0], idx[1], idx[2]), sign


def _canonicalize(table: dict, antisymmetric: bool) -> dict:
    canon: dict[tuple[int, int, int], float] = {}
    for key, value in table.items():
        sorted_key, sign = _sort_with_parity(*key)
        canon[sorted_key] = value * (sign if antisymmetric else 1)
    return canon


_F_CANON = _canonicalize(_F_TABLE, antisymmetric=True)
_D_CANON = _canonicalize(_D_TABLE, antisymmetric=False)


def _check_index(i: int) -> int:
    i = int(i)
    if not 1 <= i <= 8:
        raise ValueError(f"Gell-Mann index must be in 1..8, got {i}")
    return i


def gell_mann(i: int) -> np.ndarray:
    """Return the i-th Gell-Mann matrix (1-based), as a read-only 3x3 array."""
    return _LAMBDA[_check_index(i) - 1]


def basis() -> np.ndarray:
    """The full (8, 3, 3) stack of Gell-Mann matrices, read-only."""
    return _LAMBDA


def f_symbol(j: int, k: int, l: int) -> float:
    """Totally antisymmetric structure constant f_jkl."""
    j, k, l = _check_index(j), _check_index(k), _check_index(l)
    if j == k or k == l or j == l:
        return 0.0
    key, sign = _sort_with_parity(j, k, l)
    return sign * _F_CANON.get(key, 0.0)


def d_symbol(j: int, k: int, l: int) -> float:
    """Totally symmetric invariant tensor d_jkl."""
    j, k, l = _check_index(j), _check_index(k), _check_index(l)
    return _D_CANON.get(tuple(sorted((j, k, l))), 0.0)


def _dense(canon: dict, antisymmetric: bool) -> np.ndarray:
    t = np.zeros((8, 8, 8))
    for j in range(1, 9):
        for k in range(1, 9):
            for l in range(1, 9):
                if antisymmetric:
                    if j == k or k == l or j == l:
                        continue
                    key, sign = _sort_with_parity(j, k, l)
                    t[j - 1, k - 1, l - 1] = sign * canon.get(key, 0.0)
                else:
                    t[j - 1, k - 1, l - 1] = canon.get(tuple(sorted((j, k, l))), 0.0)
    t.flags.writeable = False
    return t


_F_DENSE = _dense(_F_CANON, antisymmetric=True)
_D_DENSE = _dense(_D_CANON, antisymmetric=False)


def f_tensor() -> np.ndarray:
    """Dense (8, 8, 8) f tensor (0-based axes), read-only."""
    return _F_DENSE


def d_tensor() -> np.ndarray:
    """Dense (8, 8, 8) d tensor (0-based axes), read-only."""
    return _D_DENSE


def product_expansion(j: int, k: int) -> np.ndarray:
    """Reconstruct lambda_j lambda_k from the f and d tables.

    Evaluates (2/3) delta_jk I + sum_l (d_jkl + i f_jkl) lambda_l, which must
    coincide with the direct matrix product.
    """
    j, k = _check_index(j), _check_index(k)
    coeff = _D_DENSE[j - 1, k - 1] + 1j * _F_DENSE[j - 1, k - 1]
    out = np.tensordot(coeff, _LAMBDA, axes=(0, 0))
    if j == k:
        out = out + (2.0 / 3.0) * np.eye(3)
    return out
