"""Dense complex linear algebra helpers for few-qubit density matrices.

Everything here operates on plain numpy arrays (complex128) of dimension
2, 4 or 16.  The routines are thin, deterministic wrappers around numpy's
Hermitian eigensolver plus the index bookkeeping (qubit permutation,
partial transpose) that numpy does not provide directly.

Conventions
-----------
Qubits are numbered 1..n with qubit 1 the *most significant* bit of the
computational basis index, so for two qubits |01> is index 1 and for four
qubits |0011> is index 3.
"""

from typing import Iterable, NamedTuple, Sequence

import numpy as np

HERM_TOL = 1e-10


class NotHermitian(ValueError):
    """Input matrix fails the Hermiticity tolerance."""


class DimensionMismatch(ValueError):
    """Matrix dimension incompatible with the requested qubit structure."""


class HermEig(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    eigenvalues are ascending; column k of ``eigenvectors`` belongs to
    eigenvalue k, and the columns are orthonormal.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def _check_hermitian(a: np.ndarray, tol: float = HERM_TOL) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    dev = np.abs(a - dagger(a)).max()
    if dev > tol:
        raise NotHermitian(f"max |a - a^dag| = {dev:.3e} exceeds {tol:.1e}")
    return a


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; block (i, j) of the result is a[i, j] * b."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def herm_eig(a: np.ndarray) -> HermEig:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises NotHermitian if the input deviates from Hermiticity by more
    than 1e-10 in any entry.  Deterministic for identical inputs (LAPACK
    ``eigh`` on a fixed matrix).
    """
    a = _check_hermitian(a)
    w, v = np.linalg.eigh(a)
    return HermEig(w, v)


def expm_hermitian(a: np.ndarray, s: float = 1.0) -> np.ndarray:
    """exp(s*a) = V diag(e^{s*lambda}) V^dag for Hermitian a."""
    if not np.isfinite(s):
        raise ValueError("scale factor must be finite")
    w, v = herm_eig(a)
    return (v * np.exp(s * w)) @ dagger(v)


def _qubit_count(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise DimensionMismatch(f"dimension {dim} is not a power of two")
    return n


def permute_qubits(a: np.ndarray, perm: Sequence[int]) -> np.ndarray:
    """Relabel qubits of an n-qubit operator.

    ``perm`` is a bijection on {1..n}: qubit p of the input becomes qubit
    perm[p-1] of the output.  Acting on a density matrix this is P a P^dag
    for the corresponding basis-permutation unitary P.  A transposition
    (e.g. (1, 3, 2, 4), which swaps qubits 2 and 3) is its own inverse.
    """
    a = np.asarray(a, dtype=complex)
    n = _qubit_count(a.shape[0])
    if sorted(perm) != list(range(1, n + 1)):
        raise DimensionMismatch(
            f"perm {tuple(perm)} is not a bijection on 1..{n} for dim {a.shape[0]}"
        )
    # basis index i maps to j by moving bit p (1-based, MSB first) to
    # position perm[p-1]
    mapping = np.zeros(a.shape[0], dtype=int)
    for i in range(a.shape[0]):
        j = 0
        for p in range(1, n + 1):
            bit = (i >> (n - p)) & 1
            j |= bit << (n - perm[p - 1])
        mapping[i] = j
    out = np.empty_like(a)
    out[np.ix_(mapping, mapping)] = a
    return out


def partial_transpose(a: np.ndarray, subsystem: Iterable[int]) -> np.ndarray:
    """Transpose only the listed qubits (1-based) of an n-qubit operator.

    Involution: applying twice with the same subsystem returns the input.
    The trace is preserved.
    """
    a = np.asarray(a, dtype=complex)
    n = _qubit_count(a.shape[0])
    subsystem = set(subsystem)
    if not subsystem <= set(range(1, n + 1)):
        raise DimensionMismatch(f"subsystem {subsystem} not within qubits 1..{n}")
    t = a.reshape((2,) * (2 * n))
    # axes 0..n-1 are row (ket) qubit indices, n..2n-1 column (bra) indices
    axes = list(range(2 * n))
    for q in subsystem:
        axes[q - 1], axes[n + q - 1] = axes[n + q - 1], axes[q - 1]
    return t.transpose(axes).reshape(a.shape)


def trace_norm(a: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    a = _check_hermitian(a)
    return float(np.abs(np.linalg.eigvalsh(a)).sum())
